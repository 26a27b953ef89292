#ifndef SQUEEZE_GRASSMANN_HPP
#define SQUEEZE_GRASSMANN_HPP

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sqz::grassmann {

using Complex = std::complex<double>;

// A canonical monomial over at most 64 generators.  Bit i set means generator
// i appears exactly once; factors are ordered by ascending generator index.
// The empty monomial (0) is the scalar unit.
using Monomial = std::uint64_t;

inline int degree(Monomial m) { return std::popcount(m); }
inline int parity(Monomial m) { return std::popcount(m) & 1; }

// Fixed, ordered set of anticommuting generators.  Every generator has a
// conjugation partner (an involution on indices); self-paired generators are
// not supported since the calculus here always works with (g, g*) pairs.
class GeneratorSet {
 public:
  GeneratorSet(std::vector<std::string> names, std::vector<std::size_t> partner);

  // Builds the set {b0, b0*, b1, b1*, ...} from base names, in that order.
  static std::shared_ptr<const GeneratorSet> conjugate_pairs(
      const std::vector<std::string>& base_names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::size_t partner(std::size_t i) const { return partner_[i]; }

  bool same_as(const GeneratorSet& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> partner_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

// Sign (+1/-1) picked up when sorting the concatenation of two canonical
// monomials into canonical order; 0 if they share a generator.
int mul_sign(Monomial a, Monomial b);

// Exact element of the exterior algebra over a fixed generator set.
// Immutable after construction; all operations return new values.
class Element {
 public:
  explicit Element(GeneratorSetPtr gens) : gens_(std::move(gens)) {}

  static Element scalar(GeneratorSetPtr gens, Complex c);
  static Element generator(GeneratorSetPtr gens, std::size_t index);
  static Element monomial(GeneratorSetPtr gens, Monomial m, Complex c);

  const GeneratorSetPtr& generators() const { return gens_; }
  const std::map<Monomial, Complex>& terms() const { return terms_; }

  Complex coeff(Monomial m) const;
  Complex scalar_part() const { return coeff(0); }

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator*(const Element& rhs) const;  // Koszul-signed product
  Element operator*(Complex c) const;
  Element operator-() const { return *this * Complex(-1.0, 0.0); }

  // Antilinear conjugation: reverses factor order, conjugates scalars, maps
  // each generator to its partner.  Involution and anti-automorphism.
  Element conjugate() const;

  // Berezin integral over one generator: monomials lacking `var` vanish;
  // otherwise `var` is moved to the front (left derivative) and stripped.
  Element berezin(std::size_t var) const;

  bool is_zero() const { return terms_.empty(); }
  // True when every term is a plain scalar (degree 0).
  bool is_scalar() const;
  int max_degree() const;
  // Parity of the element if homogeneous, -1 otherwise.
  int homogeneous_parity() const;

  double max_abs_diff(const Element& rhs) const;
  double max_abs() const;

  std::string to_string() const;

 private:
  void insert(Monomial m, Complex c);
  void check_set(const Element& rhs) const;

  GeneratorSetPtr gens_;
  std::map<Monomial, Complex> terms_;
};

inline Element operator*(Complex c, const Element& x) { return x * c; }

}  // namespace sqz::grassmann

#endif
