#ifndef SQUEEZE_SUPEROP_HPP
#define SQUEEZE_SUPEROP_HPP

#include <Eigen/Dense>
#include <map>

#include "grassmann.hpp"

namespace sqz::grassmann {

// Grassmann-coefficient operator on a fermionic Fock space of dimension 2
// (one mode) or 4 (two modes, basis |n_a n_b> indexed 2*n_a + n_b).
//
// Internally an element of the Z2-graded tensor product End(Fock) (x) Lambda,
// stored as monomial -> matrix.  The product carries the Koszul sign
// (A (x) x)(B (x) y) = (-1)^{|x||B|} AB (x) xy per Fock-parity-homogeneous
// part of B, which realizes {g, a} = {g, a+} = 0 for every generator g.
class SuperOperator {
 public:
  SuperOperator(GeneratorSetPtr gens, int fock_dim);

  static SuperOperator identity(GeneratorSetPtr gens, int fock_dim);
  static SuperOperator from_matrix(GeneratorSetPtr gens,
                                   const Eigen::MatrixXcd& mat);
  // Embeds a Grassmann element as 1 (x) x.
  static SuperOperator from_element(int fock_dim, const Element& x);

  // Basis-state parity: occupation sum mod 2 (= popcount of the index).
  static int fock_parity(int index) { return std::popcount(unsigned(index)) & 1; }

  int fock_dim() const { return dim_; }
  const GeneratorSetPtr& generators() const { return gens_; }
  const std::map<Monomial, Eigen::MatrixXcd>& terms() const { return terms_; }

  SuperOperator operator+(const SuperOperator& rhs) const;
  SuperOperator operator-(const SuperOperator& rhs) const;
  SuperOperator operator*(const SuperOperator& rhs) const;
  SuperOperator operator*(Complex c) const;
  SuperOperator operator-() const { return *this * Complex(-1.0, 0.0); }

  // Antilinear anti-automorphism: reverses factors, daggers the Fock matrix,
  // conjugates Grassmann numbers and scalars.
  SuperOperator dagger() const;

  // Plain trace over the Fock factor.  With this convention the antiperiodic
  // identities of the fermionic coherent calculus come out exactly
  // (Tr |a><b| = <b|-a>).
  Element trace() const;

  // Matrix element <m|X|n> with the Grassmann coefficient read off after
  // moving it across the bra, i.e. coefficient sign (-1)^{|x| p(n)}.
  Element matrix_element(int m, int n) const;

  // Partial trace over the second mode (dim 4 -> 2), plain per-entry sum.
  SuperOperator partial_trace_b() const;

  bool is_zero() const { return terms_.empty(); }
  double max_abs_diff(const SuperOperator& rhs) const;
  double max_abs() const;

  std::string to_string() const;

 private:
  void insert(Monomial m, const Eigen::MatrixXcd& mat);
  void check_compat(const SuperOperator& rhs) const;

  GeneratorSetPtr gens_;
  int dim_;
  std::map<Monomial, Eigen::MatrixXcd> terms_;
};

inline SuperOperator operator*(Complex c, const SuperOperator& x) { return x * c; }

// Finite power series for nilpotent exponents; throws if X^k does not vanish
// by max_order.  Exact for Grassmann displacement generators.
SuperOperator super_exp_nilpotent(const SuperOperator& x, int max_order = 8);

// Fermionic mode matrices.  One mode: a|1> = |0>.  Two modes use the
// Jordan-Wigner form a = a1 (x) 1, b = diag(1,-1) (x) a1 so that {a, b} = 0.
Eigen::MatrixXcd fermion_mode_a(int fock_dim);
Eigen::MatrixXcd fermion_mode_b();  // fock_dim 4 only

}  // namespace sqz::grassmann

#endif
