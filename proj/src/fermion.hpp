#ifndef SQUEEZE_FERMION_HPP
#define SQUEEZE_FERMION_HPP

#include <utility>

#include "superop.hpp"

namespace sqz::fermion {

using grassmann::Complex;
using grassmann::Element;
using grassmann::GeneratorSetPtr;
using grassmann::SuperOperator;

// Canonical two-mode generator set {alpha, alpha*, beta, beta*}; all
// constructions in this module close within it.
GeneratorSetPtr default_generators();
inline constexpr std::size_t kAlpha = 0;
inline constexpr std::size_t kAlphaStar = 1;
inline constexpr std::size_t kBeta = 2;
inline constexpr std::size_t kBetaStar = 3;

// Grassmann-valued state vector, held as the column |psi><0| of the
// superalgebra so that operator application and daggers inherit the algebra's
// sign bookkeeping.
class FermionState {
 public:
  static FermionState vacuum(GeneratorSetPtr gens, int fock_dim);
  static FermionState basis(GeneratorSetPtr gens, int fock_dim, int n);
  static FermionState from_column(SuperOperator column);

  int fock_dim() const { return column_.fock_dim(); }
  const SuperOperator& column() const { return column_; }

  // Ket-expansion coefficient of |n> with the Grassmann factor written to
  // the left of the ket.
  Element amplitude(int n) const;

  // <this|other>.
  Element overlap(const FermionState& other) const;
  // |this><other|.
  SuperOperator density_with(const FermionState& bra) const;

  // True when every amplitude is a plain scalar; only physical states feed
  // the numeric entropy path.
  bool is_physical() const;
  Eigen::VectorXcd to_vector() const;

 private:
  explicit FermionState(SuperOperator column) : column_(std::move(column)) {}
  SuperOperator column_;
};

FermionState apply(const SuperOperator& op, const FermionState& s);

// exp(m+ alpha - alpha* m) for a mode matrix m and an odd displacement
// element alpha; exact finite series.
SuperOperator displacement(const Eigen::MatrixXcd& mode_matrix,
                           const Element& alpha);
SuperOperator displacement_a(GeneratorSetPtr gens, int fock_dim,
                             const Element& alpha);
SuperOperator displacement_b(GeneratorSetPtr gens, const Element& beta);

// |alpha> = D(alpha)|0>, one mode.
FermionState coherent_state(GeneratorSetPtr gens, const Element& alpha);

// rho_alpha = |-alpha><alpha|.
SuperOperator rho_alpha(GeneratorSetPtr gens, const Element& alpha);

// D(alpha)|n> for n in {0, 1}; equals (a+ - alpha*)^n |alpha>.
FermionState displaced_number_state(GeneratorSetPtr gens, const Element& alpha,
                                    int n);

// Numeric 4x4 two-mode squeeze: rotation by gamma on span{|00>, |11>},
// identity on the odd sector.  The generator squares to -1 there, so the
// exponential series sums to cos/sin exactly.
Eigen::MatrixXcd fermion_squeeze_matrix(double gamma);
SuperOperator fermion_squeeze(GeneratorSetPtr gens, double gamma);

// cos(gamma) = (1 + e^{-tau})^{-1/2}; gamma in (0, pi/4] for tau in [0, inf).
double gamma_from_tau(double tau);

// f_a(tau) = diag(1, e^{-tau})/Z with Z = 1 + e^{-tau}.
struct FermionGibbs {
  double tau;
  double z;
  Eigen::Matrix2cd matrix() const;
};
FermionGibbs fermion_gibbs(double tau);

// sqrt(f_a) (|0>|0> + e^{-tau/2}|1>|1>)-type two-mode squeezed vacuum;
// tau >= 0 (tau = 0 is the maximally entangled point).
FermionState fermion_tmss(GeneratorSetPtr gens, double tau);

// Residual of S D_a(alpha') D_b(beta') = D_a(albar) D_b(bebar) S with the
// rotated parameters; alpha' = ca * alpha, beta' = cb * beta.
double cs_intertwining_residual(GeneratorSetPtr gens, double gamma,
                                Complex ca = Complex(1.0, 0.0),
                                Complex cb = Complex(1.0, 0.0));

// Tr_b |-alpha', -beta'; gamma(tau)><gamma(tau), beta', alpha'|, the
// displaced-after family with alpha' = ca alpha, beta' = cb beta.
SuperOperator reduced_density(GeneratorSetPtr gens, double tau, Complex ca,
                              Complex cb);

// Displaced Gibbs reference D(-alpha') f(tau) D+(alpha'): the reduced
// density factorization consistent with rho_alpha = |-alpha><alpha|.
SuperOperator displaced_gibbs_reference(GeneratorSetPtr gens, double tau,
                                        Complex ca);

// Closed forms S_F(tau) = ln(1+e^{-tau}) + tau/(e^tau + 1) and
// E_F(tau) = (e^tau + 1)^{-1}, both derived from f_a.
std::pair<double, double> fermion_entropy_energy(double tau);

// (|0>|1> + e^{-tau/2}|1>|0>)/sqrt(Z): reduced density identical to the
// squeezed vacuum's, hence identical entropy and energy.
struct AltStateReport {
  double dev_density;
  double dev_entropy;
};
AltStateReport alt_state_check(double tau);

}  // namespace sqz::fermion

#endif
