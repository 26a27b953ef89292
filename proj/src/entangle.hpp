#ifndef SQUEEZE_ENTANGLE_HPP
#define SQUEEZE_ENTANGLE_HPP

#include <Eigen/Dense>
#include <cstdint>

#include "fock.hpp"

namespace sqz::ent {

using Complex = std::complex<double>;

// Complex Hermitian matrix with unit trace and nonnegative spectrum, checked
// at construction.  Eigenvalues in [-1e-12, 0) are clamped to zero.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd rho);

  int dim() const { return int(rho_.rows()); }
  const Eigen::MatrixXcd& entries() const { return rho_; }
  const Eigen::VectorXd& eigenvalues() const { return eigs_; }
  double max_abs_diff(const DensityMatrix& rhs) const;

 private:
  Eigen::MatrixXcd rho_;
  Eigen::VectorXd eigs_;
};

// (rho_a)_{mn} = sum_r c[m][r] c[n][r]*.  Rejects states whose norm is off
// by more than 1e-8.
DensityMatrix partial_trace_b(const fock::TwoModeState& s);

// -Tr(rho ln rho) in nats.
double von_neumann_entropy(const DensityMatrix& rho);

// Tr(rho a+ a): mean quanta of the mode.
double reduced_energy(const DensityMatrix& rho);

// Truncated Gibbs density e^{-tau n}/Z over the retained levels.
struct GibbsDensity {
  double tau;
  double z_truncated;
  double z_exact;  // (1 - e^{-tau})^{-1}
  Eigen::VectorXd probs;
  DensityMatrix to_density() const;
};
GibbsDensity gibbs_density(double tau, fock::FockCutoff cutoff);

// S(tau) = tau/(e^tau - 1) - ln(1 - e^{-tau}).
double entropy_closed_form(double tau);
// E(tau) = (e^tau - 1)^{-1}.
double energy_closed_form(double tau);

// Builds D_a(xi) D_b(eta) |tmss(tau)> for two different eta, reduces both,
// and compares against D f D+.  The reduced density is eta-independent.
struct DisplacedGibbsReport {
  double dev_vs_reference;
  double dev_eta_independence;
  double entropy;
};
DisplacedGibbsReport displaced_gibbs_check(Complex xi, double tau,
                                           fock::FockCutoff cutoff);

// One point of the chi-parametrized curve: E = (chi-1)/2 and
// S = [(chi+1)ln(chi+1) - (chi-1)ln(chi-1) - 2 ln 2]/2, evaluated in forms
// stable at large chi.  chi = 1 is the zero-squeezing limit.
struct EntanglementCurvePoint {
  double chi;
  double tau;
  double entropy;
  double energy;
  double lnchi;
  double delta_s;
};
EntanglementCurvePoint curve_chi(double chi);

// Equal-amplitude twin-Fock comparison state over n = 0..N-1.
fock::TwoModeState psi_n_state(int n);
struct PsiStats {
  double energy;   // (N-1)/2
  double entropy;  // ln N
};
PsiStats psi_n_stats(int n);

// S(chi = N) - ln N: the entanglement excess of the TMSS over the
// equal-weight state at equal reduced energy.  Positive for all N >= 2,
// approaching 1 - ln 2.
double tmss_entropy_excess(int n);

// Lagrange-multiplier bookkeeping on the truncated Gibbs density:
// ln Z = lambda1 E + S with lambda1 = -tau, and F = -ln(Z)/tau = E - S/tau.
struct LagrangeSolution {
  double lambda0;
  double lambda1;
  double log_z;
  double free_energy;
  double entropy;
  double energy;
  double residual_log_z;
  double residual_legendre;
};
LagrangeSolution legendre_report(double tau, fock::FockCutoff cutoff);

// Draws `samples` random two-mode pure states rescaled onto the fixed
// reduced-energy shell (deterministic mixing with the vacuum or the top
// twin-Fock component) and compares every reduced entropy against the Gibbs
// bound at that energy.  The TMSS witness is evaluated at a tail-safe cutoff.
struct MaxentReport {
  int samples;
  double energy;
  double bound;
  double max_sampled_entropy;
  double min_margin;
  double tmss_entropy;
  double tmss_gap;
  bool violated;
};
MaxentReport maxent_property_check(double energy, fock::FockCutoff cutoff,
                                   int samples, std::uint64_t seed);

}  // namespace sqz::ent

#endif
