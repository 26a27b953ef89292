#ifndef SQUEEZE_FOCK_HPP
#define SQUEEZE_FOCK_HPP

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <utility>

namespace sqz::fock {

using Complex = std::complex<double>;

// Truncation cutoff: highest occupation retained per mode.
struct FockCutoff {
  int n_max;
  explicit FockCutoff(int n) : n_max(n) {
    if (n < 1) throw std::invalid_argument("n_max must be >= 1");
  }
  int dim() const { return n_max + 1; }
};

// Hard cap on the two-mode dimension accepted by the dense squeeze
// exponential.
constexpr int kTwoModeDimCap = 4096;

// Single-mode annihilation matrix, a|n> = sqrt(n)|n-1>.
Eigen::MatrixXcd ladder_a(FockCutoff cutoff);
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> make_ladder(FockCutoff cutoff);

// Probability weight of the coherent state |xi> beyond the cutoff.
double coherent_tail_weight(Complex xi, FockCutoff cutoff);

// D(xi) = exp(xi a+ - xi* a), unitary on the truncated space.
Eigen::MatrixXcd displacement_operator(Complex xi, FockCutoff cutoff);

// gamma (a+ b+ - a b) on the product space, index m*(n_max+1)+n.
Eigen::MatrixXcd squeeze_generator(double gamma, FockCutoff cutoff);

// Dense exponential of the truncated generator.  Exactly unitary; its edge
// rows differ from the untruncated operator (see SqueezeBlocks for converged
// matrix elements).
Eigen::MatrixXcd squeeze_expm(double gamma, FockCutoff cutoff);

// Normalized two-mode amplitude grid c(m, n) plus the discarded tail weight.
class TwoModeState {
 public:
  static TwoModeState normalized(Eigen::MatrixXcd raw);

  int dim_a() const { return int(amps_.rows()); }
  int dim_b() const { return int(amps_.cols()); }
  const Eigen::MatrixXcd& amplitudes() const { return amps_; }
  Complex amplitude(int m, int n) const { return amps_(m, n); }
  double tail_weight() const { return tail_; }

  double norm() const;
  // Mean mode-a occupation <a+ a>.
  double mode_a_energy() const;
  double max_amplitude_diff(const TwoModeState& rhs) const;

 private:
  TwoModeState(Eigen::MatrixXcd amps, double tail)
      : amps_(std::move(amps)), tail_(tail) {}
  Eigen::MatrixXcd amps_;
  double tail_;
};

// The equivalent squeeze parametrizations.  gamma = 0 maps to tau = inf,
// chi = 1 (zero squeezing); tau -> 0+ maps to gamma, chi -> inf.
struct SqueezeParametrization {
  double gamma;
  double tau;
  double chi;
};
SqueezeParametrization param_from_gamma(double gamma);
SqueezeParametrization param_from_tau(double tau);
SqueezeParametrization param_from_chi(double chi);

// Analytic tail weight of the TMSS at a cutoff: tanh(gamma)^{2(n_max+1)}.
double tmss_tail_weight(double gamma, FockCutoff cutoff);

// Three construction routes for the two-mode squeezed vacuum.
TwoModeState tmss_bch(double gamma, FockCutoff cutoff);
TwoModeState tmss_fock(double tau, FockCutoff cutoff);
// Matrix-exponential route, evaluated with a guard band wide enough that the
// retained amplitudes are converged to the untruncated operator's action.
TwoModeState tmss_expm_route(double gamma, FockCutoff cutoff);

struct DisplacementParams {
  Complex xi;
  Complex eta;
};

// Caves-Schumaker state S(gamma) D_a(xi) D_b(eta) |00>.  The squeeze factor
// is applied through its normal-ordered factorization, which acts exactly on
// the retained grid.
TwoModeState cs_state(const DisplacementParams& p, double gamma,
                      FockCutoff cutoff);

// D_a(xi) D_b(eta) applied to an existing state (displaced-after family).
TwoModeState displace_state(const TwoModeState& s, Complex xi, Complex eta);

enum class StatisticsKind { boson, fermion };

struct BogoliubovMatrix {
  Eigen::Matrix2d entries;
  StatisticsKind kind;
  double determinant() const { return entries.determinant(); }
};

// Matrix form associated to the squeeze: hyperbolic for bosons, a rotation
// for fermions.
BogoliubovMatrix bogoliubov_matrix(double gamma, StatisticsKind kind);

// Parameters (xi_bar, eta_bar) with S D_a(xi) D_b(eta) = D_a(xi_bar)
// D_b(eta_bar) S.  For bosons the pair transforms with (u, v; v, u) applied
// to (xi, eta*); the hyperbolic matrix above is the inverse map.  For
// fermions the rotation applies as-is to (alpha, beta*).
DisplacementParams bogoliubov_transform_params(const DisplacementParams& p,
                                               double gamma,
                                               StatisticsKind kind);

// Lazily evaluated blocks of exp(gamma (a+b+ - ab)) at occupation cutoff
// `guard_n_max`.  The generator conserves the occupation difference d = m-n,
// so the exponential is block-diagonal over d and each block is the
// exponential of an antisymmetric tridiagonal matrix.
class SqueezeBlocks {
 public:
  SqueezeBlocks(double gamma, int guard_n_max);

  int guard_n_max() const { return guard_; }
  int block_size(int d) const { return guard_ - std::abs(d) + 1; }
  // Block index k corresponds to the state (k + max(d,0), k + max(-d,0)).
  const Eigen::MatrixXd& block(int d) const;
  double entry(int m, int n, int p, int q) const;
  Eigen::MatrixXcd assemble_dense(int n_max) const;

 private:
  double gamma_;
  int guard_;
  mutable std::map<int, Eigen::MatrixXd> blocks_;
};

// Guard band wide enough that matrix elements of the squeeze restricted to
// occupations <= n_max are converged to ~eps amplitude error.
int converged_guard(double gamma, int n_max, double log_eps = -30.0);

// Residuals of the operator-level Bogoliubov relations on the safe subspace
// (occupations <= n_max/2), evaluated with a guard-banded exponential, plus
// the unitarity defect of the truncated dense exponential.
struct BogoliubovOperatorReport {
  double dev_a;        // S a S+ - (u a - v b+)
  double dev_b;        // S b S+ - (u b - v a+)
  double dev_comm_aa;  // [a(g), a+(g)] - 1
  double dev_comm_bb;  // [b(g), b+(g)] - 1
  double dev_comm_ab;  // [a(g), b(g)]
  double unitarity;    // ||S S+ - 1||_max, truncated exponential
  int guard;
};

BogoliubovOperatorReport bogoliubov_operator_check(double gamma,
                                                   FockCutoff cutoff);

}  // namespace sqz::fock

#endif
