#include "entangle.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace sqz::ent {

namespace {
constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenFloor = -1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols())
    throw std::invalid_argument("density matrix must be square");
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho_.trace() - Complex(1.0, 0.0)) > kTraceTol)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  eigs_ = es.eigenvalues();
  for (Eigen::Index i = 0; i < eigs_.size(); ++i) {
    if (eigs_(i) < kEigenFloor)
      throw std::invalid_argument("density matrix has a negative eigenvalue");
    if (eigs_(i) < 0.0) eigs_(i) = 0.0;
  }
}

double DensityMatrix::max_abs_diff(const DensityMatrix& rhs) const {
  return (rho_ - rhs.rho_).cwiseAbs().maxCoeff();
}

DensityMatrix partial_trace_b(const fock::TwoModeState& s) {
  if (std::abs(s.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("state is not normalized");
  const Eigen::MatrixXcd& c = s.amplitudes();
  return DensityMatrix(c * c.adjoint());
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < rho.eigenvalues().size(); ++i) {
    const double lam = rho.eigenvalues()(i);
    if (lam > 0.0) s -= lam * std::log(lam);
  }
  return s;
}

double reduced_energy(const DensityMatrix& rho) {
  double e = 0.0;
  for (int n = 0; n < rho.dim(); ++n) e += double(n) * rho.entries()(n, n).real();
  return e;
}

GibbsDensity gibbs_density(double tau, fock::FockCutoff cutoff) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
  Eigen::VectorXd p(cutoff.dim());
  for (int n = 0; n < cutoff.dim(); ++n) p(n) = std::exp(-tau * n);
  const double z = p.sum();
  p /= z;
  return {tau, z, 1.0 / -std::expm1(-tau), p};
}

DensityMatrix GibbsDensity::to_density() const {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(probs.size(), probs.size());
  for (Eigen::Index n = 0; n < probs.size(); ++n) rho(n, n) = probs(n);
  return DensityMatrix(std::move(rho));
}

double entropy_closed_form(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
  return tau / std::expm1(tau) - std::log(-std::expm1(-tau));
}

double energy_closed_form(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
  return 1.0 / std::expm1(tau);
}

DisplacedGibbsReport displaced_gibbs_check(Complex xi, double tau,
                                           fock::FockCutoff cutoff) {
  const fock::TwoModeState base = fock::tmss_fock(tau, cutoff);
  const fock::TwoModeState s1 = fock::displace_state(base, xi, Complex(0.2, 0.0));
  const fock::TwoModeState s2 = fock::displace_state(base, xi, Complex(0.1, -0.3));
  const DensityMatrix r1 = partial_trace_b(s1);
  const DensityMatrix r2 = partial_trace_b(s2);

  const Eigen::MatrixXcd d = fock::displacement_operator(xi, cutoff);
  const GibbsDensity f = gibbs_density(tau, cutoff);
  Eigen::MatrixXcd ref = Eigen::MatrixXcd::Zero(cutoff.dim(), cutoff.dim());
  for (int n = 0; n < cutoff.dim(); ++n) ref += f.probs(n) * d.col(n) * d.col(n).adjoint();

  DisplacedGibbsReport rep;
  rep.dev_vs_reference =
      std::max((r1.entries() - ref).cwiseAbs().maxCoeff(),
               (r2.entries() - ref).cwiseAbs().maxCoeff());
  rep.dev_eta_independence = r1.max_abs_diff(r2);
  rep.entropy = von_neumann_entropy(r1);
  return rep;
}

EntanglementCurvePoint curve_chi(double chi) {
  if (chi < 1.0) throw std::invalid_argument("chi must be >= 1");
  if (chi == 1.0) return {1.0, kInf, 0.0, 0.0, 0.0, 0.0};
  const double tau = 2.0 * std::atanh(1.0 / chi);
  const double lnchi = std::log(chi);
  // delta_s = chi atanh(1/chi) + (1/2) ln(1 - 1/chi^2) - ln 2, which is
  // accurate at large chi where the direct difference cancels.
  const double delta_s = chi * std::atanh(1.0 / chi) +
                         0.5 * std::log1p(-1.0 / (chi * chi)) - std::log(2.0);
  return {chi, tau, delta_s + lnchi, (chi - 1.0) / 2.0, lnchi, delta_s};
}

fock::TwoModeState psi_n_state(int n) {
  if (n < 1) throw std::invalid_argument("N must be >= 1");
  const int dim = std::max(n, 2);
  Eigen::MatrixXcd raw = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < n; ++k) raw(k, k) = 1.0 / std::sqrt(double(n));
  return fock::TwoModeState::normalized(std::move(raw));
}

PsiStats psi_n_stats(int n) {
  if (n < 1) throw std::invalid_argument("N must be >= 1");
  return {(n - 1) / 2.0, std::log(double(n))};
}

double tmss_entropy_excess(int n) {
  if (n < 2) throw std::invalid_argument("N must be >= 2");
  return curve_chi(double(n)).delta_s;
}

LagrangeSolution legendre_report(double tau, fock::FockCutoff cutoff) {
  const GibbsDensity g = gibbs_density(tau, cutoff);
  double s = 0.0, e = 0.0;
  for (Eigen::Index n = 0; n < g.probs.size(); ++n) {
    if (g.probs(n) > 0.0) s -= g.probs(n) * std::log(g.probs(n));
    e += double(n) * g.probs(n);
  }
  LagrangeSolution out;
  out.lambda1 = -tau;
  out.log_z = std::log(g.z_truncated);
  out.lambda0 = 1.0 - out.log_z;
  out.free_energy = -out.log_z / tau;
  out.entropy = s;
  out.energy = e;
  out.residual_log_z = std::abs(out.log_z - (out.lambda1 * e + s));
  out.residual_legendre = std::abs(out.free_energy - (e - s / tau));
  return out;
}

namespace {

// Deterministic standard normals: explicit Box-Muller over mt19937_64 so the
// stream does not depend on the standard library's distribution internals.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : rng_(seed) {}
  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * M_PI * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

 private:
  double uniform() {
    return double(rng_() >> 11) * 0x1.0p-53;  // [0, 1)
  }
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

MaxentReport maxent_property_check(double energy, fock::FockCutoff cutoff,
                                   int samples, std::uint64_t seed) {
  if (energy < 0.0 || energy > double(cutoff.n_max))
    throw std::invalid_argument("energy must lie in [0, n_max]");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  MaxentReport rep;
  rep.samples = samples;
  rep.energy = energy;

  if (energy == 0.0) {
    // Only the vacuum sits on the zero-energy shell.
    rep.bound = 0.0;
    rep.max_sampled_entropy = 0.0;
    rep.min_margin = 0.0;
    rep.tmss_entropy = 0.0;
    rep.tmss_gap = 0.0;
    rep.violated = false;
    return rep;
  }

  const double tau = std::log1p(1.0 / energy);
  rep.bound = entropy_closed_form(tau);

  const int d = cutoff.dim();
  const int top = cutoff.n_max;
  NormalStream normals(seed);
  double max_s = 0.0;
  for (int trial = 0; trial < samples; ++trial) {
    Eigen::MatrixXcd c(d, d);
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) c(m, n) = Complex(normals.next(), normals.next());
    c(0, 0) = 0.0;
    c(top, top) = 0.0;
    c /= c.norm();
    double e_perp = 0.0;
    for (int m = 0; m < d; ++m) e_perp += double(m) * c.row(m).squaredNorm();

    Eigen::MatrixXcd psi;
    if (e_perp >= energy) {
      const double w = energy / e_perp;
      psi = std::sqrt(w) * c;
      psi(0, 0) += std::sqrt(1.0 - w);
    } else {
      const double w = (energy - e_perp) / (double(top) - e_perp);
      psi = std::sqrt(1.0 - w) * c;
      psi(top, top) += std::sqrt(w);
    }
    const fock::TwoModeState state = fock::TwoModeState::normalized(std::move(psi));
    if (std::abs(state.mode_a_energy() - energy) > 1e-10 * std::max(1.0, energy))
      throw std::runtime_error("sampler missed the energy shell");
    max_s = std::max(max_s, von_neumann_entropy(partial_trace_b(state)));
  }
  rep.max_sampled_entropy = max_s;
  rep.min_margin = rep.bound - max_s;

  // Witness: the TMSS at the same energy, evaluated where its tail is
  // negligible, attains the bound.
  const fock::FockCutoff wide(std::max(cutoff.n_max, 60));
  rep.tmss_entropy =
      von_neumann_entropy(partial_trace_b(fock::tmss_fock(tau, wide)));
  rep.tmss_gap = rep.bound - rep.tmss_entropy;
  rep.violated = max_s > rep.bound + 1e-9;
  return rep;
}

}  // namespace sqz::ent
