#include "fock.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "linalg.hpp"

namespace sqz::fock {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Eigen::MatrixXcd ladder_a(FockCutoff cutoff) {
  const int d = cutoff.dim();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> make_ladder(FockCutoff cutoff) {
  Eigen::MatrixXcd a = ladder_a(cutoff);
  return {a, a.adjoint()};
}

double coherent_tail_weight(Complex xi, FockCutoff cutoff) {
  const double x = std::norm(xi);
  if (x == 0.0) return 0.0;
  // 1 - e^{-x} sum_{n<=n_max} x^n/n!
  double term = std::exp(-x);
  double sum = term;
  for (int n = 1; n <= cutoff.n_max; ++n) {
    term *= x / double(n);
    sum += term;
  }
  return std::max(0.0, 1.0 - sum);
}

Eigen::MatrixXcd displacement_operator(Complex xi, FockCutoff cutoff) {
  if (!std::isfinite(xi.real()) || !std::isfinite(xi.imag()))
    throw std::invalid_argument("displacement parameter must be finite");
  const Eigen::MatrixXcd a = ladder_a(cutoff);
  const Eigen::MatrixXcd k = xi * a.adjoint() - std::conj(xi) * a;
  return linalg::expm_antihermitian(k);
}

Eigen::MatrixXcd squeeze_generator(double gamma, FockCutoff cutoff) {
  const Eigen::MatrixXcd a = ladder_a(cutoff);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(cutoff.dim(), cutoff.dim());
  const Eigen::MatrixXcd a2 = linalg::kron(a, id);
  const Eigen::MatrixXcd b2 = linalg::kron(id, a);
  return gamma * (a2.adjoint() * b2.adjoint() - a2 * b2);
}

Eigen::MatrixXcd squeeze_expm(double gamma, FockCutoff cutoff) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("gamma must be finite and >= 0");
  const int dim2 = cutoff.dim() * cutoff.dim();
  if (dim2 > kTwoModeDimCap)
    throw std::invalid_argument("two-mode dimension exceeds the expm cap");
  SqueezeBlocks blocks(gamma, cutoff.n_max);
  return blocks.assemble_dense(cutoff.n_max);
}

TwoModeState TwoModeState::normalized(Eigen::MatrixXcd raw) {
  const double n2 = raw.squaredNorm();
  if (n2 <= 0.0) throw std::invalid_argument("cannot normalize the zero state");
  raw /= std::sqrt(n2);
  return TwoModeState(std::move(raw), std::max(0.0, 1.0 - n2));
}

double TwoModeState::norm() const { return amps_.norm(); }

double TwoModeState::mode_a_energy() const {
  double e = 0.0;
  for (int m = 0; m < amps_.rows(); ++m)
    e += double(m) * amps_.row(m).squaredNorm();
  return e;
}

double TwoModeState::max_amplitude_diff(const TwoModeState& rhs) const {
  if (dim_a() != rhs.dim_a() || dim_b() != rhs.dim_b())
    throw std::invalid_argument("mismatched state dimensions");
  return (amps_ - rhs.amps_).cwiseAbs().maxCoeff();
}

SqueezeParametrization param_from_gamma(double gamma) {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  if (gamma == 0.0) return {0.0, kInf, 1.0};
  return {gamma, -2.0 * std::log(std::tanh(gamma)), std::cosh(2.0 * gamma)};
}

SqueezeParametrization param_from_tau(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
  return {std::atanh(std::exp(-tau / 2.0)), tau, 1.0 / std::tanh(tau / 2.0)};
}

SqueezeParametrization param_from_chi(double chi) {
  if (chi < 1.0) throw std::invalid_argument("chi must be >= 1");
  if (chi == 1.0) return {0.0, kInf, 1.0};
  const double tau = 2.0 * std::atanh(1.0 / chi);
  return {std::acosh(chi) / 2.0, tau, chi};
}

double tmss_tail_weight(double gamma, FockCutoff cutoff) {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  return std::pow(std::tanh(gamma), 2.0 * (cutoff.n_max + 1));
}

TwoModeState tmss_bch(double gamma, FockCutoff cutoff) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("gamma must be finite and >= 0");
  const int d = cutoff.dim();
  const double t = std::tanh(gamma);
  const double inv_cosh = 1.0 / std::cosh(gamma);
  Eigen::MatrixXcd raw = Eigen::MatrixXcd::Zero(d, d);
  double amp = inv_cosh;
  for (int n = 0; n < d; ++n) {
    raw(n, n) = amp;
    amp *= t;
  }
  return TwoModeState::normalized(std::move(raw));
}

TwoModeState tmss_fock(double tau, FockCutoff cutoff) {
  if (std::isnan(tau) || !(tau > 0.0))
    throw std::invalid_argument("tau must be > 0 (gamma = inf is not representable)");
  const int d = cutoff.dim();
  const double scale = std::sqrt(-std::expm1(-tau));  // 1/sqrt(Z)
  Eigen::MatrixXcd raw = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n < d; ++n) raw(n, n) = scale * std::exp(-tau * n / 2.0);
  return TwoModeState::normalized(std::move(raw));
}

TwoModeState tmss_expm_route(double gamma, FockCutoff cutoff) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("gamma must be finite and >= 0");
  const int guard = converged_guard(gamma, cutoff.n_max);
  SqueezeBlocks blocks(gamma, cutoff.n_max + guard);
  const Eigen::MatrixXd& twin = blocks.block(0);
  const int d = cutoff.dim();
  Eigen::MatrixXcd raw = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n < d; ++n) raw(n, n) = twin(n, 0);
  return TwoModeState::normalized(std::move(raw));
}

namespace {

// exp(gamma (a+b+ - ab)) applied to a grid through the factorization
// exp(t a+b+) exp(-ln(cosh) (a+a + b b+)) exp(-t ab), t = tanh gamma.  The
// lowering and raising series terminate on the truncated grid, and retained
// amplitudes only ever draw on lower retained ones, so the result matches the
// untruncated action entrywise up to the discarded raising tail.
Eigen::MatrixXcd apply_squeeze_bch(Eigen::MatrixXcd c, double gamma) {
  const int da = int(c.rows());
  const int db = int(c.cols());
  const double t = std::tanh(gamma);
  const double log_cosh = std::log(std::cosh(gamma));

  Eigen::MatrixXcd out = c;
  Eigen::MatrixXcd term = std::move(c);
  for (int k = 1; k <= std::min(da, db); ++k) {
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(da, db);
    for (int m = 0; m + 1 < da; ++m)
      for (int n = 0; n + 1 < db; ++n)
        next(m, n) = std::sqrt(double((m + 1) * (n + 1))) * term(m + 1, n + 1);
    term = (-t / double(k)) * next;
    if (term.cwiseAbs().maxCoeff() == 0.0) break;
    out += term;
  }

  for (int m = 0; m < da; ++m)
    for (int n = 0; n < db; ++n)
      out(m, n) *= std::exp(-double(m + n + 1) * log_cosh);

  term = out;
  for (int k = 1; k <= std::min(da, db); ++k) {
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(da, db);
    for (int m = 1; m < da; ++m)
      for (int n = 1; n < db; ++n)
        next(m, n) = std::sqrt(double(m * n)) * term(m - 1, n - 1);
    term = (t / double(k)) * next;
    if (term.cwiseAbs().maxCoeff() == 0.0) break;
    out += term;
  }
  return out;
}

}  // namespace

TwoModeState cs_state(const DisplacementParams& p, double gamma,
                      FockCutoff cutoff) {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  const int d = cutoff.dim();
  const Eigen::MatrixXcd da = displacement_operator(p.xi, cutoff);
  const Eigen::MatrixXcd db = displacement_operator(p.eta, cutoff);
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, d);
  // D_a D_b |00>: product of the two displaced vacua.
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) c(m, n) = da(m, 0) * db(n, 0);
  c = apply_squeeze_bch(std::move(c), gamma);
  return TwoModeState::normalized(std::move(c));
}

TwoModeState displace_state(const TwoModeState& s, Complex xi, Complex eta) {
  const Eigen::MatrixXcd da = displacement_operator(xi, FockCutoff(s.dim_a() - 1));
  const Eigen::MatrixXcd db = displacement_operator(eta, FockCutoff(s.dim_b() - 1));
  Eigen::MatrixXcd c = da * s.amplitudes() * db.transpose();
  return TwoModeState::normalized(std::move(c));
}

BogoliubovMatrix bogoliubov_matrix(double gamma, StatisticsKind kind) {
  Eigen::Matrix2d m;
  if (kind == StatisticsKind::boson) {
    const double u = std::cosh(gamma), v = std::sinh(gamma);
    m << u, -v, -v, u;
  } else {
    const double u = std::cos(gamma), v = std::sin(gamma);
    m << u, v, -v, u;
  }
  return {m, kind};
}

DisplacementParams bogoliubov_transform_params(const DisplacementParams& p,
                                               double gamma,
                                               StatisticsKind kind) {
  if (kind == StatisticsKind::boson) {
    const double u = std::cosh(gamma), v = std::sinh(gamma);
    const Complex xi_bar = u * p.xi + v * std::conj(p.eta);
    const Complex eta_bar_conj = v * p.xi + u * std::conj(p.eta);
    return {xi_bar, std::conj(eta_bar_conj)};
  }
  const double u = std::cos(gamma), v = std::sin(gamma);
  const Complex xi_bar = u * p.xi + v * std::conj(p.eta);
  const Complex eta_bar_conj = -v * p.xi + u * std::conj(p.eta);
  return {xi_bar, std::conj(eta_bar_conj)};
}

SqueezeBlocks::SqueezeBlocks(double gamma, int guard_n_max)
    : gamma_(gamma), guard_(guard_n_max) {
  if (guard_ < 1) throw std::invalid_argument("guard cutoff must be >= 1");
}

const Eigen::MatrixXd& SqueezeBlocks::block(int d) const {
  if (std::abs(d) > guard_) throw std::invalid_argument("block out of range");
  auto it = blocks_.find(d);
  if (it != blocks_.end()) return it->second;
  const int sz = block_size(d);
  Eigen::VectorXd offdiag(sz - 1);
  for (int k = 0; k + 1 < sz; ++k) {
    const double m = k + std::max(d, 0);
    const double n = k + std::max(-d, 0);
    offdiag(k) = gamma_ * std::sqrt((m + 1.0) * (n + 1.0));
  }
  return blocks_.emplace(d, linalg::expm_antisymmetric_tridiagonal(offdiag))
      .first->second;
}

double SqueezeBlocks::entry(int m, int n, int p, int q) const {
  if (m - n != p - q) return 0.0;
  const int d = m - n;
  if (std::abs(d) > guard_) return 0.0;
  return block(d)(std::min(m, n), std::min(p, q));
}

Eigen::MatrixXcd SqueezeBlocks::assemble_dense(int n_max) const {
  if (n_max > guard_)
    throw std::invalid_argument("requested cutoff exceeds the block cutoff");
  const int d1 = n_max + 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d1 * d1, d1 * d1);
  for (int m = 0; m <= n_max; ++m)
    for (int n = 0; n <= n_max; ++n)
      for (int p = 0; p <= n_max; ++p)
        for (int q = 0; q <= n_max; ++q)
          if (m - n == p - q) out(m * d1 + n, p * d1 + q) = entry(m, n, p, q);
  return out;
}

int converged_guard(double gamma, int n_max, double log_eps) {
  const double t =
      std::min(std::max(std::tanh(std::abs(gamma)), 1e-9), 1.0 - 1e-15);
  const double r = double(n_max) + 1.0;
  const double target = -log_eps;  // natural-log amplitude target
  for (int k = 16; k <= 320; k += 4) {
    const double binom = std::lgamma(k + r + 1.0) - std::lgamma(k + 1.0) -
                         std::lgamma(r + 1.0);
    if (k * (-2.0 * std::log(t)) - binom >= target) return k;
  }
  return 320;
}

namespace {

// Rectangular block of a (x) 1 mapping difference-block d to d-1.
Eigen::MatrixXd mode_a_block(int d, int guard) {
  const int src = guard - std::abs(d) + 1;
  const int dst = guard - std::abs(d - 1) + 1;
  Eigen::MatrixXd blk = Eigen::MatrixXd::Zero(dst, src);
  for (int k = 0; k < src; ++k) {
    const int m = k + std::max(d, 0);
    if (m == 0) continue;
    const int kk = (d >= 1) ? k : k - 1;  // index of (m-1, n) in block d-1
    if (kk < 0 || kk >= dst) continue;
    blk(kk, k) = std::sqrt(double(m));
  }
  return blk;
}

// Rectangular block of 1 (x) b mapping difference-block d to d+1.
Eigen::MatrixXd mode_b_block(int d, int guard) {
  const int src = guard - std::abs(d) + 1;
  const int dst = guard - std::abs(d + 1) + 1;
  Eigen::MatrixXd blk = Eigen::MatrixXd::Zero(dst, src);
  for (int k = 0; k < src; ++k) {
    const int n = k + std::max(-d, 0);
    if (n == 0) continue;
    const int kk = (d <= -1) ? k : k - 1;  // index of (m, n-1) in block d+1
    if (kk < 0 || kk >= dst) continue;
    blk(kk, k) = std::sqrt(double(n));
  }
  return blk;
}

}  // namespace

BogoliubovOperatorReport bogoliubov_operator_check(double gamma,
                                                   FockCutoff cutoff) {
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  const int half = cutoff.n_max / 2;
  const int guard = converged_guard(gamma, cutoff.n_max, -34.0);
  const int g = cutoff.n_max + guard;
  SqueezeBlocks s(gamma, g);
  const double u = std::cosh(gamma);
  const double v = std::sinh(gamma);

  // a(gamma) = S a S^T maps block d -> d-1; b(gamma) maps d -> d+1.
  std::map<int, Eigen::MatrixXd> la, lb;
  auto get_la = [&](int d) -> const Eigen::MatrixXd& {
    auto it = la.find(d);
    if (it == la.end())
      it = la.emplace(d, (s.block(d - 1) * mode_a_block(d, g)) *
                             s.block(d).transpose())
               .first;
    return it->second;
  };
  auto get_lb = [&](int d) -> const Eigen::MatrixXd& {
    auto it = lb.find(d);
    if (it == lb.end())
      it = lb.emplace(d, (s.block(d + 1) * mode_b_block(d, g)) *
                             s.block(d).transpose())
               .first;
    return it->second;
  };

  BogoliubovOperatorReport rep{0.0, 0.0, 0.0, 0.0, 0.0, 0.0, guard};

  // Deviation of a(gamma) from u a - v b+ over safe entries.
  for (int d = -half + 1; d <= half; ++d) {
    const Eigen::MatrixXd& m = get_la(d);
    for (int kq = 0; kq <= half - std::abs(d); ++kq) {
      const int p = kq + std::max(d, 0);
      const int q = kq + std::max(-d, 0);
      for (int km = 0; km <= half - std::abs(d - 1); ++km) {
        const int mm = km + std::max(d - 1, 0);
        const int nn = km + std::max(1 - d, 0);
        double rhs = 0.0;
        if (mm == p - 1 && nn == q) rhs += u * std::sqrt(double(p));
        if (mm == p && nn == q + 1) rhs -= v * std::sqrt(double(q + 1));
        rep.dev_a = std::max(rep.dev_a, std::abs(m(km, kq) - rhs));
      }
    }
  }

  // Deviation of b(gamma) from u b - v a+.
  for (int d = -half; d <= half - 1; ++d) {
    const Eigen::MatrixXd& m = get_lb(d);
    for (int kq = 0; kq <= half - std::abs(d); ++kq) {
      const int p = kq + std::max(d, 0);
      const int q = kq + std::max(-d, 0);
      for (int km = 0; km <= half - std::abs(d + 1); ++km) {
        const int mm = km + std::max(d + 1, 0);
        const int nn = km + std::max(-d - 1, 0);
        double rhs = 0.0;
        if (mm == p && nn == q - 1) rhs += u * std::sqrt(double(q));
        if (mm == p + 1 && nn == q) rhs -= v * std::sqrt(double(p + 1));
        rep.dev_b = std::max(rep.dev_b, std::abs(m(km, kq) - rhs));
      }
    }
  }

  // Canonical commutators on safe entries, per difference block.
  for (int d = -half; d <= half; ++d) {
    const int sz = g - std::abs(d) + 1;
    const Eigen::MatrixXd comm_aa = get_la(d + 1) * get_la(d + 1).transpose() -
                                    get_la(d).transpose() * get_la(d) -
                                    Eigen::MatrixXd::Identity(sz, sz);
    const Eigen::MatrixXd comm_bb = get_lb(d - 1) * get_lb(d - 1).transpose() -
                                    get_lb(d).transpose() * get_lb(d) -
                                    Eigen::MatrixXd::Identity(sz, sz);
    const Eigen::MatrixXd comm_ab =
        get_la(d + 1) * get_lb(d) - get_lb(d - 1) * get_la(d);
    const int safe = half - std::abs(d) + 1;
    rep.dev_comm_aa = std::max(
        rep.dev_comm_aa, comm_aa.topLeftCorner(safe, safe).cwiseAbs().maxCoeff());
    rep.dev_comm_bb = std::max(
        rep.dev_comm_bb, comm_bb.topLeftCorner(safe, safe).cwiseAbs().maxCoeff());
    rep.dev_comm_ab = std::max(
        rep.dev_comm_ab, comm_ab.topLeftCorner(safe, safe).cwiseAbs().maxCoeff());
  }

  // Unitarity of the truncated dense exponential.
  const Eigen::MatrixXcd sd = squeeze_expm(gamma, cutoff);
  const int dim2 = cutoff.dim() * cutoff.dim();
  rep.unitarity = (sd * sd.adjoint() - Eigen::MatrixXcd::Identity(dim2, dim2))
                      .cwiseAbs()
                      .maxCoeff();
  return rep;
}

}  // namespace sqz::fock
