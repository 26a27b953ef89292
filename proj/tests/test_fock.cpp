#include <cmath>

#include "doctest.h"
#include "fock.hpp"
#include "linalg.hpp"

using namespace sqz;
using namespace sqz::fock;
using Complex = std::complex<double>;

TEST_SUITE("fock") {

TEST_CASE("ladder matrices") {
  CHECK_THROWS_AS(FockCutoff(0), std::invalid_argument);

  const auto [a1, ad1] = make_ladder(FockCutoff(1));
  CHECK(a1(0, 1) == Complex(1.0, 0.0));
  CHECK(a1(0, 0) == Complex(0.0, 0.0));
  CHECK(a1(1, 0) == Complex(0.0, 0.0));
  CHECK(a1(1, 1) == Complex(0.0, 0.0));

  const auto [a3, ad3] = make_ladder(FockCutoff(3));
  CHECK(a3(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-16));

  // [a, a+] = 1 below the cutoff, -n_max at the top level
  const auto [a8, ad8] = make_ladder(FockCutoff(8));
  const Eigen::MatrixXcd comm = a8 * ad8 - ad8 * a8;
  for (int n = 0; n < 8; ++n)
    CHECK(std::abs(comm(n, n) - Complex(1.0, 0.0)) <= 1e-13);
  CHECK(comm(8, 8).real() == doctest::Approx(-8.0));
}

TEST_CASE("displacement operator") {
  const FockCutoff c(30);
  CHECK(displacement_operator(Complex(0, 0), c)
            .isApprox(Eigen::MatrixXcd::Identity(31, 31), 1e-15));

  const Eigen::MatrixXcd d = displacement_operator(Complex(1, 0), c);
  CHECK(std::abs(d(0, 0) - Complex(std::exp(-0.5), 0.0)) <= 1e-10);
  // coherent amplitudes e^{-|xi|^2/2} xi^n / sqrt(n!)
  CHECK(std::abs(d(3, 0) - Complex(std::exp(-0.5) / std::sqrt(6.0), 0.0)) <=
        1e-10);

  // D(xi) a D+(xi) = a - xi on the retained subspace
  const Complex xi(0.5, 0.0);
  const Eigen::MatrixXcd dd = displacement_operator(xi, c);
  const Eigen::MatrixXcd a = ladder_a(c);
  const Eigen::MatrixXcd dev =
      dd * a * dd.adjoint() - (a - xi * Eigen::MatrixXcd::Identity(31, 31));
  CHECK(dev.topLeftCorner(16, 16).cwiseAbs().maxCoeff() <= 1e-9);

  CHECK(coherent_tail_weight(Complex(0.5, 0.0), c) <= 1e-10);
  CHECK(coherent_tail_weight(Complex(6.0, 0.0), FockCutoff(8)) > 0.9);
}

TEST_CASE("squeeze exponential is unitary and matches the dense generator") {
  const FockCutoff c(12);
  const double gamma = 0.5;
  const Eigen::MatrixXcd s = squeeze_expm(gamma, c);
  const int d2 = c.dim() * c.dim();
  CHECK((s * s.adjoint() - Eigen::MatrixXcd::Identity(d2, d2))
            .cwiseAbs()
            .maxCoeff() <= 1e-9);

  // blockwise exponential equals the dense eigensolver exponential
  const Eigen::MatrixXcd k = squeeze_generator(gamma, c);
  const Eigen::MatrixXcd s_dense = linalg::expm_antihermitian(k);
  CHECK((s - s_dense).cwiseAbs().maxCoeff() <= 1e-12);

  CHECK(squeeze_expm(0.0, FockCutoff(4))
            .isApprox(Eigen::MatrixXcd::Identity(25, 25), 1e-15));
  CHECK_THROWS_AS(squeeze_expm(0.5, FockCutoff(80)), std::invalid_argument);
}

TEST_CASE("tmss routes") {
  const FockCutoff c(40);
  const TwoModeState b = tmss_bch(0.0, c);
  CHECK(std::abs(b.amplitude(0, 0) - Complex(1.0, 0.0)) == 0.0);

  // tau = ln 2 gives amplitudes proportional to 2^{-n/2}
  const TwoModeState f = tmss_fock(std::log(2.0), c);
  CHECK(std::abs(f.amplitude(1, 1) / f.amplitude(0, 0) -
                 Complex(std::exp(-std::log(2.0) / 2.0), 0.0)) <= 1e-15);
  // probabilities p_n = 2^{-(n+1)}
  CHECK(std::norm(f.amplitude(0, 0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::norm(f.amplitude(2, 2)) == doctest::Approx(0.125).epsilon(1e-12));

  // tau -> inf freezes to the vacuum
  const TwoModeState frozen = tmss_fock(50.0, c);
  CHECK(std::abs(frozen.amplitude(0, 0) - Complex(1.0, 0.0)) <= 1e-10);
  CHECK_THROWS_AS(tmss_fock(0.0, c), std::invalid_argument);
  CHECK_THROWS_AS(tmss_bch(-0.3, c), std::invalid_argument);

  // parametrization identity: fock route at tau(gamma) = bch route at gamma
  for (double gamma : {0.3, 0.7, 1.0, 1.4}) {
    const TwoModeState sb = tmss_bch(gamma, c);
    const TwoModeState sf = tmss_fock(param_from_gamma(gamma).tau, c);
    CHECK(sb.max_amplitude_diff(sf) <= 1e-12);
  }

  // diagonality
  const TwoModeState e = tmss_expm_route(0.7, FockCutoff(12));
  for (int m = 0; m < e.dim_a(); ++m)
    for (int n = 0; n < e.dim_b(); ++n)
      if (m != n) CHECK(std::abs(e.amplitude(m, n)) <= 1e-14);
}

TEST_CASE("route triangle at n_max = 12") {
  const FockCutoff c(12);
  for (double gamma : {0.3, 0.7, 1.0}) {
    const TwoModeState se = tmss_expm_route(gamma, c);
    const TwoModeState sb = tmss_bch(gamma, c);
    const TwoModeState sf = tmss_fock(param_from_gamma(gamma).tau, c);
    CHECK(se.max_amplitude_diff(sb) <= 1e-9);
    CHECK(se.max_amplitude_diff(sf) <= 1e-9);
    CHECK(sb.max_amplitude_diff(sf) <= 1e-9);
  }
}

TEST_CASE("bch route at wide cutoff matches the guarded expm route on shared indices") {
  const TwoModeState wide = tmss_bch(1.0, FockCutoff(40));
  const TwoModeState e = tmss_expm_route(1.0, FockCutoff(12));
  double dev = 0.0;
  for (int n = 0; n <= 12; ++n)
    dev = std::max(dev, std::abs(wide.amplitude(n, n) / wide.amplitude(0, 0) -
                                 e.amplitude(n, n) / e.amplitude(0, 0)));
  CHECK(dev <= 1e-9);
}

TEST_CASE("tail bookkeeping") {
  const FockCutoff c(12);
  const double gamma = 1.0;
  const TwoModeState s = tmss_bch(gamma, c);
  CHECK(s.tail_weight() ==
        doctest::Approx(tmss_tail_weight(gamma, c)).epsilon(1e-10));
  CHECK(std::abs(s.norm() - 1.0) <= 1e-14);
  CHECK(tmss_tail_weight(1.0, FockCutoff(60)) < 1e-10);
}

TEST_CASE("parametrization conversions") {
  const SqueezeParametrization p = param_from_tau(std::log(2.0));
  CHECK(p.gamma == doctest::Approx(0.881373587019543).epsilon(1e-15));
  CHECK(p.chi == doctest::Approx(3.0).epsilon(1e-15));

  // cosh gamma = (1 - e^{-tau})^{-1/2}
  CHECK(std::cosh(p.gamma) ==
        doctest::Approx(1.0 / std::sqrt(1.0 - std::exp(-p.tau))).epsilon(1e-15));

  // tau = ln(chi+1) - ln(chi-1)
  const SqueezeParametrization q = param_from_chi(2.0);
  CHECK(q.tau == doctest::Approx(std::log(3.0)).epsilon(1e-15));

  for (double gamma : {0.2, 0.7, 1.3}) {
    const auto a = param_from_gamma(gamma);
    const auto b = param_from_chi(param_from_tau(a.tau).chi);
    CHECK(std::abs(b.gamma - gamma) / gamma <= 1e-12);
  }

  CHECK(param_from_gamma(0.0).chi == 1.0);
  CHECK(param_from_chi(1.0).gamma == 0.0);
  CHECK_THROWS_AS(param_from_chi(0.5), std::invalid_argument);
  CHECK_THROWS_AS(param_from_tau(-1.0), std::invalid_argument);
}

TEST_CASE("bogoliubov matrices") {
  const auto b0 = bogoliubov_matrix(0.0, StatisticsKind::boson);
  CHECK(b0.entries.isApprox(Eigen::Matrix2d::Identity(), 1e-15));

  const auto b1 = bogoliubov_matrix(1.0, StatisticsKind::boson);
  CHECK(b1.entries(0, 0) == doctest::Approx(1.5430806348152437).epsilon(1e-15));
  CHECK(b1.entries(0, 1) == doctest::Approx(-1.1752011936438014).epsilon(1e-15));
  CHECK(std::abs(b1.determinant() - 1.0) <= 1e-12);

  const auto f = bogoliubov_matrix(0.7, StatisticsKind::fermion);
  CHECK(std::abs(f.determinant() - 1.0) <= 1e-15);
}

TEST_CASE("parameter transform matches the operator ordering identity") {
  // gamma = 0 is the identity map
  const DisplacementParams p0{Complex(0.4, 0.1), Complex(-0.2, 0.3)};
  const DisplacementParams q0 =
      bogoliubov_transform_params(p0, 0.0, StatisticsKind::boson);
  CHECK(std::abs(q0.xi - p0.xi) == 0.0);
  CHECK(std::abs(q0.eta - p0.eta) == 0.0);

  // xi = 1, eta = 0: xi_bar = cosh, eta_bar = sinh (conjugation-real case)
  const DisplacementParams q1 = bogoliubov_transform_params(
      {Complex(1, 0), Complex(0, 0)}, 1.0, StatisticsKind::boson);
  CHECK(q1.xi.real() == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
  CHECK(q1.eta.real() == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));

  // the transform is exactly the one that reorders S D D |0> = D D S |0>
  const FockCutoff c(30);
  const double gamma = 0.4;
  const DisplacementParams p{Complex(0.3, 0.0), Complex(0.0, 0.2)};
  const TwoModeState lhs = cs_state(p, gamma, c);
  const DisplacementParams q =
      bogoliubov_transform_params(p, gamma, StatisticsKind::boson);
  const TwoModeState rhs =
      displace_state(tmss_bch(gamma, c), q.xi, q.eta);
  CHECK(lhs.max_amplitude_diff(rhs) <= 1e-12);
}

TEST_CASE("cs state limits") {
  const FockCutoff c(30);
  // no displacement: reduces to the TMSS
  const TwoModeState s0 = cs_state({Complex(0, 0), Complex(0, 0)}, 0.4, c);
  CHECK(s0.max_amplitude_diff(tmss_bch(0.4, c)) <= 1e-13);

  // no squeezing: product of two coherent states
  const Complex xi(0.3, 0.0), eta(0.0, 0.2);
  const TwoModeState s1 = cs_state({xi, eta}, 0.0, c);
  const Eigen::MatrixXcd da = displacement_operator(xi, c);
  const Eigen::MatrixXcd db = displacement_operator(eta, c);
  double dev = 0.0;
  for (int m = 0; m <= 30; ++m)
    for (int n = 0; n <= 30; ++n)
      dev = std::max(dev, std::abs(s1.amplitude(m, n) - da(m, 0) * db(n, 0)));
  CHECK(dev <= 1e-13);
}

TEST_CASE("squeezed vacuum is annihilated by u a - v b+") {
  const FockCutoff c(60);
  const auto [a, ad] = make_ladder(c);
  for (double gamma : {0.5, 1.0}) {
    const TwoModeState s = tmss_bch(gamma, c);
    const Eigen::MatrixXcd res =
        std::cosh(gamma) * (a * s.amplitudes()) -
        std::sinh(gamma) * (s.amplitudes() * ad.transpose());
    double nrm = 0.0;
    for (int m = 0; m <= 30; ++m)
      for (int n = 0; n <= 30; ++n) nrm += std::norm(res(m, n));
    CHECK(std::sqrt(nrm) <= 1e-8);
  }
}

TEST_CASE("bogoliubov operator check") {
  const BogoliubovOperatorReport r0 = bogoliubov_operator_check(0.0, FockCutoff(8));
  CHECK(r0.dev_a == 0.0);
  CHECK(r0.dev_b == 0.0);

  const BogoliubovOperatorReport r = bogoliubov_operator_check(0.5, FockCutoff(12));
  CHECK(r.dev_a <= 1e-9);
  CHECK(r.dev_b <= 1e-9);
  CHECK(r.unitarity <= 1e-12);

  const BogoliubovOperatorReport r2 = bogoliubov_operator_check(1.0, FockCutoff(16));
  CHECK(r2.dev_comm_aa <= 1e-8);
  CHECK(r2.dev_comm_bb <= 1e-8);
  CHECK(r2.dev_comm_ab <= 1e-8);
}

}  // TEST_SUITE
