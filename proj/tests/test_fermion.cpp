#include <cmath>

#include "doctest.h"
#include "entangle.hpp"
#include "fermion.hpp"

using namespace sqz;
using namespace sqz::fermion;
using grassmann::Complex;
using grassmann::Element;
using grassmann::SuperOperator;

namespace {

Element alpha_gen() { return Element::generator(default_generators(), kAlpha); }

}  // namespace

TEST_SUITE("fermion") {

TEST_CASE("displacement conjugation: D a D+ = a - alpha, exactly") {
  auto g = default_generators();
  const Element alpha = alpha_gen();
  const SuperOperator d = displacement_a(g, 2, alpha);
  const SuperOperator a =
      SuperOperator::from_matrix(g, grassmann::fermion_mode_a(2));
  CHECK((d * a * d.dagger() - (a - SuperOperator::from_element(2, alpha)))
            .is_zero());
  CHECK((d * d.dagger()).max_abs_diff(SuperOperator::identity(g, 2)) == 0.0);
  // D+(alpha) = D(-alpha)
  CHECK(d.dagger().max_abs_diff(displacement_a(g, 2, -alpha)) == 0.0);
}

TEST_CASE("empty displacement is the identity") {
  auto g = default_generators();
  const SuperOperator d = displacement_a(g, 2, Element(g));
  CHECK(d.max_abs_diff(SuperOperator::identity(g, 2)) == 0.0);
}

TEST_CASE("coherent state ket expansion") {
  // |alpha> = (1 - alpha* alpha / 2)|0> - alpha |1>: the ket-coefficient
  // form; the bra contraction <n|alpha> picks up (-1)^n and reads
  // e^{-alpha* alpha/2} alpha^n.
  auto g = default_generators();
  const Element alpha = alpha_gen();
  const Element astar = Element::generator(g, kAlphaStar);
  const FermionState s = coherent_state(g, alpha);
  const Element a0 =
      Element::scalar(g, 1.0) - (astar * alpha) * Complex(0.5, 0.0);
  CHECK(s.amplitude(0).max_abs_diff(a0) == 0.0);
  CHECK(s.amplitude(1).max_abs_diff(-alpha) == 0.0);

  const Element bra1 = FermionState::basis(g, 2, 1).overlap(s);
  CHECK(bra1.max_abs_diff(alpha) == 0.0);  // <1|alpha> = +alpha
  CHECK(!s.is_physical());
}

TEST_CASE("eigenvalue property a|alpha> = alpha|alpha>") {
  auto g = default_generators();
  const Element alpha = alpha_gen();
  const FermionState s = coherent_state(g, alpha);
  const SuperOperator a =
      SuperOperator::from_matrix(g, grassmann::fermion_mode_a(2));
  const SuperOperator lhs = a * s.column();
  const SuperOperator rhs = SuperOperator::from_element(2, alpha) * s.column();
  CHECK(lhs.max_abs_diff(rhs) == 0.0);
}

TEST_CASE("normalization and overlap formula") {
  auto g = default_generators();
  const Element alpha = alpha_gen();
  const Element beta = Element::generator(g, kBeta);
  const FermionState sa = coherent_state(g, alpha);
  CHECK(sa.overlap(sa).max_abs_diff(Element::scalar(g, 1.0)) == 0.0);

  // <alpha|beta> = exp(alpha* beta - alpha* alpha/2 - beta* beta/2)
  const Element astar = Element::generator(g, kAlphaStar);
  const Element bstar = Element::generator(g, kBetaStar);
  const Element want = Element::scalar(g, 1.0) + astar * beta +
                       (alpha * astar) * Complex(0.5, 0.0) +
                       (beta * bstar) * Complex(0.5, 0.0) +
                       (alpha * astar * beta * bstar) * Complex(0.25, 0.0);
  CHECK(sa.overlap(coherent_state(g, beta)).max_abs_diff(want) == 0.0);
}

TEST_CASE("rho_alpha matrix, trace and number expectation") {
  auto g = default_generators();
  const Element alpha = alpha_gen();
  const Element astar = Element::generator(g, kAlphaStar);
  const SuperOperator rho = rho_alpha(g, alpha);

  CHECK(rho.matrix_element(0, 0).max_abs_diff(Element::scalar(g, 1.0) -
                                              astar * alpha) == 0.0);
  CHECK(rho.matrix_element(0, 1).max_abs_diff(astar) == 0.0);
  CHECK(rho.matrix_element(1, 0).max_abs_diff(-alpha) == 0.0);
  CHECK(rho.matrix_element(1, 1).max_abs_diff(astar * alpha) == 0.0);

  CHECK(rho.trace().max_abs_diff(Element::scalar(g, 1.0)) == 0.0);

  const Eigen::MatrixXcd a1 = grassmann::fermion_mode_a(2);
  const SuperOperator num =
      SuperOperator::from_matrix(g, (a1.adjoint() * a1).eval());
  CHECK((rho * num).trace().max_abs_diff(astar * alpha) == 0.0);
}

TEST_CASE("matrix-element sign property over all m, n") {
  auto g = default_generators();
  const Element alpha = alpha_gen();
  const SuperOperator rho = rho_alpha(g, alpha);
  const FermionState coh = coherent_state(g, alpha);
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n) {
      const Element lhs = rho.matrix_element(m, n);
      const Element rhs = coh.overlap(FermionState::basis(g, 2, n)) *
                          FermionState::basis(g, 2, m).overlap(coh);
      const double sign = (m * (n + 1)) % 2 ? -1.0 : 1.0;
      CHECK(lhs.max_abs_diff(rhs * sign) == 0.0);
    }
}

TEST_CASE("rho dagger outcome: rho(alpha)+ = rho(-alpha)") {
  auto g = default_generators();
  const Element alpha = alpha_gen();
  const SuperOperator rho = rho_alpha(g, alpha);
  CHECK(rho.dagger().max_abs_diff(rho_alpha(g, -alpha)) == 0.0);
  CHECK(rho.dagger().max_abs_diff(rho) > 0.5);
}

TEST_CASE("completeness of the coherent family") {
  auto g = default_generators();
  const Element alpha = alpha_gen();
  const FermionState coh = coherent_state(g, alpha);
  const SuperOperator proj = coh.density_with(coh);
  SuperOperator integrated(g, 2);
  for (const auto& [mono, mat] : proj.terms()) {
    const Element e =
        Element::monomial(g, mono, 1.0).berezin(kAlpha).berezin(kAlphaStar);
    if (e.is_zero()) continue;
    integrated =
        integrated + SuperOperator::from_element(2, e) *
                         SuperOperator::from_matrix(g, mat);
  }
  CHECK(integrated.max_abs_diff(SuperOperator::identity(g, 2)) == 0.0);
}

TEST_CASE("displaced number states") {
  auto g = default_generators();
  const Element alpha = alpha_gen();
  CHECK(displaced_number_state(g, alpha, 0)
            .column()
            .max_abs_diff(coherent_state(g, alpha).column()) == 0.0);

  const SuperOperator ad = SuperOperator::from_matrix(
      g, grassmann::fermion_mode_a(2).adjoint().eval());
  const FermionState want =
      apply(ad - SuperOperator::from_element(2, alpha.conjugate()),
            coherent_state(g, alpha));
  CHECK(displaced_number_state(g, alpha, 1).column().max_abs_diff(want.column()) ==
        0.0);
  CHECK_THROWS_AS(displaced_number_state(g, alpha, 2), std::invalid_argument);
}

TEST_CASE("fermion squeeze matrix and CAR preservation") {
  const double gamma = 0.7;
  const Eigen::MatrixXcd s = fermion_squeeze_matrix(gamma);
  CHECK((s * s.adjoint() - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-15);
  const Eigen::MatrixXcd a = grassmann::fermion_mode_a(4);
  const Eigen::MatrixXcd b = grassmann::fermion_mode_b();
  const double u = std::cos(gamma), v = std::sin(gamma);
  CHECK((s * a * s.adjoint() - (u * a - v * b.adjoint())).cwiseAbs().maxCoeff() <=
        1e-13);
  CHECK((s * b * s.adjoint() - (u * b + v * a.adjoint())).cwiseAbs().maxCoeff() <=
        1e-13);

  // quarter rotation sends |00> to |11>
  const Eigen::MatrixXcd q = fermion_squeeze_matrix(M_PI / 2);
  CHECK(std::abs(q(3, 0) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(q(0, 0)) < 1e-15);
}

TEST_CASE("tmss amplitudes and squeeze route") {
  auto g = default_generators();
  const double tau = 1.0;
  const FermionState s = fermion_tmss(g, tau);
  const double z = 1.0 + std::exp(-1.0);
  CHECK(s.amplitude(0).scalar_part().real() ==
        doctest::Approx(1.0 / std::sqrt(z)).epsilon(1e-15));
  CHECK(s.amplitude(3).scalar_part().real() ==
        doctest::Approx(std::exp(-0.5) / std::sqrt(z)).epsilon(1e-15));
  CHECK(s.is_physical());

  const FermionState via =
      apply(fermion_squeeze(g, gamma_from_tau(tau)), FermionState::vacuum(g, 4));
  CHECK(s.column().max_abs_diff(via.column()) <= 1e-13);

  // tau -> inf freezes to |00>; tau = 0 is (|00> + |11>)/sqrt(2)
  CHECK(fermion_tmss(g, 50.0).amplitude(0).scalar_part().real() ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(fermion_tmss(g, 0.0).amplitude(3).scalar_part().real() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(fermion_tmss(g, -0.1), std::invalid_argument);
}

TEST_CASE("intertwining identity with rotated Grassmann parameters") {
  auto g = default_generators();
  CHECK(cs_intertwining_residual(g, 0.0) == 0.0);
  CHECK(cs_intertwining_residual(g, 0.6) <= 1e-13);
  CHECK(cs_intertwining_residual(g, M_PI / 4) <= 1e-13);
  CHECK(cs_intertwining_residual(g, 0.6, Complex(0.0, 1.0), Complex(1.5, 0.5)) <=
        1e-13);
}

TEST_CASE("reduced density equals the displaced Gibbs conjugation") {
  auto g = default_generators();
  for (double tau : {0.4, 1.0, 2.5}) {
    // residuals here are pure rounding of the cos/sin inputs (a few ulp)
    CHECK(reduced_density(g, tau, Complex(0, 0), Complex(0, 0))
              .max_abs_diff(SuperOperator::from_matrix(
                  g, fermion_gibbs(tau).matrix())) <= 1e-14);
    CHECK(reduced_density(g, tau, Complex(1, 0), Complex(1, 0))
              .max_abs_diff(displaced_gibbs_reference(g, tau, Complex(1, 0))) <=
          1e-14);
    // beta only touches mode b: the reduced density ignores it
    CHECK(reduced_density(g, tau, Complex(1, 0), Complex(0.3, 0.8))
              .max_abs_diff(displaced_gibbs_reference(g, tau, Complex(1, 0))) <=
          1e-14);
  }
}

TEST_CASE("alternative maximally entangled state") {
  for (double tau : {0.5, 1.0, 30.0}) {
    const AltStateReport r = alt_state_check(tau);
    CHECK(r.dev_density == 0.0);
    CHECK(r.dev_entropy <= 1e-15);
  }
}

TEST_CASE("fermion entropy and energy closed forms") {
  auto [s0, e0] = fermion_entropy_energy(0.0);
  CHECK(s0 == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(e0 == doctest::Approx(0.5).epsilon(1e-15));

  auto [s1, e1] = fermion_entropy_energy(1.0);
  CHECK(e1 == doctest::Approx(0.268941421369995).epsilon(1e-14));
  CHECK(s1 == doctest::Approx(0.582203108888218).epsilon(1e-14));

  auto [sinf, einf] = fermion_entropy_energy(40.0);
  CHECK(sinf < 2e-16);
  CHECK(einf < 1e-17);

  // eigen-oracle cross-check on the reduced density
  auto g = default_generators();
  for (double tau : {0.0, 0.7, 1.0, 3.0}) {
    const FermionState st = fermion_tmss(g, tau);
    const SuperOperator rho = st.density_with(st).partial_trace_b();
    Eigen::MatrixXcd m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = rho.matrix_element(i, j).scalar_part();
    const ent::DensityMatrix dm(m);
    const auto [s_cf, e_cf] = fermion_entropy_energy(tau);
    CHECK(std::abs(ent::von_neumann_entropy(dm) - s_cf) <= 1e-13);
    CHECK(std::abs(ent::reduced_energy(dm) - e_cf) <= 1e-13);
  }
}

TEST_CASE("fermionic Bogoliubov matrix is a rotation") {
  const auto bf = fock::bogoliubov_matrix(0.9, fock::StatisticsKind::fermion);
  CHECK(std::abs(bf.determinant() - 1.0) <= 1e-15);
  const auto q = fock::bogoliubov_matrix(M_PI / 2, fock::StatisticsKind::fermion);
  CHECK(q.entries(0, 0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(q.entries(0, 1) == doctest::Approx(1.0));
  CHECK(q.entries(1, 0) == doctest::Approx(-1.0));
}

}  // TEST_SUITE
