#include <random>

#include "doctest.h"
#include "fermion.hpp"
#include "grassmann.hpp"
#include "superop.hpp"

using namespace sqz;
using grassmann::Complex;
using grassmann::Element;
using grassmann::GeneratorSet;
using grassmann::GeneratorSetPtr;
using grassmann::Monomial;
using grassmann::SuperOperator;

namespace {

GeneratorSetPtr two_mode() { return fermion::default_generators(); }

Element gen(const GeneratorSetPtr& g, std::size_t i) {
  return Element::generator(g, i);
}

}  // namespace

TEST_SUITE("grassmann") {

TEST_CASE("generator set validation") {
  CHECK_THROWS_AS(GeneratorSet({"a", "a"}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorSet({"a", "b"}, {0, 1}), std::invalid_argument);
  auto g = GeneratorSet::conjugate_pairs({"alpha", "beta"});
  CHECK(g->size() == 4);
  CHECK(g->name(1) == "alpha*");
  CHECK(g->partner(0) == 1);
  CHECK(g->partner(3) == 2);
}

TEST_CASE("nilpotency and anticommutation") {
  auto g = two_mode();
  const Element a = gen(g, 0);
  const Element b = gen(g, 2);
  CHECK((a * a).is_zero());
  CHECK((a * b + b * a).is_zero());
  // alpha alpha* stored canonically; alpha* alpha flips sign
  const Element as = gen(g, 1);
  CHECK((as * a + a * as).is_zero());
  CHECK((as * a).coeff(0b11) == Complex(-1.0, 0.0));
}

TEST_CASE("product expansion (1 + a)(1 + a*)") {
  auto g = two_mode();
  const Element one = Element::scalar(g, 1.0);
  const Element a = gen(g, 0);
  const Element as = gen(g, 1);
  const Element p = (one + a) * (one + as);
  CHECK(p.coeff(0b00) == Complex(1.0, 0.0));
  CHECK(p.coeff(0b01) == Complex(1.0, 0.0));
  CHECK(p.coeff(0b10) == Complex(1.0, 0.0));
  CHECK(p.coeff(0b11) == Complex(1.0, 0.0));
}

TEST_CASE("conjugation is an antilinear anti-automorphic involution") {
  auto g = two_mode();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<Monomial> mono(0, 15);
  for (int t = 0; t < 200; ++t) {
    Element x(g), y(g);
    for (int i = 0; i < 4; ++i) {
      x = x + Element::monomial(g, mono(rng), Complex(coef(rng), coef(rng)));
      y = y + Element::monomial(g, mono(rng), Complex(coef(rng), coef(rng)));
    }
    CHECK(x.conjugate().conjugate().max_abs_diff(x) == 0.0);
    CHECK((x * y).conjugate().max_abs_diff(y.conjugate() * x.conjugate()) == 0.0);
  }
}

TEST_CASE("conjugation worked example with scalar weight") {
  // (alpha alpha* + c beta beta*)* = alpha alpha* + c* beta beta*
  auto g = two_mode();
  const Complex c(3.0, -2.0);
  const Element x = gen(g, 0) * gen(g, 1) + gen(g, 2) * gen(g, 3) * c;
  const Element want = gen(g, 0) * gen(g, 1) + gen(g, 2) * gen(g, 3) * std::conj(c);
  CHECK(x.conjugate().max_abs_diff(want) == 0.0);
}

TEST_CASE("conjugation reverses mixed products across modes") {
  // (alpha beta*)* = beta alpha*
  auto g = two_mode();
  const Element lhs = (gen(g, 0) * gen(g, 3)).conjugate();
  const Element rhs = gen(g, 2) * gen(g, 1);
  CHECK(lhs.max_abs_diff(rhs) == 0.0);
}

TEST_CASE("berezin integration identities") {
  auto g = two_mode();
  const Element one = Element::scalar(g, 1.0);
  const Element a = gen(g, 0);
  const Element as = gen(g, 1);
  CHECK(a.berezin(0).max_abs_diff(one) == 0.0);
  CHECK(one.berezin(0).is_zero());
  CHECK(as.berezin(1).max_abs_diff(one) == 0.0);
  CHECK((a * as).berezin(0).berezin(1).max_abs_diff(one) == 0.0);
  // integration is a left derivative: d/d(alpha*) of alpha alpha* picks up
  // the transposition sign
  CHECK((a * as).berezin(1).max_abs_diff(-a) == 0.0);
}

TEST_CASE("element parity and rendering") {
  auto g = two_mode();
  const Element x = gen(g, 0) + gen(g, 2);
  CHECK(x.homogeneous_parity() == 1);
  const Element y = Element::scalar(g, 1.0) + gen(g, 0) * gen(g, 1);
  CHECK(y.homogeneous_parity() == 0);
  CHECK((x + y).homogeneous_parity() == -1);
  CHECK(Element::scalar(g, 1.0).to_string() == "1");
  CHECK(gen(g, 0).to_string() == "1 alpha");
  CHECK((gen(g, 1) * gen(g, 0)).to_string() == "-1 alpha alpha*");
}

TEST_CASE("superoperator defining relations") {
  auto g = two_mode();
  for (int dim : {2, 4}) {
    const SuperOperator a = SuperOperator::from_matrix(g, grassmann::fermion_mode_a(dim));
    const SuperOperator ad = a.dagger();
    const SuperOperator one = SuperOperator::identity(g, dim);
    CHECK((a * ad + ad * a).max_abs_diff(one) == 0.0);
    CHECK((a * a).is_zero());
    for (std::size_t i = 0; i < g->size(); ++i) {
      const SuperOperator gi = SuperOperator::from_element(dim, gen(g, i));
      CHECK((gi * a + a * gi).is_zero());
      CHECK((gi * ad + ad * gi).is_zero());
    }
  }
  const SuperOperator a4 = SuperOperator::from_matrix(g, grassmann::fermion_mode_a(4));
  const SuperOperator b4 = SuperOperator::from_matrix(g, grassmann::fermion_mode_b());
  CHECK((a4 * b4 + b4 * a4).is_zero());
  CHECK((a4 * b4.dagger() + b4.dagger() * a4).is_zero());
}

TEST_CASE("super_mul associativity on random sparse triples") {
  auto g = two_mode();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<Monomial> mono(0, 15);
  auto rand_op = [&] {
    SuperOperator out(g, 4);
    for (int t = 0; t < 3; ++t) {
      Eigen::MatrixXcd m(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = Complex(coef(rng), coef(rng));
      out = out + SuperOperator::from_element(4, Element::monomial(g, mono(rng), 1.0)) *
                      SuperOperator::from_matrix(g, m);
    }
    return out;
  };
  for (int t = 0; t < 100; ++t) {
    const SuperOperator x = rand_op(), y = rand_op(), z = rand_op();
    CHECK(((x * y) * z).max_abs_diff(x * (y * z)) == 0.0);
  }
}

TEST_CASE("dagger reproduces the four-factor worked example") {
  // (a alpha a+ beta*)+ = a a+ alpha* beta
  auto g = two_mode();
  const SuperOperator a = SuperOperator::from_matrix(g, grassmann::fermion_mode_a(2));
  const SuperOperator ad = a.dagger();
  auto emb = [&](std::size_t i) {
    return SuperOperator::from_element(2, gen(g, i));
  };
  const SuperOperator lhs = (a * emb(0) * ad * emb(3)).dagger();
  const SuperOperator rhs = a * ad * emb(1) * emb(2);
  CHECK(lhs.max_abs_diff(rhs) == 0.0);
}

TEST_CASE("super trace is linear and plain over the Fock factor") {
  auto g = two_mode();
  const SuperOperator one = SuperOperator::identity(g, 2);
  CHECK(one.trace().max_abs_diff(Element::scalar(g, 2.0)) == 0.0);
}

TEST_CASE("nilpotent exponential") {
  auto g = two_mode();
  const SuperOperator zero(g, 2);
  CHECK(grassmann::super_exp_nilpotent(zero)
            .max_abs_diff(SuperOperator::identity(g, 2)) == 0.0);

  // X = a+ alpha - alpha* a squares to alpha alpha* (1 - 2 a+a), cubes to 0.
  const Eigen::MatrixXcd am = grassmann::fermion_mode_a(2);
  const SuperOperator a = SuperOperator::from_matrix(g, am);
  const SuperOperator ad = SuperOperator::from_matrix(g, am.adjoint().eval());
  const SuperOperator x =
      ad * SuperOperator::from_element(2, gen(g, 0)) -
      SuperOperator::from_element(2, gen(g, 1)) * a;
  const SuperOperator x2 = x * x;
  Eigen::MatrixXcd diag(2, 2);
  diag << 1.0, 0.0, 0.0, -1.0;
  const SuperOperator want =
      SuperOperator::from_element(2, gen(g, 0) * gen(g, 1)) *
      SuperOperator::from_matrix(g, diag);
  CHECK(x2.max_abs_diff(want) == 0.0);
  CHECK((x2 * x).is_zero());
  const SuperOperator ex = grassmann::super_exp_nilpotent(x);
  const SuperOperator exm = grassmann::super_exp_nilpotent(-x);
  CHECK((ex * exm).max_abs_diff(SuperOperator::identity(g, 2)) == 0.0);

  // a matrix with no nilpotency must be rejected
  CHECK_THROWS_AS(grassmann::super_exp_nilpotent(SuperOperator::identity(g, 2)),
                  std::runtime_error);
}

TEST_CASE("mismatched spaces are rejected") {
  auto g = two_mode();
  auto g2 = GeneratorSet::conjugate_pairs({"x"});
  CHECK_THROWS_AS(gen(g, 0) * Element::generator(g2, 0), std::invalid_argument);
  const SuperOperator a2(g, 2), a4(g, 4);
  CHECK_THROWS_AS(a2 * a4, std::invalid_argument);
}

}  // TEST_SUITE
