#include "fermion.hpp"

#include <cmath>
#include <stdexcept>

#include "entangle.hpp"

namespace sqz::fermion {

using grassmann::Monomial;

GeneratorSetPtr default_generators() {
  static GeneratorSetPtr gens =
      grassmann::GeneratorSet::conjugate_pairs({"alpha", "beta"});
  return gens;
}

FermionState FermionState::vacuum(GeneratorSetPtr gens, int fock_dim) {
  return basis(std::move(gens), fock_dim, 0);
}

FermionState FermionState::basis(GeneratorSetPtr gens, int fock_dim, int n) {
  if (n < 0 || n >= fock_dim)
    throw std::invalid_argument("basis index out of range");
  Eigen::MatrixXcd col = Eigen::MatrixXcd::Zero(fock_dim, fock_dim);
  col(n, 0) = 1.0;
  return FermionState(SuperOperator::from_matrix(std::move(gens), col));
}

FermionState FermionState::from_column(SuperOperator column) {
  for (const auto& [m, mat] : column.terms())
    for (int j = 1; j < column.fock_dim(); ++j)
      if (mat.col(j).cwiseAbs().maxCoeff() != 0.0)
        throw std::invalid_argument("operator is not a ket column");
  return FermionState(std::move(column));
}

Element FermionState::amplitude(int n) const {
  Element out(column_.generators());
  for (const auto& [m, mat] : column_.terms()) {
    const double sign =
        (grassmann::parity(m) && SuperOperator::fock_parity(n)) ? -1.0 : 1.0;
    out = out + Element::monomial(column_.generators(), m, sign * mat(n, 0));
  }
  return out;
}

Element FermionState::overlap(const FermionState& other) const {
  return (column_.dagger() * other.column_).matrix_element(0, 0);
}

SuperOperator FermionState::density_with(const FermionState& bra) const {
  return column_ * bra.column_.dagger();
}

bool FermionState::is_physical() const {
  for (int n = 0; n < fock_dim(); ++n)
    if (!amplitude(n).is_scalar()) return false;
  return true;
}

Eigen::VectorXcd FermionState::to_vector() const {
  Eigen::VectorXcd v(fock_dim());
  for (int n = 0; n < fock_dim(); ++n) {
    const Element a = amplitude(n);
    if (!a.is_scalar())
      throw std::runtime_error("state has Grassmann-valued amplitudes");
    v(n) = a.scalar_part();
  }
  return v;
}

FermionState apply(const SuperOperator& op, const FermionState& s) {
  return FermionState::from_column(op * s.column());
}

SuperOperator displacement(const Eigen::MatrixXcd& mode_matrix,
                           const Element& alpha) {
  if (alpha.homogeneous_parity() != 1 && !alpha.is_zero())
    throw std::invalid_argument("displacement parameter must be odd");
  const auto& gens = alpha.generators();
  const int dim = int(mode_matrix.rows());
  const SuperOperator a = SuperOperator::from_matrix(gens, mode_matrix);
  const SuperOperator ad =
      SuperOperator::from_matrix(gens, mode_matrix.adjoint());
  const SuperOperator x = ad * SuperOperator::from_element(dim, alpha) -
                          SuperOperator::from_element(dim, alpha.conjugate()) * a;
  return grassmann::super_exp_nilpotent(x);
}

SuperOperator displacement_a(GeneratorSetPtr gens, int fock_dim,
                             const Element& alpha) {
  (void)gens;
  return displacement(grassmann::fermion_mode_a(fock_dim), alpha);
}

SuperOperator displacement_b(GeneratorSetPtr gens, const Element& beta) {
  (void)gens;
  return displacement(grassmann::fermion_mode_b(), beta);
}

FermionState coherent_state(GeneratorSetPtr gens, const Element& alpha) {
  return apply(displacement(grassmann::fermion_mode_a(2), alpha),
               FermionState::vacuum(gens, 2));
}

SuperOperator rho_alpha(GeneratorSetPtr gens, const Element& alpha) {
  const FermionState minus = coherent_state(gens, -alpha);
  const FermionState plus = coherent_state(gens, alpha);
  return minus.density_with(plus);
}

FermionState displaced_number_state(GeneratorSetPtr gens, const Element& alpha,
                                    int n) {
  if (n != 0 && n != 1) throw std::invalid_argument("n must be 0 or 1");
  return apply(displacement(grassmann::fermion_mode_a(2), alpha),
               FermionState::basis(gens, 2, n));
}

Eigen::MatrixXcd fermion_squeeze_matrix(double gamma) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Identity(4, 4);
  const double c = std::cos(gamma), v = std::sin(gamma);
  s(0, 0) = c;
  s(3, 3) = c;
  s(3, 0) = v;
  s(0, 3) = -v;
  return s;
}

SuperOperator fermion_squeeze(GeneratorSetPtr gens, double gamma) {
  return SuperOperator::from_matrix(std::move(gens),
                                    fermion_squeeze_matrix(gamma));
}

double gamma_from_tau(double tau) {
  if (tau < 0.0) throw std::invalid_argument("tau must be >= 0");
  return std::atan(std::exp(-tau / 2.0));
}

FermionGibbs fermion_gibbs(double tau) {
  if (tau < 0.0) throw std::invalid_argument("tau must be >= 0");
  return {tau, 1.0 + std::exp(-tau)};
}

Eigen::Matrix2cd FermionGibbs::matrix() const {
  Eigen::Matrix2cd f = Eigen::Matrix2cd::Zero();
  f(0, 0) = 1.0 / z;
  f(1, 1) = std::exp(-tau) / z;
  return f;
}

FermionState fermion_tmss(GeneratorSetPtr gens, double tau) {
  if (tau < 0.0) throw std::invalid_argument("tau must be >= 0");
  const double z = 1.0 + std::exp(-tau);
  Eigen::MatrixXcd col = Eigen::MatrixXcd::Zero(4, 4);
  col(0, 0) = 1.0 / std::sqrt(z);
  col(3, 0) = std::exp(-tau / 2.0) / std::sqrt(z);
  return FermionState::from_column(SuperOperator::from_matrix(std::move(gens), col));
}

namespace {

Element gen(GeneratorSetPtr gens, std::size_t idx, Complex coeff) {
  return Element::generator(std::move(gens), idx) * coeff;
}

}  // namespace

double cs_intertwining_residual(GeneratorSetPtr gens, double gamma, Complex ca,
                                Complex cb) {
  const Element alpha = gen(gens, kAlpha, ca);
  const Element beta = gen(gens, kBeta, cb);
  const SuperOperator s = fermion_squeeze(gens, gamma);
  const SuperOperator lhs = s * displacement_a(gens, 4, alpha) *
                            displacement_b(gens, beta);

  const double u = std::cos(gamma), v = std::sin(gamma);
  // (albar, bebar*) = B_F (alpha, beta*).
  const Element albar =
      gen(gens, kAlpha, u * ca) + gen(gens, kBetaStar, v * std::conj(cb));
  const Element bebar =
      gen(gens, kBeta, u * cb) - gen(gens, kAlphaStar, v * std::conj(ca));
  const SuperOperator rhs =
      displacement_a(gens, 4, albar) * displacement_b(gens, bebar) * s;
  return lhs.max_abs_diff(rhs);
}

SuperOperator reduced_density(GeneratorSetPtr gens, double tau, Complex ca,
                              Complex cb) {
  const Element alpha = gen(gens, kAlpha, ca);
  const Element beta = gen(gens, kBeta, cb);
  const SuperOperator s = fermion_squeeze(gens, gamma_from_tau(tau));
  const FermionState vac = FermionState::vacuum(gens, 4);

  const FermionState ket = apply(
      displacement_a(gens, 4, -alpha) * displacement_b(gens, -beta) * s, vac);
  const FermionState bra_state = apply(
      displacement_a(gens, 4, alpha) * displacement_b(gens, beta) * s, vac);
  return ket.density_with(bra_state).partial_trace_b();
}

SuperOperator displaced_gibbs_reference(GeneratorSetPtr gens, double tau,
                                        Complex ca) {
  const Element alpha = gen(gens, kAlpha, ca);
  const SuperOperator f =
      SuperOperator::from_matrix(gens, fermion_gibbs(tau).matrix());
  const SuperOperator dm = displacement_a(gens, 2, -alpha);
  const SuperOperator dp = displacement_a(gens, 2, alpha);
  return dm * f * dp.dagger();
}

std::pair<double, double> fermion_entropy_energy(double tau) {
  if (tau < 0.0) throw std::invalid_argument("tau must be >= 0");
  const double e = 1.0 / (std::exp(tau) + 1.0);
  const double s = std::log1p(std::exp(-tau)) + tau * e;
  return {s, e};
}

AltStateReport alt_state_check(double tau) {
  GeneratorSetPtr gens = default_generators();
  const double z = 1.0 + std::exp(-tau);
  Eigen::MatrixXcd col = Eigen::MatrixXcd::Zero(4, 4);
  col(1, 0) = 1.0 / std::sqrt(z);                     // |0>_a |1>_b
  col(2, 0) = std::exp(-tau / 2.0) / std::sqrt(z);    // |1>_a |0>_b
  const FermionState alt =
      FermionState::from_column(SuperOperator::from_matrix(gens, col));
  const SuperOperator rho_alt = alt.density_with(alt).partial_trace_b();

  const FermionState tmss = fermion_tmss(gens, tau);
  const SuperOperator rho_tmss = tmss.density_with(tmss).partial_trace_b();

  AltStateReport rep;
  rep.dev_density = rho_alt.max_abs_diff(rho_tmss);

  auto entropy_of = [](const SuperOperator& rho) {
    Eigen::MatrixXcd m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Element e = rho.matrix_element(i, j);
        m(i, j) = e.scalar_part();
      }
    return ent::von_neumann_entropy(ent::DensityMatrix(m));
  };
  rep.dev_entropy = std::abs(entropy_of(rho_alt) - entropy_of(rho_tmss));
  return rep;
}

}  // namespace sqz::fermion
