#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "csvout.hpp"
#include "entangle.hpp"
#include "fermion.hpp"
#include "fock.hpp"
#include "grassmann.hpp"
#include "superop.hpp"

namespace sqz::verify {

using Complex = std::complex<double>;
using grassmann::Element;
using grassmann::GeneratorSetPtr;
using grassmann::Monomial;
using grassmann::SuperOperator;

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::warn: return "warn";
    default: return "fail";
  }
}

Status SuiteReport::overall() const {
  Status worst = Status::pass;
  for (const auto& c : checks)
    if (int(c.status) > int(worst)) worst = c.status;
  return worst;
}

namespace {

class Runner {
 public:
  explicit Runner(SuiteReport& report) : report_(report) {}

  // Runs `fn` returning a residual; failures to evaluate count as fail.
  void run(const std::string& name, double tolerance,
           const std::function<double()>& fn, const std::string& notes = "") {
    const auto t0 = std::chrono::steady_clock::now();
    double residual = 0.0;
    std::string note = notes;
    bool threw = false;
    try {
      residual = fn();
    } catch (const std::exception& e) {
      threw = true;
      note = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    r.residual = threw ? std::numeric_limits<double>::quiet_NaN() : residual;
    r.tolerance = tolerance;
    r.status = (threw || !(residual <= tolerance)) ? Status::fail : Status::pass;
    r.notes = note;
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    report_.checks.push_back(std::move(r));
  }

  // Soft-degradation check: warn above warn_tol, fail above fail_tol.
  void run_soft(const std::string& name, double warn_tol, double fail_tol,
                const std::function<double()>& fn,
                const std::string& notes = "") {
    const auto t0 = std::chrono::steady_clock::now();
    double residual = 0.0;
    std::string note = notes;
    bool threw = false;
    try {
      residual = fn();
    } catch (const std::exception& e) {
      threw = true;
      note = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    r.residual = threw ? std::numeric_limits<double>::quiet_NaN() : residual;
    r.tolerance = warn_tol;
    r.status = (threw || !(residual <= fail_tol)) ? Status::fail
               : residual <= warn_tol             ? Status::pass
                                                  : Status::warn;
    r.notes = note;
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    report_.checks.push_back(std::move(r));
  }

  // Informational entry: recorded outcome, never fails the suite.
  void note(const std::string& name, double residual, const std::string& notes) {
    CheckResult r;
    r.name = name;
    r.residual = residual;
    r.tolerance = std::numeric_limits<double>::infinity();
    r.status = Status::pass;
    r.notes = notes;
    r.seconds = 0.0;
    report_.checks.push_back(std::move(r));
  }

 private:
  SuiteReport& report_;
};

// ---------------------------------------------------------------------------
// boson suite

void boson_suite(Runner& run, const Options& opt) {
  using namespace fock;
  const int expm_cutoff = opt.cutoff > 0 ? opt.cutoff : 12;
  const FockCutoff big(60);

  run.run("boson/ladder_commutator", 1e-12, [&] {
    const auto [a, ad] = make_ladder(big);
    const Eigen::MatrixXcd comm = a * ad - ad * a;
    double dev = 0.0;
    for (int m = 0; m < big.n_max; ++m)
      for (int n = 0; n < big.n_max; ++n)
        dev = std::max(dev, std::abs(comm(m, n) - (m == n ? 1.0 : 0.0)));
    return dev;
  });

  run.run("boson/displacement_unitarity", 1e-10, [&] {
    const FockCutoff c(30);
    const Eigen::MatrixXcd d = displacement_operator(Complex(0.7, 0.3), c);
    return (d * d.adjoint() - Eigen::MatrixXcd::Identity(c.dim(), c.dim()))
        .cwiseAbs()
        .maxCoeff();
  });

  run.run("boson/displacement_vacuum_overlap", 1e-10, [&] {
    const Eigen::MatrixXcd d = displacement_operator(Complex(1.0, 0.0), FockCutoff(30));
    return std::abs(d(0, 0) - Complex(std::exp(-0.5), 0.0));
  });

  run.run("boson/displacement_conjugation", 1e-9, [&] {
    const FockCutoff c(30);
    const Complex xi(0.5, 0.0);
    const Eigen::MatrixXcd a = ladder_a(c);
    const Eigen::MatrixXcd d = displacement_operator(xi, c);
    const Eigen::MatrixXcd lhs = d * a * d.adjoint();
    const Eigen::MatrixXcd rhs =
        a - xi * Eigen::MatrixXcd::Identity(c.dim(), c.dim());
    return (lhs - rhs).topLeftCorner(16, 16).cwiseAbs().maxCoeff();
  });

  run.run("boson/squeeze_unitarity", 1e-9, [&] {
    const FockCutoff c(expm_cutoff);
    const Eigen::MatrixXcd s = squeeze_expm(0.5, c);
    const int d2 = c.dim() * c.dim();
    return (s * s.adjoint() - Eigen::MatrixXcd::Identity(d2, d2))
        .cwiseAbs()
        .maxCoeff();
  });

  run.run("boson/route_triangle", 1e-9, [&] {
    const FockCutoff c(expm_cutoff);
    double dev = 0.0;
    for (double gamma : {0.3, 0.7, 1.0}) {
      const TwoModeState se = tmss_expm_route(gamma, c);
      const TwoModeState sb = tmss_bch(gamma, c);
      const TwoModeState sf = tmss_fock(param_from_gamma(gamma).tau, c);
      dev = std::max(dev, se.max_amplitude_diff(sb));
      dev = std::max(dev, se.max_amplitude_diff(sf));
      dev = std::max(dev, sb.max_amplitude_diff(sf));
    }
    return dev;
  });

  run.run("boson/expm_route_diagonality", 1e-10, [&] {
    const TwoModeState s = tmss_expm_route(0.5, FockCutoff(expm_cutoff));
    double dev = 0.0;
    for (int m = 0; m < s.dim_a(); ++m)
      for (int n = 0; n < s.dim_b(); ++n)
        if (m != n) dev = std::max(dev, std::abs(s.amplitude(m, n)));
    return dev;
  });

  run.run("boson/parametrization_roundtrip", 1e-12, [&] {
    double dev = 0.0;
    for (double gamma : {0.1, 0.5, 0.881373587019543, 1.0, 1.5}) {
      const SqueezeParametrization p = param_from_gamma(gamma);
      const SqueezeParametrization q = param_from_chi(param_from_tau(p.tau).chi);
      dev = std::max(dev, std::abs(q.gamma - gamma) / gamma);
      dev = std::max(dev, std::abs(q.tau - p.tau) / p.tau);
    }
    return dev;
  });

  run.run("boson/bch_fock_identity", 1e-12, [&] {
    double dev = 0.0;
    for (double gamma : {0.3, 0.7, 1.0, 1.4}) {
      const TwoModeState b = tmss_bch(gamma, big);
      const TwoModeState f = tmss_fock(param_from_gamma(gamma).tau, big);
      dev = std::max(dev, b.max_amplitude_diff(f));
    }
    return dev;
  });

  run.run("boson/squeezed_vacuum_annihilated", 1e-8, [&] {
    const auto [a, ad] = make_ladder(big);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(big.dim(), big.dim());
    double dev = 0.0;
    for (double gamma : {0.5, 1.0}) {
      const TwoModeState s = tmss_bch(gamma, big);
      // (u a - v b+) c: mode-a action a c, mode-b action c b^T etc.
      const Eigen::MatrixXcd am = std::cosh(gamma) * (a * s.amplitudes()) -
                                  std::sinh(gamma) * (s.amplitudes() * ad.transpose());
      (void)id;
      double nrm = 0.0;
      for (int m = 0; m <= 30; ++m)
        for (int n = 0; n <= 30; ++n) nrm += std::norm(am(m, n));
      dev = std::max(dev, std::sqrt(nrm));
    }
    return dev;
  });

  run.run("boson/bogoliubov_determinants", 1e-12, [&] {
    double dev = 0.0;
    for (double gamma : {0.0, 0.5, 1.0, 2.0}) {
      dev = std::max(dev, std::abs(bogoliubov_matrix(gamma, StatisticsKind::boson)
                                       .determinant() - 1.0));
      dev = std::max(dev, std::abs(bogoliubov_matrix(gamma, StatisticsKind::fermion)
                                       .determinant() - 1.0));
    }
    return dev;
  });

  run.run("boson/bogoliubov_operator_a", 1e-9, [&] {
    return bogoliubov_operator_check(0.5, FockCutoff(expm_cutoff)).dev_a;
  });

  run.run("boson/bogoliubov_operator_b", 1e-9, [&] {
    return bogoliubov_operator_check(0.5, FockCutoff(expm_cutoff)).dev_b;
  });

  run.run("boson/bogoliubov_commutators", 1e-8, [&] {
    const BogoliubovOperatorReport r = bogoliubov_operator_check(1.0, FockCutoff(16));
    return std::max({r.dev_comm_aa, r.dev_comm_bb, r.dev_comm_ab});
  });

  run.run("boson/cs_ordering_identity", 1e-8, [&] {
    const FockCutoff c(30);
    const double gamma = 0.4;
    const DisplacementParams p{Complex(0.3, 0.0), Complex(0.0, 0.2)};
    const TwoModeState lhs = cs_state(p, gamma, c);
    const DisplacementParams q = bogoliubov_transform_params(p, gamma,
                                                             StatisticsKind::boson);
    const TwoModeState rhs = displace_state(
        tmss_fock(param_from_gamma(gamma).tau, c), q.xi, q.eta);
    return lhs.max_amplitude_diff(rhs);
  });

  run.run("boson/tmss_tail_bound", 1e-10, [&] {
    double tail = 0.0;
    for (double gamma : {0.5, 1.0})
      tail = std::max(tail, tmss_tail_weight(gamma, big));
    return tail;
  });

  // Soft tail audit: truncation-tail violations degrade to warn, only gross
  // leakage fails.
  run.run_soft("boson/construction_tails", 1e-10, 1e-6, [&] {
    double tail = coherent_tail_weight(Complex(0.7, 0.3), FockCutoff(30));
    tail = std::max(tail, tmss_bch(1.0, big).tail_weight());
    tail = std::max(tail,
                    cs_state({Complex(0.3, 0.0), Complex(0.0, 0.2)}, 0.5,
                             FockCutoff(40))
                        .tail_weight());
    return tail;
  });

  run.run("boson/gibbs_identity", 1e-12, [&] {
    double dev = 0.0;
    for (double tau : {0.5, 1.0, 2.0}) {
      const ent::DensityMatrix r = ent::partial_trace_b(tmss_fock(tau, big));
      dev = std::max(dev,
                     r.max_abs_diff(ent::gibbs_density(tau, big).to_density()));
    }
    return dev;
  });

  run.run("boson/displaced_gibbs", 1e-8, [&] {
    const ent::DisplacedGibbsReport r =
        ent::displaced_gibbs_check(Complex(0.3, 0.0), 1.0, FockCutoff(40));
    return r.dev_vs_reference;
  });

  run.run("boson/displaced_gibbs_eta_independence", 1e-10, [&] {
    return ent::displaced_gibbs_check(Complex(0.3, 0.0), 1.0, FockCutoff(40))
        .dev_eta_independence;
  });

  run.run("boson/closed_form_entropy_energy", 1e-10, [&] {
    double dev = 0.0;
    for (double tau : {0.5, 1.0, 2.0}) {
      const ent::DensityMatrix r = ent::partial_trace_b(tmss_fock(tau, big));
      dev = std::max(dev, std::abs(ent::von_neumann_entropy(r) -
                                   ent::entropy_closed_form(tau)));
      dev = std::max(dev, std::abs(ent::reduced_energy(r) -
                                   ent::energy_closed_form(tau)));
    }
    return dev;
  });

  run.run("boson/entropy_displacement_invariance", 1e-8, [&] {
    const FockCutoff c(40);
    const double gamma = 0.5;
    const double tau = param_from_gamma(gamma).tau;
    const TwoModeState base = tmss_fock(tau, c);
    double smin = 1e300, smax = -1e300;
    for (Complex xi : {Complex(0, 0), Complex(0.3, 0), Complex(0, 0.2)})
      for (Complex eta : {Complex(0, 0), Complex(0.3, 0), Complex(0, 0.2)}) {
        const double s = ent::von_neumann_entropy(
            ent::partial_trace_b(displace_state(base, xi, eta)));
        smin = std::min(smin, s);
        smax = std::max(smax, s);
      }
    return smax - smin;
  });

  run.run("boson/energy_ordering", 1e-12, [&] {
    const FockCutoff c(40);
    const double gamma = 0.5;
    const TwoModeState base = tmss_fock(param_from_gamma(gamma).tau, c);
    const double e0 = base.mode_a_energy();
    double worst = 0.0;
    for (Complex xi : {Complex(0.3, 0), Complex(0, 0.2), Complex(0.1, 0.1)})
      for (Complex eta : {Complex(0, 0), Complex(0.4, 0)}) {
        const double e = displace_state(base, xi, eta).mode_a_energy();
        // strictly above the undisplaced energy by |xi|^2
        worst = std::max(worst, std::abs(e - e0 - std::norm(xi)));
      }
    // eta alone must not change the reduced energy
    worst = std::max(worst, std::abs(displace_state(base, Complex(0, 0),
                                                    Complex(0.4, 0))
                                         .mode_a_energy() - e0));
    return worst;
  });

  run.run("boson/curve_chi_consistency", 1e-12, [&] {
    double dev = 0.0;
    for (double chi : {1.5, 2.0, 3.0, 10.0, 100.0, 1e4, 1e6}) {
      const ent::EntanglementCurvePoint p = ent::curve_chi(chi);
      dev = std::max(dev, std::abs(p.entropy - ent::entropy_closed_form(p.tau)));
      dev = std::max(dev, std::abs(p.energy - ent::energy_closed_form(p.tau)) /
                              std::max(1.0, p.energy));
    }
    return dev;
  });

  run.run("boson/curve_monotonicity", 0.0, [&] {
    const csv::GridSpec spec{1.01, 1e4, 400, csv::Spacing::log};
    const std::vector<double> grid = csv::make_grid(spec);
    ent::EntanglementCurvePoint prev = ent::curve_chi(grid.front());
    int violations = 0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const ent::EntanglementCurvePoint p = ent::curve_chi(grid[i]);
      if (!(p.entropy > prev.entropy) || !(p.energy > prev.energy) ||
          !(p.delta_s > prev.delta_s))
        ++violations;
      prev = p;
    }
    return double(violations);
  });

  run.run("boson/psi_n_stats", 1e-12, [&] {
    double dev = 0.0;
    const ent::PsiStats s2 = ent::psi_n_stats(2);
    dev = std::max(dev, std::abs(s2.energy - 0.5));
    dev = std::max(dev, std::abs(s2.entropy - std::log(2.0)));
    const fock::TwoModeState psi4 = ent::psi_n_state(4);
    dev = std::max(dev, std::abs(ent::von_neumann_entropy(ent::partial_trace_b(psi4)) -
                                 std::log(4.0)));
    dev = std::max(dev, std::abs(psi4.mode_a_energy() - 1.5));
    return dev;
  });

  run.run("boson/tmss_entropy_excess_positive", 0.0, [&] {
    int violations = 0;
    for (int n = 2; n <= 100; ++n)
      if (!(ent::tmss_entropy_excess(n) > 0.0)) ++violations;
    return double(violations);
  });

  run.run("boson/legendre_identities", 1e-10, [&] {
    double dev = 0.0;
    for (double tau : {0.5, 1.0, 2.0}) {
      const ent::LagrangeSolution l = ent::legendre_report(tau, big);
      dev = std::max({dev, l.residual_log_z, l.residual_legendre});
    }
    return dev;
  });
}

// ---------------------------------------------------------------------------
// grassmann suite

Element random_element(const GeneratorSetPtr& gens, std::mt19937_64& rng,
                       int terms) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<Monomial> mono(0, (Monomial{1} << gens->size()) - 1);
  Element out(gens);
  for (int i = 0; i < terms; ++i)
    out = out + Element::monomial(gens, mono(rng),
                                  Complex(coef(rng), coef(rng)));
  return out;
}

SuperOperator random_superop(const GeneratorSetPtr& gens, int dim,
                             std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<Monomial> mono(0, (Monomial{1} << gens->size()) - 1);
  SuperOperator out(gens, dim);
  for (int t = 0; t < terms; ++t) {
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = Complex(coef(rng), coef(rng));
    out = out + SuperOperator::from_element(
                    dim, Element::monomial(gens, mono(rng), 1.0)) *
                    SuperOperator::from_matrix(gens, m);
  }
  return out;
}

void grassmann_suite(Runner& run, const Options& opt) {
  GeneratorSetPtr gens = fermion::default_generators();
  std::mt19937_64 rng(opt.seed);

  run.run("grassmann/nilpotency", 0.0, [&] {
    double dev = 0.0;
    for (std::size_t i = 0; i < gens->size(); ++i) {
      const Element g = Element::generator(gens, i);
      dev = std::max(dev, (g * g).max_abs());
    }
    return dev;
  });

  run.run("grassmann/anticommutation", 0.0, [&] {
    double dev = 0.0;
    for (std::size_t i = 0; i < gens->size(); ++i)
      for (std::size_t j = 0; j < gens->size(); ++j) {
        const Element x = Element::generator(gens, i);
        const Element y = Element::generator(gens, j);
        dev = std::max(dev, (x * y + y * x).max_abs());
      }
    return dev;
  });

  run.run("grassmann/conjugation_involution", 0.0, [&] {
    double dev = 0.0;
    for (int t = 0; t < 50; ++t) {
      const Element x = random_element(gens, rng, 4);
      dev = std::max(dev, x.conjugate().conjugate().max_abs_diff(x));
    }
    return dev;
  });

  run.run("grassmann/conjugation_antiautomorphism", 0.0, [&] {
    double dev = 0.0;
    for (int t = 0; t < 50; ++t) {
      const Element x = random_element(gens, rng, 4);
      const Element y = random_element(gens, rng, 4);
      dev = std::max(dev, (x * y).conjugate().max_abs_diff(y.conjugate() *
                                                           x.conjugate()));
    }
    return dev;
  });

  run.run("grassmann/conjugation_worked_example", 0.0, [&] {
    // (alpha beta* + c beta alpha*)* = beta alpha* + c* alpha beta*  pattern:
    // conjugate of a sum of two-generator monomials with a complex scale.
    const Complex c(2.0, 1.0);
    const Element a = Element::generator(gens, fermion::kAlpha);
    const Element as = Element::generator(gens, fermion::kAlphaStar);
    const Element b = Element::generator(gens, fermion::kBeta);
    const Element bs = Element::generator(gens, fermion::kBetaStar);
    const Element lhs = (a * as + b * bs * c).conjugate();
    const Element rhs = a * as + b * bs * std::conj(c);
    return lhs.max_abs_diff(rhs);
  });

  run.run("grassmann/berezin_identities", 0.0, [&] {
    double dev = 0.0;
    const Element one = Element::scalar(gens, 1.0);
    const Element a = Element::generator(gens, fermion::kAlpha);
    const Element as = Element::generator(gens, fermion::kAlphaStar);
    // int d(alpha) alpha = 1
    dev = std::max(dev, a.berezin(fermion::kAlpha).max_abs_diff(one));
    // int d(alpha) 1 = 0
    dev = std::max(dev, one.berezin(fermion::kAlpha).max_abs());
    // int d(alpha*) alpha* = 1
    dev = std::max(dev, as.berezin(fermion::kAlphaStar).max_abs_diff(one));
    // int d(alpha*) d(alpha) alpha alpha* = 1
    dev = std::max(dev, (a * as)
                            .berezin(fermion::kAlpha)
                            .berezin(fermion::kAlphaStar)
                            .max_abs_diff(one));
    return dev;
  });

  run.run("grassmann/superalgebra_relations", 0.0, [&] {
    double dev = 0.0;
    for (int dim : {2, 4}) {
      const SuperOperator a = SuperOperator::from_matrix(gens, grassmann::fermion_mode_a(dim));
      const SuperOperator ad = a.dagger();
      const SuperOperator one = SuperOperator::identity(gens, dim);
      dev = std::max(dev, (a * ad + ad * a - one).max_abs());
      dev = std::max(dev, (a * a).max_abs());
      if (dim == 4) {
        const SuperOperator b = SuperOperator::from_matrix(gens, grassmann::fermion_mode_b());
        const SuperOperator bd = b.dagger();
        dev = std::max(dev, (b * bd + bd * b - one).max_abs());
        dev = std::max(dev, (a * b + b * a).max_abs());
        dev = std::max(dev, (a * bd + bd * a).max_abs());
      }
      for (std::size_t i = 0; i < gens->size(); ++i) {
        const SuperOperator g =
            SuperOperator::from_element(dim, Element::generator(gens, i));
        dev = std::max(dev, (g * a + a * g).max_abs());
        dev = std::max(dev, (g * ad + ad * g).max_abs());
      }
    }
    return dev;
  });

  run.run("grassmann/super_mul_associativity", 0.0, [&] {
    double dev = 0.0;
    for (int t = 0; t < 100; ++t) {
      const SuperOperator x = random_superop(gens, 4, rng, 3);
      const SuperOperator y = random_superop(gens, 4, rng, 3);
      const SuperOperator z = random_superop(gens, 4, rng, 3);
      dev = std::max(dev, ((x * y) * z).max_abs_diff(x * (y * z)));
    }
    return dev;
  });

  run.run("grassmann/dagger_antiautomorphism", 0.0, [&] {
    double dev = 0.0;
    for (int t = 0; t < 100; ++t) {
      const SuperOperator x = random_superop(gens, 2, rng, 3);
      const SuperOperator y = random_superop(gens, 2, rng, 3);
      dev = std::max(dev, (x * y).dagger().max_abs_diff(y.dagger() * x.dagger()));
      dev = std::max(dev, x.dagger().dagger().max_abs_diff(x));
    }
    return dev;
  });

  run.run("grassmann/dagger_worked_example", 0.0, [&] {
    // (a alpha a+ beta*)+ = a a+ alpha* beta reproduced factor-exactly.
    const SuperOperator a =
        SuperOperator::from_matrix(gens, grassmann::fermion_mode_a(2));
    const SuperOperator ad = a.dagger();
    const SuperOperator al = SuperOperator::from_element(
        2, Element::generator(gens, fermion::kAlpha));
    const SuperOperator bs = SuperOperator::from_element(
        2, Element::generator(gens, fermion::kBetaStar));
    const SuperOperator als = SuperOperator::from_element(
        2, Element::generator(gens, fermion::kAlphaStar));
    const SuperOperator be = SuperOperator::from_element(
        2, Element::generator(gens, fermion::kBeta));
    const SuperOperator lhs = (a * al * ad * bs).dagger();
    const SuperOperator rhs = a * ad * als * be;
    return lhs.max_abs_diff(rhs);
  });

  run.run("grassmann/exp_nilpotent", 0.0, [&] {
    const Element alpha = Element::generator(gens, fermion::kAlpha);
    const SuperOperator d = fermion::displacement(grassmann::fermion_mode_a(2), alpha);
    const SuperOperator dm = fermion::displacement(grassmann::fermion_mode_a(2), -alpha);
    return (d * dm - SuperOperator::identity(gens, 2)).max_abs();
  });
}

// ---------------------------------------------------------------------------
// fermion suite

void fermion_suite(Runner& run, const Options& opt) {
  using namespace fermion;
  GeneratorSetPtr gens = default_generators();
  const Element alpha = Element::generator(gens, kAlpha);
  (void)opt;

  run.run("fermion/displacement_conjugation", 0.0, [&] {
    const SuperOperator d = displacement_a(gens, 2, alpha);
    const SuperOperator a =
        SuperOperator::from_matrix(gens, grassmann::fermion_mode_a(2));
    const SuperOperator rhs =
        a - SuperOperator::from_element(2, alpha);
    return (d * a * d.dagger() - rhs).max_abs();
  });

  run.run("fermion/displacement_inverse", 0.0, [&] {
    const SuperOperator d = displacement_a(gens, 2, alpha);
    return (d * d.dagger() - SuperOperator::identity(gens, 2)).max_abs();
  });

  run.run("fermion/coherent_state_expansion", 0.0, [&] {
    // |alpha> = (1 - alpha* alpha / 2)|0> - alpha |1>
    const FermionState s = coherent_state(gens, alpha);
    const Element as = Element::generator(gens, kAlphaStar);
    const Element a0 = Element::scalar(gens, 1.0) -
                       (as * alpha) * Complex(0.5, 0.0);
    double dev = s.amplitude(0).max_abs_diff(a0);
    dev = std::max(dev, s.amplitude(1).max_abs_diff(-alpha));
    return dev;
  });

  run.run("fermion/coherent_eigenvalue", 0.0, [&] {
    const FermionState s = coherent_state(gens, alpha);
    const SuperOperator a =
        SuperOperator::from_matrix(gens, grassmann::fermion_mode_a(2));
    const SuperOperator lhs = a * s.column();
    const SuperOperator rhs = SuperOperator::from_element(2, alpha) * s.column();
    return lhs.max_abs_diff(rhs);
  });

  run.run("fermion/coherent_overlap", 0.0, [&] {
    // <alpha|beta> = 1 + alpha* beta - aa*/2 - bb*/2 + aa* bb*/4 in canonical
    // internal order.
    const Element beta = Element::generator(gens, kBeta);
    const FermionState sa = coherent_state(gens, alpha);
    const FermionState sb = coherent_state(gens, beta);
    const Element got = sa.overlap(sb);
    const Element as = Element::generator(gens, kAlphaStar);
    const Element bs = Element::generator(gens, kBetaStar);
    const Element want = Element::scalar(gens, 1.0) + as * beta +
                         (alpha * as) * Complex(0.5, 0.0) +
                         (beta * bs) * Complex(0.5, 0.0) +
                         (alpha * as * beta * bs) * Complex(0.25, 0.0);
    return got.max_abs_diff(want);
  });

  run.run("fermion/rho_alpha_matrix", 0.0, [&] {
    // [[1 - a*a, a*], [-a, a*a]]
    const SuperOperator rho = rho_alpha(gens, alpha);
    const Element as = Element::generator(gens, kAlphaStar);
    const Element one = Element::scalar(gens, 1.0);
    double dev = rho.matrix_element(0, 0).max_abs_diff(one - as * alpha);
    dev = std::max(dev, rho.matrix_element(0, 1).max_abs_diff(as));
    dev = std::max(dev, rho.matrix_element(1, 0).max_abs_diff(-alpha));
    dev = std::max(dev, rho.matrix_element(1, 1).max_abs_diff(as * alpha));
    return dev;
  });

  run.run("fermion/rho_alpha_trace", 0.0, [&] {
    const SuperOperator rho = rho_alpha(gens, alpha);
    return rho.trace().max_abs_diff(Element::scalar(gens, 1.0));
  });

  run.run("fermion/rho_alpha_number", 0.0, [&] {
    const SuperOperator rho = rho_alpha(gens, alpha);
    const Eigen::MatrixXcd a1 = grassmann::fermion_mode_a(2);
    const SuperOperator num =
        SuperOperator::from_matrix(gens, (a1.adjoint() * a1).eval());
    const Element as = Element::generator(gens, kAlphaStar);
    return (rho * num).trace().max_abs_diff(as * alpha);
  });

  run.run("fermion/rho_alpha_sign_property", 0.0, [&] {
    // <m|rho|n> = (-1)^{m(n+1)} <alpha|n><m|alpha>
    const SuperOperator rho = rho_alpha(gens, alpha);
    const FermionState coh = coherent_state(gens, alpha);
    double dev = 0.0;
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n) {
        const Element lhs = rho.matrix_element(m, n);
        const Element an = coh.overlap(FermionState::basis(gens, 2, n));
        const Element ma = FermionState::basis(gens, 2, m).overlap(coh);
        const double sign = (m * (n + 1)) % 2 ? -1.0 : 1.0;
        dev = std::max(dev, lhs.max_abs_diff((an * ma) * sign));
      }
    return dev;
  });

  run.run("fermion/diagonal_symmetry", 0.0, [&] {
    // <n|-alpha><alpha|n> = <alpha|n><n|alpha>
    const FermionState cm = coherent_state(gens, -alpha);
    const FermionState cp = coherent_state(gens, alpha);
    double dev = 0.0;
    for (int n = 0; n < 2; ++n) {
      const FermionState bn = FermionState::basis(gens, 2, n);
      const Element lhs = bn.overlap(cm) * cp.overlap(bn);
      const Element rhs = cp.overlap(bn) * bn.overlap(cp);
      dev = std::max(dev, lhs.max_abs_diff(rhs));
    }
    return dev;
  });

  run.run("fermion/completeness", 0.0, [&] {
    const FermionState coh = coherent_state(gens, alpha);
    const SuperOperator proj = coh.density_with(coh);
    SuperOperator integrated(gens, 2);
    for (const auto& [m, mat] : proj.terms()) {
      const Element e = Element::monomial(gens, m, 1.0)
                            .berezin(kAlpha)
                            .berezin(kAlphaStar);
      if (e.is_zero()) continue;
      const auto& [mm, cc] = *e.terms().begin();
      integrated = integrated +
                   SuperOperator::from_element(2, Element::monomial(gens, mm, cc)) *
                       SuperOperator::from_matrix(gens, mat);
    }
    return (integrated - SuperOperator::identity(gens, 2)).max_abs();
  });

  run.run("fermion/displaced_number_state", 0.0, [&] {
    // D(alpha)|1> = (a+ - alpha*)|alpha>
    const FermionState lhs = displaced_number_state(gens, alpha, 1);
    const SuperOperator ad = SuperOperator::from_matrix(
        gens, grassmann::fermion_mode_a(2).adjoint().eval());
    const SuperOperator op =
        ad - SuperOperator::from_element(2, alpha.conjugate());
    const FermionState rhs = apply(op, coherent_state(gens, alpha));
    return lhs.column().max_abs_diff(rhs.column());
  });

  run.run("fermion/dual_eigenvalue", 0.0, [&] {
    // <alpha| a+ = <alpha| alpha*
    const FermionState coh = coherent_state(gens, alpha);
    const SuperOperator bra = coh.column().dagger();
    const SuperOperator ad = SuperOperator::from_matrix(
        gens, grassmann::fermion_mode_a(2).adjoint().eval());
    const SuperOperator lhs = bra * ad;
    const SuperOperator rhs =
        bra * SuperOperator::from_element(2, alpha.conjugate());
    return lhs.max_abs_diff(rhs);
  });

  {
    // Recorded outcomes for the two ambiguous printed statements.
    GeneratorSetPtr g2 = gens;
    const SuperOperator rp = rho_alpha(g2, alpha);
    const SuperOperator rm = rho_alpha(g2, -alpha);
    const double dev_dagger_minus = rp.dagger().max_abs_diff(rm);
    const double dev_dagger_self = rp.dagger().max_abs_diff(rp);
    run.note("fermion/rho_dagger_outcome", dev_dagger_minus,
             dev_dagger_minus == 0.0
                 ? "rho(alpha)+ = rho(-alpha) exactly; rho(alpha)+ != rho(alpha), max dev " +
                       std::to_string(dev_dagger_self)
                 : "unexpected");
  }

  {
    const SuperOperator rho = rho_alpha(gens, alpha);
    std::string rendered;
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n)
        rendered += "[" + std::to_string(m) + "," + std::to_string(n) + "] " +
                    rho.matrix_element(m, n).to_string() + "; ";
    run.note("fermion/rho_alpha_rendered", 0.0, rendered);
  }

  run.run("fermion/squeeze_car_preserved", 1e-13, [&] {
    const double gamma = 0.7;
    const Eigen::MatrixXcd s = fermion_squeeze_matrix(gamma);
    const Eigen::MatrixXcd a = grassmann::fermion_mode_a(4);
    const Eigen::MatrixXcd b = grassmann::fermion_mode_b();
    const Eigen::MatrixXcd ag = s * a * s.adjoint();
    const Eigen::MatrixXcd bg = s * b * s.adjoint();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
    double dev = (ag * ag.adjoint() + ag.adjoint() * ag - id).cwiseAbs().maxCoeff();
    dev = std::max(dev, (bg * bg.adjoint() + bg.adjoint() * bg - id).cwiseAbs().maxCoeff());
    dev = std::max(dev, (ag * bg + bg * ag).cwiseAbs().maxCoeff());
    return dev;
  });

  run.run("fermion/squeeze_bogoliubov", 1e-13, [&] {
    const double gamma = 0.7;
    const Eigen::MatrixXcd s = fermion_squeeze_matrix(gamma);
    const Eigen::MatrixXcd a = grassmann::fermion_mode_a(4);
    const Eigen::MatrixXcd b = grassmann::fermion_mode_b();
    const double u = std::cos(gamma), v = std::sin(gamma);
    double dev = (s * a * s.adjoint() - (u * a - v * b.adjoint()))
                     .cwiseAbs()
                     .maxCoeff();
    dev = std::max(dev, (s * b * s.adjoint() - (u * b + v * a.adjoint()))
                            .cwiseAbs()
                            .maxCoeff());
    return dev;
  });

  run.run("fermion/tmss_squeeze_route", 1e-13, [&] {
    double dev = 0.0;
    for (double tau : {0.0, 0.5, 1.0, 3.0}) {
      const FermionState direct = fermion_tmss(gens, tau);
      const FermionState via = apply(fermion_squeeze(gens, gamma_from_tau(tau)),
                                     FermionState::vacuum(gens, 4));
      dev = std::max(dev, direct.column().max_abs_diff(via.column()));
    }
    return dev;
  });

  run.run("fermion/cs_intertwining", 1e-13, [&] {
    double dev = 0.0;
    for (double gamma : {0.0, 0.6, M_PI / 4})
      dev = std::max(dev, cs_intertwining_residual(gens, gamma));
    dev = std::max(dev, cs_intertwining_residual(gens, 0.6, Complex(0.0, 1.0),
                                                 Complex(2.0, 0.0)));
    return dev;
  });

  run.run("fermion/cs_not_physical", 0.0, [&] {
    const FermionState cs = apply(
        fermion_squeeze(gens, 0.6) * displacement_a(gens, 4, alpha),
        FermionState::vacuum(gens, 4));
    return cs.is_physical() ? 1.0 : 0.0;
  });

  run.run("fermion/reduced_density_factorization", 1e-14, [&] {
    double dev = 0.0;
    for (double tau : {0.3, 0.9, 2.0}) {
      for (Complex ca : {Complex(1, 0), Complex(0, 0.7)}) {
        const SuperOperator got = reduced_density(gens, tau, ca, Complex(1.3, 0.0));
        const SuperOperator want = displaced_gibbs_reference(gens, tau, ca);
        dev = std::max(dev, got.max_abs_diff(want));
      }
    }
    return dev;
  });

  run.run("fermion/reduced_density_gibbs_at_zero", 1e-14, [&] {
    const double tau = 0.9;
    const SuperOperator got = reduced_density(gens, tau, Complex(0, 0), Complex(0, 0));
    const SuperOperator want =
        SuperOperator::from_matrix(gens, fermion_gibbs(tau).matrix());
    return got.max_abs_diff(want);
  });

  run.run("fermion/alt_state_identity", 1e-15, [&] {
    double dev = 0.0;
    for (double tau : {0.5, 1.0, 5.0}) {
      const AltStateReport r = alt_state_check(tau);
      dev = std::max({dev, r.dev_density, r.dev_entropy});
    }
    return dev;
  });

  run.run("fermion/entropy_energy", 1e-13, [&] {
    double dev = 0.0;
    for (double tau : {0.0, 0.5, 1.0, 4.0}) {
      const auto [s_cf, e_cf] = fermion_entropy_energy(tau);
      const FermionState st = fermion_tmss(gens, tau);
      const SuperOperator rho = st.density_with(st).partial_trace_b();
      Eigen::MatrixXcd m(2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = rho.matrix_element(i, j).scalar_part();
      const ent::DensityMatrix dm(m);
      dev = std::max(dev, std::abs(ent::von_neumann_entropy(dm) - s_cf));
      dev = std::max(dev, std::abs(ent::reduced_energy(dm) - e_cf));
    }
    return dev;
  });

  run.run("fermion/maximal_entropy_at_tau_zero", 1e-15, [&] {
    const auto [s, e] = fermion_entropy_energy(0.0);
    return std::max(std::abs(s - std::log(2.0)), std::abs(e - 0.5));
  });
}

// ---------------------------------------------------------------------------
// maxent suite

void maxent_suite(Runner& run, const Options& opt) {
  const int cutoff = opt.cutoff > 0 ? opt.cutoff : 8;

  run.run("maxent/dominance_at_unit_energy", 0.0, [&] {
    const ent::MaxentReport r = ent::maxent_property_check(
        1.0, fock::FockCutoff(cutoff), opt.samples, opt.seed);
    return r.violated ? 1.0 : 0.0;
  }, "finite-sample corroboration, not a proof");

  run.run("maxent/tmss_attains_bound", 1e-10, [&] {
    const ent::MaxentReport r = ent::maxent_property_check(
        1.0, fock::FockCutoff(cutoff), 1, opt.seed);
    return std::abs(r.tmss_gap);
  });

  run.run("maxent/zero_energy_edge", 0.0, [&] {
    const ent::MaxentReport r = ent::maxent_property_check(
        0.0, fock::FockCutoff(cutoff), opt.samples, opt.seed);
    return std::max(r.max_sampled_entropy, r.bound);
  });

  run.run("maxent/seed_reproducibility", 0.0, [&] {
    const ent::MaxentReport r1 = ent::maxent_property_check(
        1.0, fock::FockCutoff(cutoff), 25, opt.seed);
    const ent::MaxentReport r2 = ent::maxent_property_check(
        1.0, fock::FockCutoff(cutoff), 25, opt.seed);
    return std::abs(r1.max_sampled_entropy - r2.max_sampled_entropy);
  });
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const Options& opt) {
  SuiteReport report;
  report.suite = suite;
  Runner runner(report);
  if (suite == "boson" || suite == "all")
    boson_suite(runner, opt);
  else if (suite == "grassmann")
    grassmann_suite(runner, opt);
  else if (suite == "fermion")
    fermion_suite(runner, opt);
  else if (suite == "maxent")
    maxent_suite(runner, opt);
  else if (suite != "all")
    throw std::invalid_argument("unknown suite: " + suite);
  if (suite == "all") {
    grassmann_suite(runner, opt);
    fermion_suite(runner, opt);
    maxent_suite(runner, opt);
  }
  return report;
}

std::string render_text(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << "[" << status_name(c.status) << "] " << c.name
       << "  residual=" << csv::format_number(c.residual);
    if (std::isfinite(c.tolerance))
      os << "  tol=" << csv::format_number(c.tolerance);
    if (!c.notes.empty()) os << "  (" << c.notes << ")";
    os << "\n";
  }
  os << "overall: " << status_name(report.overall()) << " ("
     << report.checks.size() << " checks)\n";
  return os.str();
}

void write_summary(const SuiteReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open summary file: " + path);
  for (const auto& c : report.checks)
    out << c.name << '\t' << status_name(c.status) << '\t'
        << csv::format_number(c.residual) << '\t'
        << csv::format_number(c.tolerance) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sqz::verify
