#include "squeeze/squeeze.h"

#include <cmath>
#include <cstring>
#include <string>

#include "csvout.hpp"
#include "entangle.hpp"
#include "fock.hpp"
#include "verify.hpp"

struct sqz_state {
  sqz::fock::TwoModeState value;
};

struct sqz_density {
  sqz::ent::DensityMatrix value;
};

struct sqz_report {
  sqz::verify::SuiteReport value;
};

namespace {

thread_local std::string g_last_error;

sqz_status fail(sqz_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
sqz_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SQZ_OK;
  } catch (const std::invalid_argument& e) {
    return fail(SQZ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return fail(SQZ_ERR_NUMERICAL, e.what());
  } catch (const std::exception& e) {
    return fail(SQZ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SQZ_ERR_INTERNAL, "unknown error");
  }
}

bool check_arg(bool ok, const char* what) {
  if (!ok) g_last_error = what;
  return ok;
}

sqz_check_status to_c(sqz::verify::Status s) {
  switch (s) {
    case sqz::verify::Status::pass: return SQZ_CHECK_PASS;
    case sqz::verify::Status::warn: return SQZ_CHECK_WARN;
    default: return SQZ_CHECK_FAIL;
  }
}

}  // namespace

extern "C" {

const char* sqz_version(void) { return "1.0.0"; }

const char* sqz_last_error(void) { return g_last_error.c_str(); }

sqz_status sqz_tmss_fock(double tau, int n_max, sqz_state** out) {
  if (!check_arg(out != nullptr, "null output pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sqz_state{sqz::fock::tmss_fock(tau, sqz::fock::FockCutoff(n_max))};
  });
}

sqz_status sqz_tmss_bch(double gamma, int n_max, sqz_state** out) {
  if (!check_arg(out != nullptr, "null output pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sqz_state{sqz::fock::tmss_bch(gamma, sqz::fock::FockCutoff(n_max))};
  });
}

sqz_status sqz_tmss_expm(double gamma, int n_max, sqz_state** out) {
  if (!check_arg(out != nullptr, "null output pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sqz_state{
        sqz::fock::tmss_expm_route(gamma, sqz::fock::FockCutoff(n_max))};
  });
}

sqz_status sqz_cs_state(double xi_re, double xi_im, double eta_re,
                        double eta_im, double gamma, int n_max,
                        sqz_state** out) {
  if (!check_arg(out != nullptr, "null output pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const sqz::fock::DisplacementParams p{{xi_re, xi_im}, {eta_re, eta_im}};
    *out = new sqz_state{sqz::fock::cs_state(p, gamma, sqz::fock::FockCutoff(n_max))};
  });
}

void sqz_state_free(sqz_state* s) { delete s; }

int sqz_state_dim(const sqz_state* s) { return s ? s->value.dim_a() : 0; }

sqz_status sqz_state_amplitude(const sqz_state* s, int m, int n, double* re,
                               double* im) {
  if (!check_arg(s && re && im, "null pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  if (m < 0 || m >= s->value.dim_a() || n < 0 || n >= s->value.dim_b())
    return fail(SQZ_ERR_DIMENSION, "amplitude index out of range");
  const auto c = s->value.amplitude(m, n);
  *re = c.real();
  *im = c.imag();
  g_last_error.clear();
  return SQZ_OK;
}

double sqz_state_tail_weight(const sqz_state* s) {
  return s ? s->value.tail_weight() : 0.0;
}

sqz_status sqz_reduce_mode_a(const sqz_state* s, sqz_density** out) {
  if (!check_arg(s && out, "null pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sqz_density{sqz::ent::partial_trace_b(s->value)};
  });
}

void sqz_density_free(sqz_density* d) { delete d; }

int sqz_density_dim(const sqz_density* d) { return d ? d->value.dim() : 0; }

sqz_status sqz_density_entry(const sqz_density* d, int m, int n, double* re,
                             double* im) {
  if (!check_arg(d && re && im, "null pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  if (m < 0 || m >= d->value.dim() || n < 0 || n >= d->value.dim())
    return fail(SQZ_ERR_DIMENSION, "density index out of range");
  const auto c = d->value.entries()(m, n);
  *re = c.real();
  *im = c.imag();
  g_last_error.clear();
  return SQZ_OK;
}

sqz_status sqz_density_entropy(const sqz_density* d, double* out) {
  if (!check_arg(d && out, "null pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = sqz::ent::von_neumann_entropy(d->value); });
}

sqz_status sqz_density_energy(const sqz_density* d, double* out) {
  if (!check_arg(d && out, "null pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = sqz::ent::reduced_energy(d->value); });
}

sqz_status sqz_entropy_tau(double tau, double* out) {
  if (!check_arg(out != nullptr, "null output pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = sqz::ent::entropy_closed_form(tau); });
}

sqz_status sqz_energy_tau(double tau, double* out) {
  if (!check_arg(out != nullptr, "null output pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = sqz::ent::energy_closed_form(tau); });
}

sqz_status sqz_curve_chi(double chi, sqz_curve_point* out) {
  if (!check_arg(out != nullptr, "null output pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const sqz::ent::EntanglementCurvePoint p = sqz::ent::curve_chi(chi);
    out->chi = p.chi;
    out->tau = p.tau;
    out->entropy = p.entropy;
    out->energy = p.energy;
    out->lnchi = p.lnchi;
    out->delta_s = p.delta_s;
  });
}

sqz_status sqz_param_from_gamma(double gamma, double* tau, double* chi) {
  if (!check_arg(tau && chi, "null pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto p = sqz::fock::param_from_gamma(gamma);
    *tau = p.tau;
    *chi = p.chi;
  });
}

sqz_status sqz_param_from_tau(double tau, double* gamma, double* chi) {
  if (!check_arg(gamma && chi, "null pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto p = sqz::fock::param_from_tau(tau);
    *gamma = p.gamma;
    *chi = p.chi;
  });
}

sqz_status sqz_param_from_chi(double chi, double* gamma, double* tau) {
  if (!check_arg(gamma && tau, "null pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto p = sqz::fock::param_from_chi(chi);
    *gamma = p.gamma;
    *tau = p.tau;
  });
}

sqz_status sqz_psi_stats(int n, double* energy, double* entropy) {
  if (!check_arg(energy && entropy, "null pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto s = sqz::ent::psi_n_stats(n);
    *energy = s.energy;
    *entropy = s.entropy;
  });
}

sqz_status sqz_tmss_entropy_excess(int n, double* out) {
  if (!check_arg(out != nullptr, "null output pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = sqz::ent::tmss_entropy_excess(n); });
}

namespace {

sqz::csv::Spacing to_spacing(sqz_spacing s) {
  return s == SQZ_SPACING_LOG ? sqz::csv::Spacing::log
                              : sqz::csv::Spacing::linear;
}

}  // namespace

sqz_status sqz_write_fig1_csv(const char* path, double chi_min, double chi_max,
                              int points, sqz_spacing spacing) {
  if (!check_arg(path != nullptr, "null path")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    sqz::csv::write_fig1(path, {chi_min, chi_max, points, to_spacing(spacing)});
  });
}

sqz_status sqz_write_curves_csv(const char* path, double chi_min,
                                double chi_max, int points,
                                sqz_spacing spacing) {
  if (!check_arg(path != nullptr, "null path")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    sqz::csv::write_curves(path, {chi_min, chi_max, points, to_spacing(spacing)});
  });
}

sqz_status sqz_write_psi_compare_csv(const char* path, int n_max_compare) {
  if (!check_arg(path != nullptr, "null path")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] { sqz::csv::write_psi_compare(path, n_max_compare); });
}

sqz_status sqz_verify_run(const char* suite, uint64_t seed, int cutoff,
                          int samples, sqz_report** out) {
  if (!check_arg(suite && out, "null pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    sqz::verify::Options opt;
    opt.seed = seed;
    opt.cutoff = cutoff;
    opt.samples = samples;
    *out = new sqz_report{sqz::verify::run_suite(suite, opt)};
  });
}

void sqz_report_free(sqz_report* r) { delete r; }

int sqz_report_size(const sqz_report* r) {
  return r ? int(r->value.checks.size()) : 0;
}

const char* sqz_report_name(const sqz_report* r, int i) {
  if (!r || i < 0 || i >= int(r->value.checks.size())) return "";
  return r->value.checks[std::size_t(i)].name.c_str();
}

sqz_check_status sqz_report_status(const sqz_report* r, int i) {
  if (!r || i < 0 || i >= int(r->value.checks.size())) return SQZ_CHECK_FAIL;
  return to_c(r->value.checks[std::size_t(i)].status);
}

double sqz_report_residual(const sqz_report* r, int i) {
  if (!r || i < 0 || i >= int(r->value.checks.size())) return NAN;
  return r->value.checks[std::size_t(i)].residual;
}

double sqz_report_tolerance(const sqz_report* r, int i) {
  if (!r || i < 0 || i >= int(r->value.checks.size())) return NAN;
  return r->value.checks[std::size_t(i)].tolerance;
}

const char* sqz_report_notes(const sqz_report* r, int i) {
  if (!r || i < 0 || i >= int(r->value.checks.size())) return "";
  return r->value.checks[std::size_t(i)].notes.c_str();
}

sqz_check_status sqz_report_overall(const sqz_report* r) {
  if (!r) return SQZ_CHECK_FAIL;
  return to_c(r->value.overall());
}

sqz_status sqz_report_write_summary(const sqz_report* r, const char* path) {
  if (!check_arg(r && path, "null pointer")) return SQZ_ERR_INVALID_ARGUMENT;
  return guarded([&] { sqz::verify::write_summary(r->value, path); });
}

}  // extern "C"
