// sqz - command-line front end over the squeeze C API.
//
// Subcommands: fig1, curves, psi-compare, verify.  Flag values override the
// SQZ_DEFAULT_CUTOFF / SQZ_SEED environment variables, which override the
// built-in defaults.  Exit codes: 0 success, 1 failed check or runtime
// error, 2 configuration error.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "CLI11.hpp"
#include "squeeze/squeeze.h"

namespace {

bool env_u64(const char* name, uint64_t* out) {
  const char* v = std::getenv(name);
  if (!v || !*v) return false;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0') return false;
  *out = parsed;
  return true;
}

bool env_int(const char* name, int* out) {
  uint64_t v = 0;
  if (!env_u64(name, &v)) return false;
  *out = int(v);
  return true;
}

int fail_status(sqz_status st) {
  std::fprintf(stderr, "error: %s\n", sqz_last_error());
  return st == SQZ_ERR_INVALID_ARGUMENT ? 2 : 1;
}

sqz_spacing parse_spacing(const std::string& s) {
  return s == "log" ? SQZ_SPACING_LOG : SQZ_SPACING_LINEAR;
}

int run_verify(const std::string& suite, uint64_t seed, int cutoff,
               int samples, const std::string& out_path) {
  sqz_report* report = nullptr;
  const sqz_status st =
      sqz_verify_run(suite.c_str(), seed, cutoff, samples, &report);
  if (st != SQZ_OK) return fail_status(st);

  for (int i = 0; i < sqz_report_size(report); ++i) {
    const sqz_check_status cs = sqz_report_status(report, i);
    const char* tag = cs == SQZ_CHECK_PASS ? "pass"
                      : cs == SQZ_CHECK_WARN ? "WARN"
                                             : "FAIL";
    std::printf("[%s] %-42s residual=%-14.6g tol=%-10.3g %s\n", tag,
                sqz_report_name(report, i), sqz_report_residual(report, i),
                sqz_report_tolerance(report, i), sqz_report_notes(report, i));
  }
  const sqz_check_status overall = sqz_report_overall(report);
  std::printf("suite '%s': %d checks, overall %s (seed %" PRIu64 ")\n",
              suite.c_str(), sqz_report_size(report),
              overall == SQZ_CHECK_PASS ? "pass"
              : overall == SQZ_CHECK_WARN ? "warn"
                                          : "FAIL",
              seed);
  if (!out_path.empty()) {
    const sqz_status ws = sqz_report_write_summary(report, out_path.c_str());
    if (ws != SQZ_OK) {
      sqz_report_free(report);
      return fail_status(ws);
    }
    std::printf("summary written to %s\n", out_path.c_str());
  }
  const bool ok = overall != SQZ_CHECK_FAIL;
  sqz_report_free(report);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-mode squeezed state toolkit (library version " +
               std::string(sqz_version()) + ")"};
  app.require_subcommand(1);

  uint64_t seed = 12345;
  env_u64("SQZ_SEED", &seed);
  int default_cutoff = -1;
  env_int("SQZ_DEFAULT_CUTOFF", &default_cutoff);

  // fig1
  auto* fig1 = app.add_subcommand("fig1", "write the deltaS(chi) curve as CSV");
  double f_min = 1.0, f_max = 50.0;
  int f_points = 200;
  std::string f_spacing = "linear", f_out = "fig1.csv";
  fig1->add_option("--chi-min", f_min, "grid minimum (>= 1)");
  fig1->add_option("--chi-max", f_max, "grid maximum");
  fig1->add_option("--points", f_points, "grid size (>= 2)");
  fig1->add_option("--spacing", f_spacing, "linear|log")
      ->check(CLI::IsMember({"linear", "log"}));
  fig1->add_option("--out", f_out, "output CSV path");

  // curves
  auto* curves =
      app.add_subcommand("curves", "tabulate S and E in both parametrizations");
  double c_min = 1.0 + 1e-6, c_max = 100.0;
  int c_points = 200;
  std::string c_spacing = "linear", c_out = "curves.csv";
  curves->add_option("--chi-min", c_min, "grid minimum (>= 1)");
  curves->add_option("--chi-max", c_max, "grid maximum");
  curves->add_option("--points", c_points, "grid size (>= 2)");
  curves->add_option("--spacing", c_spacing, "linear|log")
      ->check(CLI::IsMember({"linear", "log"}));
  curves->add_option("--out", c_out, "output CSV path");

  // psi-compare
  auto* psi = app.add_subcommand(
      "psi-compare", "TMSS vs equal-amplitude twin-Fock state at equal energy");
  int p_nmax = 100;
  std::string p_out = "psi_compare.csv";
  psi->add_option("--n-max", p_nmax, "largest N tabulated (>= 2)");
  psi->add_option("--out", p_out, "output CSV path");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite = "all";
  std::string v_suite_flag;
  int v_samples = 200;
  int v_cutoff = default_cutoff;
  std::string v_out;
  verify->add_option("SUITE", v_suite, "all|boson|fermion|grassmann|maxent");
  verify->add_option("--suite", v_suite_flag, "suite name (overrides positional)");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--samples", v_samples, "sample count for maxent checks");
  verify->add_option("--cutoff", v_cutoff, "Fock cutoff override");
  verify->add_option("--out", v_out, "write machine-readable summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  sqz_status st = SQZ_OK;
  if (fig1->parsed()) {
    st = sqz_write_fig1_csv(f_out.c_str(), f_min, f_max, f_points,
                            parse_spacing(f_spacing));
    if (st != SQZ_OK) return fail_status(st);
    std::printf("wrote %s\n", f_out.c_str());
    return 0;
  }
  if (curves->parsed()) {
    st = sqz_write_curves_csv(c_out.c_str(), c_min, c_max, c_points,
                              parse_spacing(c_spacing));
    if (st != SQZ_OK) return fail_status(st);
    std::printf("wrote %s\n", c_out.c_str());
    return 0;
  }
  if (psi->parsed()) {
    st = sqz_write_psi_compare_csv(p_out.c_str(), p_nmax);
    if (st != SQZ_OK) return fail_status(st);
    std::printf("wrote %s\n", p_out.c_str());
    return 0;
  }
  if (verify->parsed()) {
    const std::string suite = v_suite_flag.empty() ? v_suite : v_suite_flag;
    return run_verify(suite, seed, v_cutoff, v_samples, v_out);
  }
  return 2;
}
