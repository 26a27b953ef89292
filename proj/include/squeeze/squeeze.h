/*
 * squeeze - two-mode squeezed boson/fermion states, entanglement measures,
 * and the verification suites behind them.
 *
 * C interface of the shared library.  All functions return sqz_status;
 * results come back through out-parameters.  Objects handed out through
 * sqz_* constructors are owned by the caller and released with the matching
 * *_free.  On any failure sqz_last_error() carries a message for the calling
 * thread.
 */
#ifndef SQUEEZE_SQUEEZE_H
#define SQUEEZE_SQUEEZE_H

#include <stdint.h>

#if defined(_WIN32)
#define SQZ_API __declspec(dllexport)
#else
#define SQZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sqz_status {
  SQZ_OK = 0,
  SQZ_ERR_INVALID_ARGUMENT = 1,
  SQZ_ERR_DIMENSION = 2,
  SQZ_ERR_NUMERICAL = 3,
  SQZ_ERR_IO = 4,
  SQZ_ERR_INTERNAL = 5
} sqz_status;

typedef enum sqz_check_status {
  SQZ_CHECK_PASS = 0,
  SQZ_CHECK_WARN = 1,
  SQZ_CHECK_FAIL = 2
} sqz_check_status;

typedef enum sqz_spacing {
  SQZ_SPACING_LINEAR = 0,
  SQZ_SPACING_LOG = 1
} sqz_spacing;

/* Opaque handles. */
typedef struct sqz_state sqz_state;     /* two-mode boson state */
typedef struct sqz_density sqz_density; /* single-mode reduced density */
typedef struct sqz_report sqz_report;   /* verification suite report */

SQZ_API const char* sqz_version(void);
/* Message for the last failing call on this thread ("" if none). */
SQZ_API const char* sqz_last_error(void);

/* --- two-mode squeezed state construction ------------------------------ */

/* Twin-Fock sum with weights e^{-tau n/2}; tau > 0, n_max >= 1. */
SQZ_API sqz_status sqz_tmss_fock(double tau, int n_max, sqz_state** out);
/* Disentangled closed form (tanh gamma)^n / cosh gamma; gamma >= 0. */
SQZ_API sqz_status sqz_tmss_bch(double gamma, int n_max, sqz_state** out);
/* Matrix-exponential route with a convergence guard band. */
SQZ_API sqz_status sqz_tmss_expm(double gamma, int n_max, sqz_state** out);
/* S(gamma) D_a(xi) D_b(eta) |00>. */
SQZ_API sqz_status sqz_cs_state(double xi_re, double xi_im, double eta_re,
                                double eta_im, double gamma, int n_max,
                                sqz_state** out);

SQZ_API void sqz_state_free(sqz_state* s);
SQZ_API int sqz_state_dim(const sqz_state* s);
SQZ_API sqz_status sqz_state_amplitude(const sqz_state* s, int m, int n,
                                       double* re, double* im);
/* Probability weight discarded by the truncation before renormalizing. */
SQZ_API double sqz_state_tail_weight(const sqz_state* s);

/* --- reduced densities and measures ------------------------------------ */

SQZ_API sqz_status sqz_reduce_mode_a(const sqz_state* s, sqz_density** out);
SQZ_API void sqz_density_free(sqz_density* d);
SQZ_API int sqz_density_dim(const sqz_density* d);
SQZ_API sqz_status sqz_density_entry(const sqz_density* d, int m, int n,
                                     double* re, double* im);
/* von Neumann entropy, nats. */
SQZ_API sqz_status sqz_density_entropy(const sqz_density* d, double* out);
/* Mean quanta Tr(rho a+ a). */
SQZ_API sqz_status sqz_density_energy(const sqz_density* d, double* out);

/* --- closed forms and parametrizations --------------------------------- */

/* S(tau) = tau/(e^tau - 1) - ln(1 - e^{-tau}); tau > 0. */
SQZ_API sqz_status sqz_entropy_tau(double tau, double* out);
/* E(tau) = (e^tau - 1)^{-1}; tau > 0. */
SQZ_API sqz_status sqz_energy_tau(double tau, double* out);

typedef struct sqz_curve_point {
  double chi;
  double tau;
  double entropy;
  double energy;
  double lnchi;
  double delta_s;
} sqz_curve_point;

/* chi >= 1; chi = 1 is the zero-squeezing limit (all fields 0, tau = inf). */
SQZ_API sqz_status sqz_curve_chi(double chi, sqz_curve_point* out);

SQZ_API sqz_status sqz_param_from_gamma(double gamma, double* tau, double* chi);
SQZ_API sqz_status sqz_param_from_tau(double tau, double* gamma, double* chi);
SQZ_API sqz_status sqz_param_from_chi(double chi, double* gamma, double* tau);

/* Equal-amplitude twin-Fock comparison state: E = (N-1)/2, S = ln N. */
SQZ_API sqz_status sqz_psi_stats(int n, double* energy, double* entropy);
/* S(chi = N) - ln N; N >= 2. */
SQZ_API sqz_status sqz_tmss_entropy_excess(int n, double* out);

/* --- CSV emitters (byte-deterministic for a given grid) ----------------- */

SQZ_API sqz_status sqz_write_fig1_csv(const char* path, double chi_min,
                                      double chi_max, int points,
                                      sqz_spacing spacing);
SQZ_API sqz_status sqz_write_curves_csv(const char* path, double chi_min,
                                        double chi_max, int points,
                                        sqz_spacing spacing);
SQZ_API sqz_status sqz_write_psi_compare_csv(const char* path,
                                             int n_max_compare);

/* --- verification suites ------------------------------------------------ */

/* suite: "all", "boson", "fermion", "grassmann" or "maxent".  cutoff < 0
 * keeps the per-check defaults. */
SQZ_API sqz_status sqz_verify_run(const char* suite, uint64_t seed, int cutoff,
                                  int samples, sqz_report** out);
SQZ_API void sqz_report_free(sqz_report* r);
SQZ_API int sqz_report_size(const sqz_report* r);
SQZ_API const char* sqz_report_name(const sqz_report* r, int i);
SQZ_API sqz_check_status sqz_report_status(const sqz_report* r, int i);
SQZ_API double sqz_report_residual(const sqz_report* r, int i);
SQZ_API double sqz_report_tolerance(const sqz_report* r, int i);
SQZ_API const char* sqz_report_notes(const sqz_report* r, int i);
SQZ_API sqz_check_status sqz_report_overall(const sqz_report* r);
/* One line per check: name<TAB>status<TAB>residual<TAB>tolerance. */
SQZ_API sqz_status sqz_report_write_summary(const sqz_report* r,
                                            const char* path);

#ifdef __cplusplus
}
#endif

#endif /* SQUEEZE_SQUEEZE_H */
