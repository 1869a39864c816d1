/* dsp_soliton: EIT dark-state-polariton soliton simulation library.
 *
 * C interface over the C++ core. All functions are thread-compatible: calls
 * on distinct scenario handles may run concurrently; a single handle must not
 * be shared between threads without external synchronization.
 *
 * Functions returning dsp_code write a NUL-terminated message into the
 * caller-supplied error buffer on failure (truncated if needed). Strings
 * returned through char** are heap-allocated; release them with
 * dsp_text_free.
 */
#ifndef DSP_SOLITON_H
#define DSP_SOLITON_H

#include <stddef.h>

#if defined(_WIN32)
#define DSP_SOLITON_API __declspec(dllexport)
#else
#define DSP_SOLITON_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsp_code {
  DSP_OK = 0,
  DSP_ERR_VALIDATION = 1, /* bad config, bad arguments, parse errors */
  DSP_ERR_INTEGRATION = 2, /* propagation aborted; partial outputs flushed */
  DSP_ERR_SELFCHECK = 3    /* one or more self checks failed */
} dsp_code;

typedef enum dsp_regime {
  DSP_REGIME_BRIGHT = 0,
  DSP_REGIME_DARK = 1,
  DSP_REGIME_LINEAR = 2,
  DSP_REGIME_SINGULAR = 3,
  DSP_REGIME_INVALID = -1
} dsp_regime;

/* Opaque, immutable after creation. */
typedef struct dsp_scenario dsp_scenario;

DSP_SOLITON_API const char* dsp_version(void);

DSP_SOLITON_API dsp_code dsp_scenario_from_text(const char* text, dsp_scenario** out,
                                                char* err, size_t err_len);
DSP_SOLITON_API dsp_code dsp_scenario_from_file(const char* path, dsp_scenario** out,
                                                char* err, size_t err_len);
DSP_SOLITON_API void dsp_scenario_free(dsp_scenario* scenario);

/* Canonical scenario text with all defaults resolved. */
DSP_SOLITON_API dsp_code dsp_scenario_echo(const dsp_scenario* scenario, char** out_text,
                                           char* err, size_t err_len);

/* Coefficient table (theta, V_g, dispersion, susceptibilities, c_n, K,
 * delta, regime) at time t, as '#'-headed CSV text. */
DSP_SOLITON_API dsp_code dsp_coeffs_report(const dsp_scenario* scenario, double t,
                                           char** out_text, char* err, size_t err_len);

/* Nonlinear regime from the detuning sign and Omega^2 vs Delta^2 alone. */
DSP_SOLITON_API dsp_regime dsp_classify(double omega_rabi, double detuning);
DSP_SOLITON_API const char* dsp_regime_name(dsp_regime regime);

/* Run the scenario; writes config_echo.ini, diagnostics.csv, summary.txt and
 * snap_*.csv under out_dir and returns the summary text. */
DSP_SOLITON_API dsp_code dsp_propagate(const dsp_scenario* scenario, const char* out_dir,
                                       char** out_summary, char* err, size_t err_len);

/* Normalized bright-soliton surface |Psi(z/L, t/tau)|/E0 plus the
 * normalization constants; writes fig1.csv under out_dir. */
DSP_SOLITON_API dsp_code dsp_fig1(const dsp_scenario* scenario, const char* out_dir,
                                  char** out_summary, char* err, size_t err_len);

/* One run per comma-separated value of the dotted parameter path
 * (e.g. "control.omega_start"); writes sweep.csv and returns the table with
 * fitted log-log width/time slopes. Runs execute in parallel, capped by
 * DSP_SOLITON_THREADS. */
DSP_SOLITON_API dsp_code dsp_sweep(const dsp_scenario* scenario, const char* param_path,
                                   const char* values_csv, const char* out_dir,
                                   char** out_table, char* err, size_t err_len);

/* Release-gate checks with one PASS/FAIL line per check. DSP_OK when all
 * pass, DSP_ERR_SELFCHECK otherwise; the report is returned either way. */
DSP_SOLITON_API dsp_code dsp_selfcheck(char** out_report);

DSP_SOLITON_API void dsp_text_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DSP_SOLITON_H */
