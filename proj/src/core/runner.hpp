#pragma once

#include <string>
#include <vector>

#include "core/scenario.hpp"

namespace dsp {

// Resolved initial condition and the coefficient context shared by commands.
struct RunContext {
  Scenario scenario;
  Coefficients coeffs0;      // at t = 0
  SolitonSpec spec;          // soliton init kinds only
  bool has_spec = false;
  double amp_m = 0;          // resolved initial amplitude M
};

RunContext prepare_run(const Scenario& scenario);

// Full propagation plus the analysis that commands and checks share.
struct RunOutcome {
  RunContext ctx;
  PropagationResult result;
  EngineState final_state;
  Coefficients coeffs_final;
  bool integration_failed = false;
  std::string integration_message;

  double norm_drift_rel = 0;
  bool norm_nonincreasing = true;
  double hamiltonian_drift_rel = 0;
  double peak_oscillation_rel = 0;    // (max - min)/initial over the series
  double fwhm_ratio = 0;              // final/initial
  double shape_err_max = 0;
  double stationarity_linf_rel = 0;   // vs analytic family, when defined
  bool stationarity_defined = false;
  double amp_exponent = 0;            // p in peak ~ cos(theta)^(-p)
  bool amp_exponent_defined = false;
};

RunOutcome execute_run(const Scenario& scenario);

std::string cmd_coeffs(const Scenario& scenario, double t);
std::string cmd_propagate(const Scenario& scenario, const std::string& out_dir);
std::string cmd_fig1(const Scenario& scenario, const std::string& out_dir);
std::string cmd_sweep(const Scenario& scenario, const std::string& param_path,
                      const std::vector<double>& values, const std::string& out_dir);

struct SweepRow {
  double value = 0;
  bool ok = false;
  std::string regime;
  double measured_hwhm = 0, measured_tau = 0, measured_peak = 0;
  double analytic_hwhm = 0, analytic_tau = 0, analytic_peak = 0;
  std::string message;
};

struct SweepOutcome {
  std::vector<SweepRow> rows;
  bool slopes_defined = false;
  double measured_dxi_slope = 0, measured_tau_slope = 0;
  double analytic_dxi_slope = 0, analytic_tau_slope = 0;
};

SweepOutcome execute_sweep(const Scenario& scenario, const std::string& param_path,
                           const std::vector<double>& values);

// Worker cap for sweep parallelism (DSP_SOLITON_THREADS, default hardware).
unsigned sweep_thread_cap();

// Fig. 1 style normalization units: E0 = M(0), L = 1/A0, tau = g^2 N / (Omega^2 A0 c).
struct Fig1Units {
  double e0 = 0;
  double length_unit = 0;
  double tau_unit = 0;
};

Fig1Units fig1_units(const RunContext& ctx);

std::string summary_text(const RunOutcome& run);

}  // namespace dsp
