// Command-line front end; all functionality goes through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>

#include "dsp_soliton.h"

namespace {

struct ScenarioHandle {
  dsp_scenario* ptr = nullptr;
  ~ScenarioHandle() { dsp_scenario_free(ptr); }
};

struct TextHandle {
  char* ptr = nullptr;
  ~TextHandle() { dsp_text_free(ptr); }
};

int load_scenario(const std::string& config, ScenarioHandle& scenario) {
  char err[512] = {};
  const dsp_code rc = dsp_scenario_from_file(config.c_str(), &scenario.ptr, err, sizeof(err));
  if (rc != DSP_OK) std::fprintf(stderr, "error: %s\n", err);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("dsp_soliton (") + dsp_version() +
               ") - EIT dark-state-polariton soliton simulator"};
  app.require_subcommand(1);

  std::string config, out_dir, param, values;
  double coeffs_time = 0.0;
  double classify_omega = 0.0, classify_detuning = 0.0;

  CLI::App* coeffs = app.add_subcommand("coeffs", "print the medium coefficient table");
  coeffs->add_option("--config", config, "scenario file")->required();
  coeffs->add_option("--time", coeffs_time, "evaluation time (s), default 0");

  CLI::App* classify = app.add_subcommand("classify", "print the nonlinear regime");
  classify->add_option("--omega", classify_omega, "Rabi frequency (1/s)")->required();
  classify->add_option("--detuning", classify_detuning, "one-photon detuning (1/s)")
      ->required();

  CLI::App* propagate = app.add_subcommand("propagate", "run a propagation scenario");
  propagate->add_option("--config", config, "scenario file")->required();
  propagate->add_option("--out", out_dir, "output directory")->required();

  CLI::App* fig1 = app.add_subcommand("fig1", "emit the normalized bright-soliton surface");
  fig1->add_option("--config", config, "scenario file")->required();
  fig1->add_option("--out", out_dir, "output directory")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "run one propagation per parameter value");
  sweep->add_option("--config", config, "scenario file")->required();
  sweep->add_option("--param", param, "dotted parameter path, e.g. control.omega_start")
      ->required();
  sweep->add_option("--values", values, "comma-separated values")->required();
  sweep->add_option("--out", out_dir, "output directory")->required();

  app.add_subcommand("selfcheck", "run the release-gate checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : DSP_ERR_VALIDATION;
  }

  char err[512] = {};

  if (coeffs->parsed()) {
    ScenarioHandle s;
    if (int rc = load_scenario(config, s)) return rc;
    TextHandle text;
    const dsp_code rc = dsp_coeffs_report(s.ptr, coeffs_time, &text.ptr, err, sizeof(err));
    if (rc != DSP_OK) {
      std::fprintf(stderr, "error: %s\n", err);
      return rc;
    }
    std::fputs(text.ptr, stdout);
    return DSP_OK;
  }

  if (classify->parsed()) {
    const dsp_regime r = dsp_classify(classify_omega, classify_detuning);
    if (r == DSP_REGIME_INVALID) {
      std::fprintf(stderr, "error: omega must be > 0\n");
      return DSP_ERR_VALIDATION;
    }
    std::printf("%s\n", dsp_regime_name(r));
    return DSP_OK;
  }

  if (propagate->parsed() || fig1->parsed()) {
    ScenarioHandle s;
    if (int rc = load_scenario(config, s)) return rc;
    TextHandle text;
    const dsp_code rc = propagate->parsed()
                            ? dsp_propagate(s.ptr, out_dir.c_str(), &text.ptr, err, sizeof(err))
                            : dsp_fig1(s.ptr, out_dir.c_str(), &text.ptr, err, sizeof(err));
    if (rc != DSP_OK) {
      std::fprintf(stderr, "error: %s\n", err);
      return rc;
    }
    std::fputs(text.ptr, stdout);
    return DSP_OK;
  }

  if (sweep->parsed()) {
    ScenarioHandle s;
    if (int rc = load_scenario(config, s)) return rc;
    TextHandle text;
    const dsp_code rc = dsp_sweep(s.ptr, param.c_str(), values.c_str(), out_dir.c_str(),
                                  &text.ptr, err, sizeof(err));
    if (rc != DSP_OK) {
      std::fprintf(stderr, "error: %s\n", err);
      return rc;
    }
    std::fputs(text.ptr, stdout);
    return DSP_OK;
  }

  // selfcheck
  TextHandle report;
  const dsp_code rc = dsp_selfcheck(&report.ptr);
  if (report.ptr) std::fputs(report.ptr, stdout);
  return rc;
}
