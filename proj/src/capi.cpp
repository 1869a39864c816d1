#include "dsp_soliton.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "core/runner.hpp"
#include "core/scenario.hpp"
#include "core/selfcheck.hpp"
#include "core/textio.hpp"

struct dsp_scenario {
  dsp::Scenario value;
};

namespace {

void set_error(char* err, size_t err_len, const char* msg) {
  if (!err || err_len == 0) return;
  std::strncpy(err, msg, err_len - 1);
  err[err_len - 1] = '\0';
}

char* dup_text(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
dsp_code guarded(char* err, size_t err_len, Fn&& fn) {
  try {
    return fn();
  } catch (const dsp::IntegrationError& e) {
    set_error(err, err_len, e.what());
    return DSP_ERR_INTEGRATION;
  } catch (const std::exception& e) {
    set_error(err, err_len, e.what());
    return DSP_ERR_VALIDATION;
  } catch (...) {
    set_error(err, err_len, "unknown error");
    return DSP_ERR_VALIDATION;
  }
}

dsp_code return_text(const std::string& text, char** out, char* err, size_t err_len) {
  char* copy = dup_text(text);
  if (!copy) {
    set_error(err, err_len, "out of memory");
    return DSP_ERR_VALIDATION;
  }
  *out = copy;
  return DSP_OK;
}

}  // namespace

extern "C" {

const char* dsp_version(void) { return dsp::kToolVersion; }

dsp_code dsp_scenario_from_text(const char* text, dsp_scenario** out, char* err,
                                size_t err_len) {
  if (!text || !out) {
    set_error(err, err_len, "null argument");
    return DSP_ERR_VALIDATION;
  }
  *out = nullptr;
  return guarded(err, err_len, [&] {
    auto* handle = new dsp_scenario{dsp::parse_scenario(text)};
    *out = handle;
    return DSP_OK;
  });
}

dsp_code dsp_scenario_from_file(const char* path, dsp_scenario** out, char* err,
                                size_t err_len) {
  if (!path || !out) {
    set_error(err, err_len, "null argument");
    return DSP_ERR_VALIDATION;
  }
  *out = nullptr;
  return guarded(err, err_len, [&] {
    auto* handle = new dsp_scenario{dsp::load_scenario_file(path)};
    *out = handle;
    return DSP_OK;
  });
}

void dsp_scenario_free(dsp_scenario* scenario) { delete scenario; }

dsp_code dsp_scenario_echo(const dsp_scenario* scenario, char** out_text, char* err,
                           size_t err_len) {
  if (!scenario || !out_text) {
    set_error(err, err_len, "null argument");
    return DSP_ERR_VALIDATION;
  }
  return guarded(err, err_len, [&] {
    return return_text(dsp::echo_scenario(scenario->value), out_text, err, err_len);
  });
}

dsp_code dsp_coeffs_report(const dsp_scenario* scenario, double t, char** out_text, char* err,
                           size_t err_len) {
  if (!scenario || !out_text) {
    set_error(err, err_len, "null argument");
    return DSP_ERR_VALIDATION;
  }
  return guarded(err, err_len, [&] {
    return return_text(dsp::cmd_coeffs(scenario->value, t), out_text, err, err_len);
  });
}

dsp_regime dsp_classify(double omega_rabi, double detuning) {
  try {
    switch (dsp::classify_regime(detuning, omega_rabi)) {
      case dsp::RegimeKind::Bright: return DSP_REGIME_BRIGHT;
      case dsp::RegimeKind::Dark: return DSP_REGIME_DARK;
      case dsp::RegimeKind::Linear: return DSP_REGIME_LINEAR;
      case dsp::RegimeKind::Singular: return DSP_REGIME_SINGULAR;
    }
  } catch (...) {
  }
  return DSP_REGIME_INVALID;
}

const char* dsp_regime_name(dsp_regime regime) {
  switch (regime) {
    case DSP_REGIME_BRIGHT: return "Bright";
    case DSP_REGIME_DARK: return "Dark";
    case DSP_REGIME_LINEAR: return "Linear";
    case DSP_REGIME_SINGULAR: return "Singular";
    default: return "Invalid";
  }
}

dsp_code dsp_propagate(const dsp_scenario* scenario, const char* out_dir, char** out_summary,
                       char* err, size_t err_len) {
  if (!scenario || !out_dir || !out_summary) {
    set_error(err, err_len, "null argument");
    return DSP_ERR_VALIDATION;
  }
  return guarded(err, err_len, [&] {
    return return_text(dsp::cmd_propagate(scenario->value, out_dir), out_summary, err,
                       err_len);
  });
}

dsp_code dsp_fig1(const dsp_scenario* scenario, const char* out_dir, char** out_summary,
                  char* err, size_t err_len) {
  if (!scenario || !out_dir || !out_summary) {
    set_error(err, err_len, "null argument");
    return DSP_ERR_VALIDATION;
  }
  return guarded(err, err_len, [&] {
    return return_text(dsp::cmd_fig1(scenario->value, out_dir), out_summary, err, err_len);
  });
}

dsp_code dsp_sweep(const dsp_scenario* scenario, const char* param_path,
                   const char* values_csv, const char* out_dir, char** out_table, char* err,
                   size_t err_len) {
  if (!scenario || !param_path || !values_csv || !out_dir || !out_table) {
    set_error(err, err_len, "null argument");
    return DSP_ERR_VALIDATION;
  }
  return guarded(err, err_len, [&] {
    std::vector<double> values;
    std::stringstream ss(values_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      char* end = nullptr;
      const double v = std::strtod(item.c_str(), &end);
      if (end != item.c_str() + item.size())
        throw std::invalid_argument("sweep: cannot parse value '" + item + "'");
      values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("sweep: no values given");
    return return_text(dsp::cmd_sweep(scenario->value, param_path, values, out_dir),
                       out_table, err, err_len);
  });
}

dsp_code dsp_selfcheck(char** out_report) {
  if (!out_report) return DSP_ERR_VALIDATION;
  try {
    const std::vector<dsp::CheckResult> results = dsp::run_selfcheck();
    char* copy = dup_text(dsp::format_report(results));
    if (!copy) return DSP_ERR_VALIDATION;
    *out_report = copy;
    return dsp::all_pass(results) ? DSP_OK : DSP_ERR_SELFCHECK;
  } catch (const std::exception& e) {
    char* copy = dup_text(std::string("selfcheck aborted: ") + e.what() + "\n");
    if (copy) *out_report = copy;
    return DSP_ERR_SELFCHECK;
  }
}

void dsp_text_free(char* text) { delete[] text; }

}  // extern "C"
