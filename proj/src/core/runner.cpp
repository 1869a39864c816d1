#include "core/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <thread>

#include "core/polariton.hpp"
#include "core/textio.hpp"

namespace dsp {

namespace {

std::string file_header(const Scenario& s) {
  std::string h = std::string("# ") + kToolVersion + "\n";
  h += "# scenario: " + hex16(scenario_hash(s)) + "\n";
  return h;
}

InitProfile build_profile(const RunContext& ctx) {
  const InitConfig& init = ctx.scenario.init;
  switch (init.kind) {
    case InitKind::Bright:
    case InitKind::Dark:
    case InitKind::PrintedForm:
      return SolitonInit{ctx.spec};
    case InitKind::Gaussian:
      return GaussianInit{init.amplitude, init.width, init.center};
    case InitKind::Zero:
      return ZeroInit{};
    case InitKind::File:
      return FileInit{init.path};
  }
  return ZeroInit{};
}

}  // namespace

RunContext prepare_run(const Scenario& scenario) {
  RunContext ctx;
  ctx.scenario = scenario;
  ctx.coeffs0 = coefficients_at(scenario.medium, scenario.probe, scenario.control, 0.0);

  const InitKind kind = scenario.init.kind;
  if (kind == InitKind::Bright || kind == InitKind::Dark || kind == InitKind::PrintedForm) {
    SolitonSpec spec;
    spec.kind = kind == InitKind::Bright
                    ? SolitonKind::Bright
                    : (kind == InitKind::Dark ? SolitonKind::Dark : SolitonKind::PrintedForm);
    spec.center_xi = scenario.init.center;
    spec.t_ref = 0;
    spec.c_n = ctx.coeffs0.c_n;
    spec.big_k = ctx.coeffs0.big_k;
    spec.amp_m = scenario.init.amplitude > 0
                     ? scenario.init.amplitude
                     : amplitude_law(scenario.probe.a0cos0, ctx.coeffs0.cos_t, ctx.coeffs0.c_n);
    spec.validate();
    ctx.spec = spec;
    ctx.has_spec = true;
    ctx.amp_m = spec.amp_m;
  } else {
    ctx.amp_m = scenario.init.amplitude;
  }
  return ctx;
}

namespace {

// Analytic reference of the installed soliton at normalized time t_prime.
// Valid for constant coefficients with Im(c_n) = 0.
std::vector<cplx> analytic_reference(const RunContext& ctx, const Grid1D& grid,
                                     double t_prime) {
  const SolitonSpec& spec = ctx.spec;
  if (spec.kind != SolitonKind::Dark) return bright_profile(spec, grid.xi, 0.0, t_prime);
  // black pair at -L/4, +L/4; the background rotates at Re(c_n) M^2 in t'
  const double kappa = spec.kappa();
  const double rate = spec.c_n.real() * spec.amp_m * spec.amp_m;
  const cplx phase = std::polar(1.0, rate * t_prime);
  std::vector<cplx> out(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double x = grid.xi[j];
    out[j] = spec.amp_m * std::tanh(kappa * (x + 0.25 * grid.length)) *
             std::tanh(kappa * (x - 0.25 * grid.length)) * phase;
  }
  return out;
}

void analyze(RunOutcome& run) {
  const auto& series = run.result.series;
  if (series.empty()) return;
  const Diagnostics& d0 = series.front().diag;

  double norm_max_dev = 0;
  bool nonincreasing = true;
  double h0 = d0.hamiltonian;
  double h_dev = 0;
  double peak_min = d0.peak_amp, peak_max = d0.peak_amp;
  double shape_max = 0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const Diagnostics& d = series[i].diag;
    if (d0.norm > 0) norm_max_dev = std::max(norm_max_dev, std::abs(d.norm / d0.norm - 1.0));
    if (i > 0 && d.norm > series[i - 1].diag.norm) nonincreasing = false;
    if (h0 != 0) h_dev = std::max(h_dev, std::abs((d.hamiltonian - h0) / h0));
    peak_min = std::min(peak_min, d.peak_amp);
    peak_max = std::max(peak_max, d.peak_amp);
    shape_max = std::max(shape_max, d.shape_err);
  }
  run.norm_drift_rel = norm_max_dev;
  run.norm_nonincreasing = nonincreasing;
  run.hamiltonian_drift_rel = h_dev;
  run.peak_oscillation_rel = d0.peak_amp > 0 ? (peak_max - peak_min) / d0.peak_amp : 0.0;
  run.fwhm_ratio = d0.fwhm > 0 ? series.back().diag.fwhm / d0.fwhm : 0.0;
  run.shape_err_max = shape_max;

  // Amplitude exponent p: peak ~ cos(theta)^(-p) across the run.
  const Scenario& sc = run.ctx.scenario;
  std::vector<double> log_cos, log_peak;
  for (const auto& rec : series) {
    const double omega = sc.control.omega(rec.t);
    const double G = sc.medium.collective_coupling();
    const double cos_t = omega / std::hypot(omega, G);
    if (rec.diag.peak_amp > 0) {
      log_cos.push_back(std::log(cos_t));
      log_peak.push_back(std::log(rec.diag.peak_amp));
    }
  }
  if (log_cos.size() >= 2) {
    const auto [mn, mx] = std::minmax_element(log_cos.begin(), log_cos.end());
    if (*mx - *mn > 1e-9) {
      run.amp_exponent = -fit_slope(log_cos, log_peak);
      run.amp_exponent_defined = true;
    }
  }
}

}  // namespace

RunOutcome execute_run(const Scenario& scenario) {
  RunOutcome run;
  run.ctx = prepare_run(scenario);
  const Scenario& sc = run.ctx.scenario;

  const Grid1D grid = Grid1D::make(sc.grid.points, sc.grid.length);
  SpectralWorkspace ws(grid.n);
  EngineState state =
      init_state(grid, build_profile(run.ctx), sc.run.mode, 0.0, run.ctx.coeffs0.c_n);
  const CoefficientProvider provider =
      make_coefficient_provider(sc.medium, sc.probe, sc.control, sc.run.perturbation);

  try {
    propagate_into(state, provider, sc.run.t_final, sc.run.dt, sc.run.snapshot_every, ws,
                   run.result);
  } catch (const IntegrationError& e) {
    run.integration_failed = true;
    run.integration_message = e.what();
  }
  run.final_state = std::move(state);
  run.coeffs_final = coefficients_at(sc.medium, sc.probe, sc.control, run.final_state.t);
  analyze(run);

  // Stationarity against the analytic family: defined for lossless constant
  // coefficients with a soliton initial condition in physical mode.
  if (!run.integration_failed && run.ctx.has_spec &&
      sc.control.kind == ScheduleKind::Constant && sc.medium.gamma_ab == 0.0 &&
      sc.run.mode == PropagationMode::Physical) {
    double linf = 0;
    for (const auto& snap : run.result.snapshots) {
      const std::vector<cplx> ref = analytic_reference(run.ctx, grid, snap.t_prime);
      for (std::size_t j = 0; j < ref.size(); ++j)
        linf = std::max(linf, std::abs(snap.psi[j] - ref[j]));
    }
    run.stationarity_linf_rel = linf / run.ctx.amp_m;
    run.stationarity_defined = true;
  }
  return run;
}

std::string cmd_coeffs(const Scenario& scenario, double t) {
  const Coefficients c = coefficients_at(scenario.medium, scenario.probe, scenario.control, t);
  const RegimeKind regime = classify_regime(scenario.probe, c.omega_rabi);

  std::ostringstream out;
  out << file_header(scenario);
  out << "# coefficients at t = " << format_g17(t) << "\n";
  out << "# columns: quantity,value_re,value_im,unit\n";
  auto row = [&](const char* name, double re, double im, const char* unit) {
    out << name << "," << format_g17(re) << "," << format_g17(im) << "," << unit << "\n";
  };
  row("omega_rabi", c.omega_rabi, 0, "1/s");
  row("theta", c.theta, 0, "rad");
  row("cos_theta", c.cos_t, 0, "-");
  row("sin_theta", c.sin_t, 0, "-");
  row("tan_theta", c.tan_t, 0, "-");
  row("alpha", c.alpha, 0, "-");
  row("v_g", c.v_g, 0, "m/s");
  row("beta1", c.beta1, 0, "s/m");
  row("beta2", c.beta2, 0, "s^2/m");
  row("k0", c.k0, 0, "1/m");
  row("chi1", c.chi1.real(), c.chi1.imag(), "-");
  row("chi3", c.chi3.real(), c.chi3.imag(), "-");
  row("eta", c.eta.real(), c.eta.imag(), "1/m^2");
  row("c_n", c.c_n.real(), c.c_n.imag(), "1/m^2");
  row("big_k", c.big_k, 0, "s/m^2");
  row("delta_loss", c.delta_loss, 0, "-");
  row("theta_dot", c.theta_dot, 0, "rad/s");
  out << "regime," << regime_name(regime) << ",,-\n";
  return out.str();
}

std::string summary_text(const RunOutcome& run) {
  const Scenario& sc = run.ctx.scenario;
  std::ostringstream out;
  out << file_header(sc);
  out << "# propagate summary\n";
  auto kv = [&](const char* key, const std::string& v) { out << key << " = " << v << "\n"; };
  auto kd = [&](const char* key, double v) { kv(key, format_g17(v)); };
  auto kb = [&](const char* key, bool v) { kv(key, v ? "1" : "0"); };

  kv("status", run.integration_failed ? "integration_error" : "ok");
  if (run.integration_failed) kv("error", run.integration_message);
  kv("mode", sc.run.mode == PropagationMode::Physical ? "physical" : "normalized");
  kv("regime_t0", regime_name(classify_regime(sc.probe, run.ctx.coeffs0.omega_rabi)));
  kd("t_final", run.final_state.t);
  kd("t_prime_final", run.final_state.t_prime);
  kv("steps", std::to_string(run.result.series.empty() ? 0 : run.result.series.back().step));
  kd("amp_m", run.ctx.amp_m);

  if (!run.result.series.empty()) {
    const Diagnostics& d0 = run.result.series.front().diag;
    const Diagnostics& dT = run.result.series.back().diag;
    kd("norm_initial", d0.norm);
    kd("norm_final", dT.norm);
    kd("norm_drift_rel", run.norm_drift_rel);
    kb("norm_nonincreasing", run.norm_nonincreasing);
    kd("hamiltonian_initial", d0.hamiltonian);
    kd("hamiltonian_final", dT.hamiltonian);
    kd("hamiltonian_drift_rel", run.hamiltonian_drift_rel);
    kd("peak_initial", d0.peak_amp);
    kd("peak_final", dT.peak_amp);
    kd("peak_oscillation_rel", run.peak_oscillation_rel);
    kd("fwhm_initial", d0.fwhm);
    kd("fwhm_final", dT.fwhm);
    kd("fwhm_ratio", run.fwhm_ratio);
    kd("shape_err_max", run.shape_err_max);
  }
  kb("stationarity_defined", run.stationarity_defined);
  kd("stationarity_linf_rel", run.stationarity_linf_rel);
  kb("amp_exponent_defined", run.amp_exponent_defined);
  kd("amp_exponent_p", run.amp_exponent);

  const double cos0 = run.ctx.coeffs0.cos_t;
  const double cosT = run.coeffs_final.cos_t;
  kd("cos_theta_ratio", cosT / cos0);
  kd("omega_ratio", run.coeffs_final.omega_rabi / run.ctx.coeffs0.omega_rabi);

  // Analytic family widths at both endpoints, for soliton inits.
  if (run.ctx.has_spec) {
    const WidthReport w0 = widths(run.ctx.spec, run.ctx.coeffs0, sc.medium, sc.probe);
    SolitonSpec specT = run.ctx.spec;
    specT.c_n = run.coeffs_final.c_n;
    specT.big_k = run.coeffs_final.big_k;
    specT.amp_m = amplitude_law(sc.probe.a0cos0, cosT, run.coeffs_final.c_n);
    const WidthReport wT = widths(specT, run.coeffs_final, sc.medium, sc.probe);
    kd("analytic_hwhm_initial", w0.hwhm_xi);
    kd("analytic_hwhm_final", wT.hwhm_xi);
    kd("analytic_tau_initial", w0.tau);
    kd("analytic_tau_final", wT.tau);
    kd("analytic_peak_final", specT.amp_m);
    kd("printed_dxi_initial", w0.printed_dxi);
    kd("printed_tau_initial", w0.printed_tau);
  }

  const double eps_peak = run.ctx.coeffs0.cos_t * run.ctx.amp_m;
  for (const auto& check :
       validate_assumptions(sc.medium, sc.probe, sc.control, 0.0, eps_peak)) {
    std::string name = "assumption " + check.name;
    out << "# " << name << ": margin = " << format_g17(check.margin)
        << (check.pass ? " pass" : " FAIL") << "\n";
  }
  return out.str();
}

namespace {

std::string diagnostics_csv(const Scenario& sc, const PropagationResult& result) {
  std::ostringstream out;
  out << file_header(sc);
  out << "# columns: step,t,t_prime,norm,hamiltonian,peak_amp,peak_pos,fwhm,shape_err\n";
  out << "# units: -,s,m^2,m,1/m,-,m,m,-\n";
  for (const auto& rec : result.series) {
    out << rec.step << "," << format_g17(rec.t) << "," << format_g17(rec.t_prime) << ","
        << format_g17(rec.diag.norm) << "," << format_g17(rec.diag.hamiltonian) << ","
        << format_g17(rec.diag.peak_amp) << "," << format_g17(rec.diag.peak_pos) << ","
        << format_g17(rec.diag.fwhm) << "," << format_g17(rec.diag.shape_err) << "\n";
  }
  return out.str();
}

std::string snapshot_csv(const Scenario& sc, const Grid1D& grid, const Snapshot& snap) {
  std::ostringstream out;
  out << file_header(sc);
  out << "# t = " << format_g17(snap.t) << "\n";
  out << "# t_prime = " << format_g17(snap.t_prime) << "\n";
  out << "# columns: xi,re_psi,im_psi\n";
  out << "# units: m,-,-\n";
  for (std::size_t j = 0; j < snap.psi.size(); ++j) {
    out << format_g17(grid.xi[j]) << "," << format_g17(snap.psi[j].real()) << ","
        << format_g17(snap.psi[j].imag()) << "\n";
  }
  return out.str();
}

std::string snapshot_name(std::size_t step) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snap_%06zu.csv", step);
  return buf;
}

void write_run_outputs(const RunOutcome& run, const std::filesystem::path& dir) {
  const Scenario& sc = run.ctx.scenario;
  std::filesystem::create_directories(dir);
  write_text_file(dir / "config_echo.ini", file_header(sc) + echo_scenario(sc));
  write_text_file(dir / "diagnostics.csv", diagnostics_csv(sc, run.result));
  write_text_file(dir / "summary.txt", summary_text(run));
  const Grid1D grid = Grid1D::make(sc.grid.points, sc.grid.length);
  for (const auto& snap : run.result.snapshots)
    write_text_file(dir / snapshot_name(snap.step), snapshot_csv(sc, grid, snap));
}

}  // namespace

std::string cmd_propagate(const Scenario& scenario, const std::string& out_dir) {
  RunOutcome run = execute_run(scenario);
  write_run_outputs(run, out_dir);
  if (run.integration_failed)
    throw IntegrationError(0, run.final_state.t,
                           run.integration_message + " (partial outputs in " + out_dir + ")");
  return summary_text(run);
}

Fig1Units fig1_units(const RunContext& ctx) {
  const Scenario& sc = ctx.scenario;
  Fig1Units u;
  u.e0 = ctx.amp_m;
  const double a0 = sc.probe.a0cos0 / ctx.coeffs0.cos_t;
  u.length_unit = 1.0 / a0;
  const double om0 = sc.control.omega(0.0);
  u.tau_unit = sc.medium.g * sc.medium.g * sc.medium.atoms_n /
               (om0 * om0 * a0 * sc.medium.light_speed);
  return u;
}

std::string cmd_fig1(const Scenario& scenario, const std::string& out_dir) {
  const RegimeKind regime =
      classify_regime(scenario.probe, scenario.control.omega(0.0));
  if (regime != RegimeKind::Bright)
    throw std::invalid_argument("fig1 requires the bright regime (got " + regime_name(regime) +
                                ")");
  Scenario sc = scenario;
  sc.init.kind = InitKind::Bright;
  sc.run.mode = PropagationMode::Physical;

  RunOutcome run = execute_run(sc);
  if (run.integration_failed) {
    write_run_outputs(run, out_dir);
    throw IntegrationError(0, run.final_state.t, run.integration_message);
  }
  const Fig1Units units = fig1_units(run.ctx);
  const Grid1D grid = Grid1D::make(sc.grid.points, sc.grid.length);

  std::ostringstream data;
  data << file_header(sc);
  data << "# normalized bright-soliton amplitude surface\n";
  data << "# E0 = " << format_g17(units.e0) << "\n";
  data << "# L = " << format_g17(units.length_unit) << "\n";
  data << "# tau_unit = " << format_g17(units.tau_unit) << "\n";
  data << "# columns: t_over_tau,z_over_L,amp_norm\n";
  data << "# units: -,-,-\n";

  double peak_norm_min = 1e300, peak_norm_max = 0;
  for (const auto& snap : run.result.snapshots) {
    const double disp = lab_frame_position(sc.control, sc.medium, 0.0, snap.t, 0.0);
    double slice_peak = 0;
    for (std::size_t j = 0; j < snap.psi.size(); ++j) {
      const double z = grid.xi[j] + disp;
      const double amp = std::abs(snap.psi[j]) / units.e0;
      slice_peak = std::max(slice_peak, amp);
      data << format_g17(snap.t / units.tau_unit) << "," << format_g17(z / units.length_unit)
           << "," << format_g17(amp) << "\n";
    }
    peak_norm_min = std::min(peak_norm_min, slice_peak);
    peak_norm_max = std::max(peak_norm_max, slice_peak);
  }

  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_text_file(dir / "fig1.csv", data.str());
  write_text_file(dir / "config_echo.ini", file_header(sc) + echo_scenario(sc));

  std::ostringstream out;
  out << file_header(sc);
  out << "# fig1 summary\n";
  out << "e0 = " << format_g17(units.e0) << "\n";
  out << "length_unit = " << format_g17(units.length_unit) << "\n";
  out << "tau_unit = " << format_g17(units.tau_unit) << "\n";
  out << "slices = " << run.result.snapshots.size() << "\n";
  out << "peak_norm_min = " << format_g17(peak_norm_min) << "\n";
  out << "peak_norm_max = " << format_g17(peak_norm_max) << "\n";
  const std::string text = out.str();
  write_text_file(dir / "summary.txt", text);
  return text;
}

unsigned sweep_thread_cap() {
  const char* env = std::getenv("DSP_SOLITON_THREADS");
  if (env) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

SweepOutcome execute_sweep(const Scenario& scenario, const std::string& param_path,
                           const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("sweep: no values given");
  {
    Scenario probe_scenario = scenario;  // reject bad paths before any run
    apply_override(probe_scenario, param_path, format_g17(values.front()));
  }

  SweepOutcome sweep;
  sweep.rows.resize(values.size());

  auto work = [&](std::size_t i) {
    SweepRow& row = sweep.rows[i];
    row.value = values[i];
    try {
      Scenario sc = scenario;
      apply_override(sc, param_path, format_g17(values[i]));
      sc.run.snapshot_every = 0;  // endpoints only; rows need the series, not fields
      RunOutcome run = execute_run(sc);
      if (run.integration_failed) throw IntegrationError(0, 0, run.integration_message);
      const Diagnostics& dT = run.result.series.back().diag;
      row.measured_hwhm = 0.5 * dT.fwhm;
      row.measured_tau = 0.5 * dT.fwhm / run.coeffs_final.v_g;
      row.measured_peak = dT.peak_amp;
      row.regime = regime_name(classify_regime(sc.probe, run.coeffs_final.omega_rabi));
      if (run.ctx.has_spec) {
        SolitonSpec specT = run.ctx.spec;
        specT.c_n = run.coeffs_final.c_n;
        specT.big_k = run.coeffs_final.big_k;
        specT.amp_m =
            amplitude_law(sc.probe.a0cos0, run.coeffs_final.cos_t, run.coeffs_final.c_n);
        const WidthReport w = widths(specT, run.coeffs_final, sc.medium, sc.probe);
        row.analytic_hwhm = w.hwhm_xi;
        row.analytic_tau = w.tau;
        row.analytic_peak = specT.amp_m;
      }
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.message = e.what();
      std::replace(row.message.begin(), row.message.end(), ',', ';');
    }
  };

  const unsigned cap = std::min<unsigned>(sweep_thread_cap(),
                                          static_cast<unsigned>(values.size()));
  if (cap <= 1) {
    for (std::size_t i = 0; i < values.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < cap; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= values.size()) return;
          work(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<double> lx, ly_meas_dxi, ly_meas_tau, ly_an_dxi, ly_an_tau;
  for (const auto& row : sweep.rows) {
    if (!row.ok || !(row.measured_hwhm > 0) || !(row.value > 0)) continue;
    lx.push_back(std::log(row.value));
    ly_meas_dxi.push_back(std::log(row.measured_hwhm));
    ly_meas_tau.push_back(std::log(row.measured_tau));
    ly_an_dxi.push_back(std::log(row.analytic_hwhm > 0 ? row.analytic_hwhm : row.measured_hwhm));
    ly_an_tau.push_back(std::log(row.analytic_tau > 0 ? row.analytic_tau : row.measured_tau));
  }
  if (lx.size() >= 2) {
    const auto [mn, mx] = std::minmax_element(lx.begin(), lx.end());
    if (*mx - *mn > 1e-12) {
      sweep.measured_dxi_slope = fit_slope(lx, ly_meas_dxi);
      sweep.measured_tau_slope = fit_slope(lx, ly_meas_tau);
      sweep.analytic_dxi_slope = fit_slope(lx, ly_an_dxi);
      sweep.analytic_tau_slope = fit_slope(lx, ly_an_tau);
      sweep.slopes_defined = true;
    }
  }
  return sweep;
}

std::string cmd_sweep(const Scenario& scenario, const std::string& param_path,
                      const std::vector<double>& values, const std::string& out_dir) {
  const SweepOutcome sweep = execute_sweep(scenario, param_path, values);

  std::ostringstream out;
  out << file_header(scenario);
  out << "# sweep over " << param_path << "\n";
  out << "# columns: value,status,regime,measured_hwhm_xi,measured_tau,measured_peak,"
         "analytic_hwhm_xi,analytic_tau,analytic_peak,message\n";
  for (const auto& row : sweep.rows) {
    out << format_g17(row.value) << "," << (row.ok ? "ok" : "error") << "," << row.regime << ","
        << format_g17(row.measured_hwhm) << "," << format_g17(row.measured_tau) << ","
        << format_g17(row.measured_peak) << "," << format_g17(row.analytic_hwhm) << ","
        << format_g17(row.analytic_tau) << "," << format_g17(row.analytic_peak) << ","
        << row.message << "\n";
  }
  out << "# slopes_defined = " << (sweep.slopes_defined ? 1 : 0) << "\n";
  out << "# measured_dxi_log_slope = " << format_g17(sweep.measured_dxi_slope) << "\n";
  out << "# measured_tau_log_slope = " << format_g17(sweep.measured_tau_slope) << "\n";
  out << "# analytic_dxi_log_slope = " << format_g17(sweep.analytic_dxi_slope) << "\n";
  out << "# analytic_tau_log_slope = " << format_g17(sweep.analytic_tau_slope) << "\n";
  const std::string text = out.str();

  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_text_file(dir / "sweep.csv", text);
  write_text_file(dir / "config_echo.ini", file_header(scenario) + echo_scenario(scenario));
  return text;
}

}  // namespace dsp
