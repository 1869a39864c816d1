#include "core/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "core/polariton.hpp"
#include "core/runner.hpp"
#include "core/textio.hpp"

namespace dsp {

namespace {

// Pinned targets. Desk values quoted to five figures carry the tolerance of
// the claim they reproduce; high-precision anchors were evaluated with an
// independent arbitrary-precision calculation.
constexpr double kTargetHwhm = 2.082e-4;          // m, +-0.5%
constexpr double kPrintedDxiLo = 1.8e-4;            // m
constexpr double kPrintedDxiHi = 3.0e-4;            // m
constexpr double kPrintedDxiClaim = 2.63e-4;        // m, printed estimate
constexpr double kTargetVg = 7.50e-2;             // m/s, +-0.2%
constexpr double kCosThetaExact = 1.5811388298865473e-5;
constexpr double kTargetDelta = 1.0101e-3;        // +-1e-6 absolute
constexpr double kTargetBspResidual = 1.98e-11;   // +-1%
// The printed adiabaticity estimate carries an exponent slip: with
// g sqrt(N) = 6.3246e12 and T = 2.776e-3 s the product is 1.756e10, so
// 1/(g sqrt(N) T) = 5.70e-11, not 5.70e-17. The mantissa is checked at +-1%.
constexpr double kTargetAdiabaticity = 5.70e-11;
constexpr double kTargetE0 = 314.64;              // +-0.5%
constexpr double kTargetLUnit = 1.58114e-4;       // m, +-0.5%
constexpr double kTargetTauUnit = 2.1082e-3;      // s, +-0.5%

CheckResult make_result(const std::string& id, const std::string& name, double margin,
                        const std::string& detail) {
  return {id, name, margin <= 1.0, margin, detail};
}

double rel_margin(double value, double target, double tol) {
  return std::abs(value / target - 1.0) / tol;
}

Scenario bright_base() {
  Scenario s;
  const Preset p = make_paper_ultraslow();
  s.medium = p.medium;
  s.probe = p.probe;
  s.control = p.control;
  s.grid = {4096, 8e-3};
  s.init.kind = InitKind::Bright;
  s.run.t_final = 1e-2;
  s.run.dt = 1e-6;
  s.run.snapshot_every = 1000;
  return s;
}

Scenario dark_base() {
  Scenario s = bright_base();
  s.control.omega_start = 3e6;
  s.control.omega_end = 3e6;
  s.probe.a0cos0 = 0.02;
  s.grid = {8192, 4e-3};
  s.init.kind = InitKind::Dark;
  s.run.snapshot_every = 2000;
  return s;
}

std::string g5(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5g", v);
  return buf;
}

// --- criterion 1: spatial width ------------------------------------------

std::vector<CheckResult> criterion1() {
  const RunContext ctx = prepare_run(bright_base());
  const WidthReport w =
      widths(ctx.spec, ctx.coeffs0, ctx.scenario.medium, ctx.scenario.probe);
  const double m1 = rel_margin(w.hwhm_xi, kTargetHwhm, 0.005);
  const double m2 =
      (w.printed_dxi >= kPrintedDxiLo && w.printed_dxi <= kPrintedDxiHi) ? 0.0 : 10.0;
  std::ostringstream d;
  d << "hwhm_xi=" << g5(w.hwhm_xi) << " m vs " << g5(kTargetHwhm) << "+-0.5%; printed formula "
    << g5(w.printed_dxi) << " m in [" << g5(kPrintedDxiLo) << "," << g5(kPrintedDxiHi)
    << "] bracketing the printed estimate " << g5(kPrintedDxiClaim) << " m";
  return {make_result("1", "spatial_width", std::max(m1, m2), d.str())};
}

// --- criterion 2: group velocity ------------------------------------------

std::vector<CheckResult> criterion2() {
  const Scenario s = bright_base();
  const Coefficients c = coefficients_at(s.medium, s.probe, s.control, 0.0);
  const CheckResult disp = check_dispersion(c);
  const CheckResult vel = check_group_velocity(c);
  const double margin = std::max(disp.margin, vel.margin);
  return {make_result("2", "group_velocity", margin, vel.detail + "; " + disp.detail)};
}

// --- criterion 3: regime truth table --------------------------------------

std::vector<CheckResult> criterion3() {
  int bad = 0;
  std::ostringstream d;
  auto expect = [&](double delta, double omega, RegimeKind want) {
    const RegimeKind got = classify_regime(delta, omega);
    if (got != want) {
      ++bad;
      d << "classify(" << g5(delta) << "," << g5(omega) << ")=" << regime_name(got)
        << " want " << regime_name(want) << "; ";
    }
  };
  expect(-1e7, 1e8, RegimeKind::Bright);
  expect(-1e7, 3e6, RegimeKind::Dark);
  expect(1e7, 1e8, RegimeKind::Dark);
  expect(1e7, 3e6, RegimeKind::Bright);
  expect(0.0, 1e8, RegimeKind::Linear);

  // classifier vs sign(Re c_n) with gamma_ab = 0 on a 100x100 grid
  Scenario s = bright_base();
  s.medium.gamma_ab = 0;
  int mismatches = 0, cells = 0;
  for (int i = 0; i < 100; ++i) {
    const double omega = 1e6 * std::pow(1e3, i / 99.0);
    ControlSchedule sched;
    sched.kind = ScheduleKind::Constant;
    sched.omega_start = omega;
    sched.omega_end = omega;
    for (int j = 0; j < 100; ++j) {
      const double delta = -1e8 + j * (2e8 / 99.0);
      if (delta == 0.0 || omega * omega == delta * delta) continue;
      ProbeSpec probe = s.probe;
      probe.detuning = delta;
      try {
        const Coefficients c = coefficients_at(s.medium, probe, sched, 0.0);
        if (c.c_n.real() == 0.0) continue;
        const bool bright = classify_regime(delta, omega) == RegimeKind::Bright;
        if (bright != (c.c_n.real() > 0)) ++mismatches;
        ++cells;
      } catch (const std::domain_error&) {
        // exact nonlinear resonance line; excluded by construction
      }
    }
  }
  std::ostringstream dd;
  dd << "truth table errors=" << bad << "; grid cells=" << cells
     << " classifier/sign(Re c_n) mismatches=" << mismatches << d.str();
  return {make_result("3", "regime_truth_table", static_cast<double>(bad + mismatches),
                      dd.str())};
}

// --- criterion 4: soliton stationarity -------------------------------------

std::vector<CheckResult> criterion4a() {
  Scenario s = bright_base();
  s.medium.gamma_ab = 0;
  const RunOutcome run = execute_run(s);
  const double margin = run.stationarity_defined ? run.stationarity_linf_rel / 1e-6 : 1e9;
  std::ostringstream d;
  d << "Linf deviation from the analytic soliton over 10 ms = "
    << g5(run.stationarity_linf_rel) << " * M (allowed 1e-6)";
  return {make_result("4a", "soliton_stationarity", margin, d.str())};
}

std::vector<CheckResult> criterion4b() {
  Scenario s = bright_base();
  s.medium.gamma_ab = 0;
  s.init.kind = InitKind::PrintedForm;
  const RunOutcome run = execute_run(s);
  const double osc = run.peak_oscillation_rel;
  const double margin = 0.05 / std::max(osc, 1e-300);
  std::ostringstream d;
  d << "sqrt(2)-wide printed profile peak oscillation over 10 ms = " << g5(osc)
    << " (required >= 0.05). The comoving nonlinear time K/kappa^2 is ~2.2 s, so a 10 ms "
       "window cannot reshape the profile; the mismatch is demonstrated on the soliton "
       "time scale by the long-horizon engine test instead";
  return {make_result("4b", "printed_profile_oscillation", margin, d.str())};
}

// --- criterion 5: conservation ---------------------------------------------

std::vector<CheckResult> criterion5() {
  Scenario lossless = bright_base();
  lossless.medium.gamma_ab = 0;
  const RunOutcome a = execute_run(lossless);
  const double m_norm = a.norm_drift_rel / 1e-10;
  const double m_ham = a.hamiltonian_drift_rel / 1e-8;

  const Scenario lossy = bright_base();  // gamma_ab = 1e6 in the preset
  const RunOutcome b = execute_run(lossy);
  bool strict = true;
  for (std::size_t i = 1; i < b.result.series.size(); ++i)
    if (!(b.result.series[i].diag.norm < b.result.series[i - 1].diag.norm)) strict = false;
  const Coefficients c = coefficients_at(lossy.medium, lossy.probe, lossy.control, 0.0);
  const double m_delta = std::abs(c.delta_loss - kTargetDelta) / 1e-6;

  const double margin = std::max({m_norm, m_ham, strict ? 0.0 : 10.0, m_delta});
  std::ostringstream d;
  d << "norm drift=" << g5(a.norm_drift_rel) << " (<=1e-10), hamiltonian drift="
    << g5(a.hamiltonian_drift_rel) << " (<=1e-8), lossy norm strictly decreasing="
    << (strict ? "yes" : "NO") << ", delta=" << g5(c.delta_loss) << " vs "
    << g5(kTargetDelta) << "+-1e-6";
  return {make_result("5", "conservation", margin, d.str())};
}

// --- criterion 6: scaling laws ---------------------------------------------

std::vector<CheckResult> criterion6() {
  Scenario s = bright_base();
  s.run.t_final = 1e-3;
  s.run.snapshot_every = 0;
  const SweepOutcome sweep =
      execute_sweep(s, "control.omega_start", {1.0e8, 0.5e8, 0.25e8});
  double margin = 1e9;
  std::ostringstream d;
  if (sweep.slopes_defined) {
    const double m1 = std::abs(sweep.measured_dxi_slope - 1.0) / 0.02;
    const double m2 = std::abs(sweep.measured_tau_slope + 1.0) / 0.02;
    margin = std::max(m1, m2);
    d << "measured log-log slopes: dxi vs Omega = " << g5(sweep.measured_dxi_slope)
      << " (want 1.00+-0.02), tau vs Omega = " << g5(sweep.measured_tau_slope)
      << " (want -1.00+-0.02); analytic " << g5(sweep.analytic_dxi_slope) << ", "
      << g5(sweep.analytic_tau_slope);
  } else {
    d << "sweep produced no usable rows";
  }
  return {make_result("6", "scaling_laws", margin, d.str())};
}

// --- criterion 7: adiabatic ramp tracking -----------------------------------

std::vector<CheckResult> criterion7() {
  Scenario s = bright_base();
  s.control.kind = ScheduleKind::Tanh;
  s.control.omega_start = 1.0e8;
  s.control.omega_end = 0.8e8;
  s.control.t_center = 2.5e-3;
  s.control.t_ramp = 1e-3;
  s.run.t_final = 5e-3;
  const RunOutcome run = execute_run(s);

  std::vector<CheckResult> out;
  {
    const double margin = run.shape_err_max / 0.05;
    std::ostringstream d;
    d << "max shape_err over the ramp = " << g5(run.shape_err_max) << " (allowed 0.05)";
    out.push_back(make_result("7a", "ramp_shape", margin, d.str()));
  }
  {
    const double margin = std::abs(run.fwhm_ratio / 0.8 - 1.0) / 0.05;
    std::ostringstream d;
    d << "measured FWHM ratio = " << g5(run.fwhm_ratio)
      << " (required 0.8+-5%). The field cannot reshape within a 5 ms ramp: the comoving "
         "nonlinear/dispersive time K/kappa^2 is ~2.2 s, so the measured width stays at "
         "its initial value; the 0.8 target describes the analytic family of "
         "independently prepared solitons (see the sweep check)";
    out.push_back(make_result("7b", "ramp_width_ratio", margin, d.str()));
  }
  {
    const double p = run.amp_exponent_defined ? run.amp_exponent : 0.0;
    const bool ok = p >= 0.5 && p <= 2.5;
    const double margin = ok ? 0.0 : (p < 0.5 ? (0.5 - p) / 0.5 + 1.0 : (p - 2.5) / 0.5 + 1.0);
    std::ostringstream d;
    d << "fitted amplitude exponent p in peak ~ cos(theta)^(-p) = " << g5(p)
      << " (required in [0.5, 2.5]). Frozen-field dynamics over a 5 ms ramp pins the "
         "measured peak, giving p ~ 0; quasi-static ramps approach p = 1 (norm "
         "conservation), reported for reference";
    out.push_back(make_result("7c", "ramp_amplitude_exponent", margin, d.str()));
  }
  return out;
}

// --- criterion 8: dark regime ----------------------------------------------

std::vector<CheckResult> criterion8() {
  const Scenario s = dark_base();
  const RunOutcome run = execute_run(s);
  const double m_shape = run.shape_err_max / 1e-3;

  // pi phase jump across each notch of the final state
  const EngineState& st = run.final_state;
  const std::size_t n = st.psi.size();
  std::vector<std::size_t> minima;
  double bg = 0;
  for (const auto& v : st.psi) bg = std::max(bg, std::abs(v));
  for (std::size_t j = 0; j < n; ++j) {
    const double a = std::abs(st.psi[j]);
    if (a < 0.25 * bg && a <= std::abs(st.psi[(j + n - 1) % n]) &&
        a < std::abs(st.psi[(j + 1) % n]))
      minima.push_back(j);
  }
  double m_phase = 10.0;
  std::ostringstream d;
  if (minima.size() == 2) {
    const std::size_t off = 100;
    double worst = 0;
    for (const std::size_t j : minima) {
      const cplx left = st.psi[(j + n - off) % n];
      const cplx right = st.psi[(j + off) % n];
      const double jump = std::abs(std::arg(right * std::conj(left)));
      worst = std::max(worst, std::abs(jump - kPi));
    }
    m_phase = worst / 0.01;
    d << "max shape_err=" << g5(run.shape_err_max) << " (<=1e-3); phase jumps within "
      << g5(worst) << " rad of pi";
  } else {
    d << "expected 2 notches, found " << minima.size();
  }
  return {make_result("8", "dark_pair", std::max(m_shape, m_phase), d.str())};
}

// --- criterion 9: polariton limits ------------------------------------------

std::vector<CheckResult> criterion9() {
  // rotation unitarity on seeded random fields
  std::mt19937_64 rng(20240611u);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const double atoms_n = 1e13;
  double worst_unitarity = 0;
  for (double theta : {0.0, 0.3, 0.25 * kPi, 1.2, 0.5 * kPi}) {
    FieldPair f;
    const std::size_t n = 256;
    f.z_grid.resize(n);
    f.epsilon.resize(n);
    f.rho_cb.resize(n);
    f.k0 = 6.67e6;
    f.k_c = 6.6e6;
    for (std::size_t j = 0; j < n; ++j) {
      f.z_grid[j] = j * 1e-6;
      f.epsilon[j] = cplx(uni(rng), uni(rng));
      f.rho_cb[j] = 0.5 * cplx(uni(rng), uni(rng));
    }
    const PolaritonPair pol = to_polaritons(f, theta, atoms_n);
    double lhs = 0, rhs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      lhs += std::norm(pol.psi[j]) + std::norm(pol.phi[j]);
      rhs += std::norm(f.epsilon[j]) + atoms_n * std::norm(f.rho_cb[j]);
    }
    worst_unitarity = std::max(worst_unitarity, std::abs(lhs / rhs - 1.0));
  }
  const double m_unit = worst_unitarity / 1e-12;

  const RunContext ctx = prepare_run(bright_base());
  const Scenario& s = ctx.scenario;
  const double eps_peak = ctx.coeffs0.cos_t * ctx.amp_m;
  const double r = bsp_residual(s.medium, s.probe, ctx.coeffs0.omega_rabi, eps_peak);
  const double m_bsp = rel_margin(r, kTargetBspResidual, 0.01);

  const WidthReport w = widths(ctx.spec, ctx.coeffs0, s.medium, s.probe);
  const double eps_ad = adiabaticity(s.medium, w.tau);
  const double m_ad = rel_margin(eps_ad, kTargetAdiabaticity, 0.01);

  const double margin = std::max({m_unit, m_bsp, m_ad});
  std::ostringstream d;
  d << "unitarity dev=" << g5(worst_unitarity) << " (<=1e-12); |Phi|/|cos(theta)Psi| estimate="
    << g5(r) << " vs " << g5(kTargetBspResidual) << "+-1%; adiabaticity=" << g5(eps_ad)
    << " vs " << g5(kTargetAdiabaticity)
    << "+-1% (printed desk value 5.70e-17 is an exponent slip; 1/(6.3246e12*2.776e-3)"
       " = 5.70e-11)";
  return {make_result("9", "polariton_limits", margin, d.str())};
}

// --- criterion 10: normalized soliton surface -------------------------------

std::vector<CheckResult> criterion10() {
  Scenario s = bright_base();
  s.run.t_final = 2e-3;
  s.run.snapshot_every = 250;
  const RunOutcome run = execute_run(s);
  const Fig1Units units = fig1_units(run.ctx);

  const double m_e0 = rel_margin(units.e0, kTargetE0, 0.005);
  const double m_l = rel_margin(units.length_unit, kTargetLUnit, 0.005);
  const double m_tau = rel_margin(units.tau_unit, kTargetTauUnit, 0.005);

  double ridge_dev = 0;
  for (const auto& snap : run.result.snapshots) {
    double peak = 0;
    for (const auto& v : snap.psi) peak = std::max(peak, std::abs(v));
    ridge_dev = std::max(ridge_dev, std::abs(peak / units.e0 - 1.0));
  }
  const double m_ridge = ridge_dev / 1e-3;

  const double margin = std::max({m_e0, m_l, m_tau, m_ridge});
  std::ostringstream d;
  d << "E0=" << g5(units.e0) << " vs " << g5(kTargetE0) << ", L=" << g5(units.length_unit)
    << " vs " << g5(kTargetLUnit) << ", tau_unit=" << g5(units.tau_unit) << " vs "
    << g5(kTargetTauUnit) << " (each +-0.5%); normalized ridge peak within "
    << g5(ridge_dev) << " of 1";
  return {make_result("10", "normalized_surface", margin, d.str())};
}

using CriterionFn = std::function<std::vector<CheckResult>()>;

const std::vector<std::pair<std::string, CriterionFn>>& criterion_table() {
  static const std::vector<std::pair<std::string, CriterionFn>> table = {
      {"1", criterion1},   {"2", criterion2}, {"3", criterion3}, {"4a", criterion4a},
      {"4b", criterion4b}, {"5", criterion5}, {"6", criterion6}, {"7", criterion7},
      {"8", criterion8},   {"9", criterion9}, {"10", criterion10},
  };
  return table;
}

}  // namespace

CheckResult check_dispersion(const Coefficients& c) {
  const double m_sign = c.beta2 <= 0 ? 0.0 : 10.0;
  const double m_recip = std::abs(c.v_g * c.beta1 - 1.0) / 1e-12;
  std::ostringstream d;
  d << "beta2=" << g5(c.beta2) << " (<=0), V_g*beta1-1=" << g5(c.v_g * c.beta1 - 1.0);
  return make_result("2d", "dispersion", std::max(m_sign, m_recip), d.str());
}

CheckResult check_group_velocity(const Coefficients& c) {
  const double m_vg = rel_margin(c.v_g, kTargetVg, 0.002);
  const double m_cos = std::abs(c.cos_t / kCosThetaExact - 1.0) / 1e-10;
  std::ostringstream d;
  d << "V_g=" << g5(c.v_g) << " m/s vs " << g5(kTargetVg) << "+-0.2%, cos(theta)="
    << g5(c.cos_t);
  return make_result("2v", "group_velocity_value", std::max(m_vg, m_cos), d.str());
}

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = {"1", "2",  "3", "4a", "4b", "5",
                                               "6", "7a", "7b", "7c", "8",  "9", "10"};
  return ids;
}

std::vector<CheckResult> run_subchecks(const std::string& id) {
  for (const auto& [key, fn] : criterion_table())
    if (key == id) return fn();
  // letter-suffixed clause of a shared-run criterion, e.g. "7b"
  std::string numeric = id;
  while (!numeric.empty() && std::isalpha(static_cast<unsigned char>(numeric.back())))
    numeric.pop_back();
  for (const auto& [key, fn] : criterion_table()) {
    if (key != numeric) continue;
    std::vector<CheckResult> all = fn();
    std::vector<CheckResult> filtered;
    for (auto& r : all)
      if (r.id == id) filtered.push_back(std::move(r));
    if (!filtered.empty()) return filtered;
  }
  throw std::invalid_argument("unknown check id '" + id + "'");
}

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> out;
  for (const auto& [key, fn] : criterion_table()) {
    std::vector<CheckResult> r = fn();
    out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  out << "# " << kToolVersion << " selfcheck\n";
  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    char line[160];
    std::snprintf(line, sizeof(line), "[%3s] %s %-28s margin=%.3g\n", r.id.c_str(),
                  r.pass ? "PASS" : "FAIL", r.name.c_str(), r.margin);
    out << line;
    out << "      " << r.detail << "\n";
  }
  out << (failed == 0 ? "selfcheck: all checks passed\n"
                      : "selfcheck: " + std::to_string(failed) + " of " +
                            std::to_string(results.size()) + " checks failed\n");
  return out.str();
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace dsp
