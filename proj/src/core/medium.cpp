#include "core/medium.hpp"

#include <cmath>
#include <stdexcept>

namespace dsp {

double MediumParams::collective_coupling() const { return g * std::sqrt(atoms_n); }

void MediumParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0) || !std::isfinite(v))
      throw std::invalid_argument(std::string("medium.") + name + " must be finite and > 0");
  };
  auto nonneg = [](double v, const char* name) {
    if (!(v >= 0) || !std::isfinite(v))
      throw std::invalid_argument(std::string("medium.") + name + " must be finite and >= 0");
  };
  positive(g, "g");
  positive(atoms_n, "atoms_n");
  positive(omega0, "omega0");
  positive(light_speed, "light_speed");
  nonneg(gamma_ab, "gamma_ab");
  nonneg(gamma_cb, "gamma_cb");
  nonneg(gamma_ca, "gamma_ca");
  const double G = collective_coupling();
  if (!(G > 0) || !std::isfinite(G))
    throw std::invalid_argument("medium: collective coupling g*sqrt(atoms_n) must be finite and > 0");
}

void ProbeSpec::validate() const {
  if (!(a0cos0 > 0) || !std::isfinite(a0cos0))
    throw std::invalid_argument("probe.a0cos0 must be finite and > 0");
  if (!std::isfinite(detuning)) throw std::invalid_argument("probe.detuning must be finite");
  if (k_c && !std::isfinite(*k_c)) throw std::invalid_argument("probe.k_c must be finite");
}

double ControlSchedule::omega(double t) const {
  double w = omega_start;
  switch (kind) {
    case ScheduleKind::Constant:
      w = omega_start;
      break;
    case ScheduleKind::Linear: {
      const double t0 = t_center - 0.5 * t_ramp;
      double u = t_ramp > 0 ? (t - t0) / t_ramp : (t < t_center ? 0.0 : 1.0);
      u = std::clamp(u, 0.0, 1.0);
      w = omega_start + (omega_end - omega_start) * u;
      break;
    }
    case ScheduleKind::Tanh:
      w = 0.5 * (omega_start + omega_end) +
          0.5 * (omega_end - omega_start) * std::tanh((t - t_center) / t_ramp);
      break;
  }
  return std::max(w, floor());
}

double ControlSchedule::omega_dot(double t) const {
  switch (kind) {
    case ScheduleKind::Constant:
      return 0.0;
    case ScheduleKind::Linear: {
      if (t_ramp <= 0) return 0.0;
      const double t0 = t_center - 0.5 * t_ramp;
      const double u = (t - t0) / t_ramp;
      return (u > 0.0 && u < 1.0) ? (omega_end - omega_start) / t_ramp : 0.0;
    }
    case ScheduleKind::Tanh: {
      const double s = 1.0 / std::cosh((t - t_center) / t_ramp);
      return 0.5 * (omega_end - omega_start) / t_ramp * s * s;
    }
  }
  return 0.0;
}

void ControlSchedule::validate() const {
  if (!(omega_start > 0) || !std::isfinite(omega_start))
    throw std::invalid_argument("control.omega_start must be finite and > 0");
  if (kind == ScheduleKind::Constant) return;
  if (!(omega_end > 0) || !std::isfinite(omega_end))
    throw std::invalid_argument("control.omega_end must be finite and > 0");
  if (omega_end < floor() || omega_start < floor())
    throw std::invalid_argument(
        "control: schedule requests Omega below the 1e-6*omega_start floor");
  if (!(t_ramp > 0) || !std::isfinite(t_ramp))
    throw std::invalid_argument("control.t_ramp must be finite and > 0");
  if (!std::isfinite(t_center)) throw std::invalid_argument("control.t_center must be finite");
}

ScheduleKind schedule_kind_from_name(const std::string& name) {
  if (name == "constant") return ScheduleKind::Constant;
  if (name == "linear") return ScheduleKind::Linear;
  if (name == "tanh") return ScheduleKind::Tanh;
  throw std::invalid_argument("control.kind must be one of constant, linear, tanh (got '" +
                              name + "')");
}

std::string schedule_kind_name(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::Constant: return "constant";
    case ScheduleKind::Linear: return "linear";
    case ScheduleKind::Tanh: return "tanh";
  }
  return "?";
}

std::string regime_name(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::Bright: return "Bright";
    case RegimeKind::Dark: return "Dark";
    case RegimeKind::Linear: return "Linear";
    case RegimeKind::Singular: return "Singular";
  }
  return "?";
}

double mixing_angle(const MediumParams& medium, double omega_rabi) {
  if (!(omega_rabi > 0))
    throw std::domain_error("mixing_angle: Rabi frequency must be > 0");
  return std::atan2(medium.collective_coupling(), omega_rabi);
}

namespace {

// theta is within ~1e-5 of pi/2 in the ultraslow regime; computing the trig
// values directly from (Omega, G) keeps full precision in cos(theta).
struct Trig {
  double cos_t, sin_t, tan_t, theta;
};

Trig stable_trig(double G, double omega_rabi) {
  const double h = std::hypot(omega_rabi, G);
  return {omega_rabi / h, G / h, G / omega_rabi, std::atan2(G, omega_rabi)};
}

}  // namespace

std::pair<cplx, cplx> susceptibility(const MediumParams& medium, const ProbeSpec& probe,
                                     double omega_rabi) {
  if (!(omega_rabi > 0))
    throw std::domain_error("susceptibility: Rabi frequency must be > 0");
  const double delta = probe.detuning;
  if (delta == 0.0) return {cplx(0, 0), cplx(0, 0)};

  const double g2n = medium.g * medium.g * medium.atoms_n;
  const double om2 = omega_rabi * omega_rabi;
  const cplx chi1(-2.0 * g2n * delta / (om2 * medium.omega0), 0.0);

  // Omega^4 (1 + (-Delta^2 + i gamma_ab Delta)/Omega^2) = Omega^2 (Omega^2 - Delta^2 + i gamma_ab Delta)
  const cplx res(om2 - delta * delta, medium.gamma_ab * delta);
  if (res == cplx(0, 0))
    throw std::domain_error(
        "susceptibility: nonlinear resonance Omega^2 == Delta^2 with gamma_ab == 0");
  const cplx chi3 = -6.0 * g2n * g2n / medium.atoms_n * delta / (om2 * res * medium.omega0);
  return {chi1, chi3};
}

Coefficients coefficients_at(const MediumParams& medium, const ProbeSpec& probe,
                             const ControlSchedule& schedule, double t) {
  const double omega = schedule.omega(t);
  if (!(omega > 0)) throw std::domain_error("coefficients_at: Omega(t) must be > 0");
  const double G = medium.collective_coupling();
  const double c = medium.light_speed;

  Coefficients out;
  out.omega_rabi = omega;
  const Trig tr = stable_trig(G, omega);
  out.theta = tr.theta;
  out.cos_t = tr.cos_t;
  out.sin_t = tr.sin_t;
  out.tan_t = tr.tan_t;
  out.alpha = tr.tan_t * tr.tan_t;

  out.v_g = c * tr.cos_t * tr.cos_t;
  out.beta1 = 1.0 / out.v_g;
  const double tan2 = tr.tan_t * tr.tan_t;
  out.beta2 = -tan2 * tan2 / (medium.omega0 * c);
  out.k0 = medium.omega0 / c;

  auto [chi1, chi3] = susceptibility(medium, probe, omega);
  out.chi1 = chi1;
  out.chi3 = chi3;
  out.eta = 3.0 * medium.omega0 * medium.omega0 * chi3 / (2.0 * c * c);

  const double cot = tr.cos_t / tr.sin_t;
  const double csc2 = 1.0 / (tr.sin_t * tr.sin_t);
  out.c_n = out.eta * (cot * cot * csc2);

  const double sin2 = tr.sin_t * tr.sin_t;
  out.big_k = out.k0 / (out.v_g * sin2 * sin2);

  const double cn_abs = std::abs(out.c_n);
  out.delta_loss = cn_abs > 0 ? out.c_n.imag() / cn_abs : 0.0;

  const double omega_dot = schedule.omega_dot(t);
  out.theta_dot = -G * omega_dot / (omega * omega + G * G);
  return out;
}

RegimeKind classify_regime(double detuning, double omega_rabi) {
  if (!(omega_rabi > 0))
    throw std::domain_error("classify_regime: Rabi frequency must be > 0");
  if (detuning == 0.0) return RegimeKind::Linear;
  const double om2 = omega_rabi * omega_rabi;
  const double d2 = detuning * detuning;
  if (om2 == d2) return RegimeKind::Singular;
  const double s = -detuning * (om2 - d2);
  return s > 0 ? RegimeKind::Bright : RegimeKind::Dark;
}

RegimeKind classify_regime(const ProbeSpec& probe, double omega_rabi) {
  return classify_regime(probe.detuning, omega_rabi);
}

std::vector<AssumptionCheck> validate_assumptions(const MediumParams& medium,
                                                  const ProbeSpec& probe,
                                                  const ControlSchedule& schedule, double t,
                                                  double peak_field, double threshold) {
  const double omega = schedule.omega(t);
  const double delta = probe.detuning;
  std::vector<AssumptionCheck> checks;
  auto add = [&](const std::string& name, double margin) {
    checks.push_back({name, margin, threshold, margin <= threshold});
  };
  add("gamma_cb/Omega", medium.gamma_cb / omega);
  add("gamma_ca/Omega", medium.gamma_ca / omega);
  const double denom = std::abs(omega * omega - delta * delta);
  add("|gamma_ab*Delta|/|Omega^2-Delta^2|",
      denom > 0 ? std::abs(medium.gamma_ab * delta) / denom
                : std::numeric_limits<double>::infinity());
  const double drive = medium.g * std::abs(peak_field) / omega;
  add("(g*|eps_peak|/Omega)^2", drive * drive);
  return checks;
}

double perturbation_exact(const MediumParams& medium, const ProbeSpec& probe,
                          double omega_rabi) {
  const double G = medium.collective_coupling();
  const Trig tr = stable_trig(G, omega_rabi);
  const double om2 = omega_rabi * omega_rabi;
  const double d2 = probe.detuning * probe.detuning;
  const double a = om2 - d2;
  const double b = medium.gamma_ab * probe.detuning;
  const double D = a * a + b * b;
  if (D == 0)
    throw std::domain_error("perturbation_exact: nonlinear resonance Omega^2 == Delta^2");
  return om2 * a / (D * tr.sin_t * tr.cos_t) - tr.cos_t / tr.sin_t;
}

double perturbation_tan_theta(const MediumParams& medium, double omega_rabi) {
  return medium.collective_coupling() / omega_rabi;
}

Preset make_paper_ultraslow() {
  Preset p;
  p.medium.g = 2.0e6;
  p.medium.atoms_n = 1.0e13;
  p.medium.gamma_ab = 1.0e6;
  p.medium.gamma_cb = 1.0e3;
  p.medium.gamma_ca = 1.0e3;
  p.medium.omega0 = 2.0e15;
  p.medium.light_speed = kSpeedOfLightSI;
  p.probe.detuning = -1.0e7;  // bright regime; the quoted magnitude is 1.0e7
  p.probe.a0cos0 = 0.1;
  p.control.kind = ScheduleKind::Constant;
  p.control.omega_start = 1.0e8;
  p.control.omega_end = 1.0e8;
  return p;
}

bool is_known_preset(const std::string& name) { return name == "paper-ultraslow"; }

}  // namespace dsp
