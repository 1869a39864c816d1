#include "core/soliton.hpp"

#include <cmath>
#include <stdexcept>

namespace dsp {

std::string soliton_kind_name(SolitonKind kind) {
  switch (kind) {
    case SolitonKind::Bright: return "bright";
    case SolitonKind::Dark: return "dark";
    case SolitonKind::PrintedForm: return "printed";
  }
  return "?";
}

double SolitonSpec::kappa() const {
  const double re = c_n.real();
  switch (kind) {
    case SolitonKind::Bright: return std::sqrt(0.5 * re) * amp_m;
    case SolitonKind::Dark: return std::sqrt(0.5 * std::abs(re)) * amp_m;
    case SolitonKind::PrintedForm: return std::sqrt(re) * amp_m;
  }
  return 0;
}

void SolitonSpec::validate() const {
  if (!(amp_m > 0) || !std::isfinite(amp_m))
    throw std::invalid_argument("soliton.amp_m must be finite and > 0");
  if (!(big_k > 0)) throw std::invalid_argument("soliton.big_k must be > 0");
  const double re = c_n.real();
  if (kind == SolitonKind::Dark) {
    if (!(re < 0))
      throw std::domain_error("dark soliton requires Re(c_n) < 0 (defocusing regime)");
  } else {
    if (!(re > 0))
      throw std::domain_error("bright soliton requires Re(c_n) > 0 (focusing regime)");
  }
}

std::vector<cplx> bright_profile(const SolitonSpec& spec, const std::vector<double>& xi_grid,
                                 double /*t*/, double t_prime) {
  if (spec.kind == SolitonKind::Dark)
    throw std::domain_error("bright_profile: spec is a dark soliton");
  spec.validate();
  const double kappa = spec.kappa();
  // Bright phase rate is kappa^2 in t'; the printed variant carries
  // Re(c_n) M^2 = 2 kappa^2 instead.
  const double rate = spec.kind == SolitonKind::Bright
                          ? kappa * kappa
                          : spec.c_n.real() * spec.amp_m * spec.amp_m;
  const cplx phase = std::polar(1.0, rate * t_prime);
  std::vector<cplx> out(xi_grid.size());
  for (std::size_t i = 0; i < xi_grid.size(); ++i) {
    const double u = kappa * (xi_grid[i] - spec.center_xi);
    out[i] = spec.amp_m / std::cosh(u) * phase;
  }
  return out;
}

std::vector<cplx> dark_profile(const SolitonSpec& spec, const std::vector<double>& xi_grid,
                               double t_prime) {
  if (spec.kind != SolitonKind::Dark)
    throw std::domain_error("dark_profile: spec is not a dark soliton");
  spec.validate();
  const double kappa = spec.kappa();
  const cplx phase = std::polar(1.0, -2.0 * kappa * kappa * t_prime);
  std::vector<cplx> out(xi_grid.size());
  for (std::size_t i = 0; i < xi_grid.size(); ++i) {
    const double u = kappa * (xi_grid[i] - spec.center_xi);
    out[i] = spec.amp_m * std::tanh(u) * phase;
  }
  return out;
}

double amplitude_law(double a0cos0, double cos_theta_t, cplx c_n_t) {
  if (!(a0cos0 > 0)) throw std::invalid_argument("amplitude_law: a0cos0 must be > 0");
  if (cos_theta_t == 0.0) throw std::domain_error("amplitude_law: cos(theta) is zero");
  const double half = 0.5 * std::abs(c_n_t);
  if (!(half > 0)) throw std::domain_error("amplitude_law: |c_n| is zero");
  return a0cos0 / (std::sqrt(half) * cos_theta_t);
}

WidthReport widths(const SolitonSpec& spec, const Coefficients& coeffs,
                   const MediumParams& medium, const ProbeSpec& probe) {
  spec.validate();
  WidthReport out;
  out.hwhm_xi = kSechHalfArg / spec.kappa();
  out.fwhm_xi = 2.0 * out.hwhm_xi;
  out.tau = out.hwhm_xi / coeffs.v_g;

  // Printed closed forms, evaluated verbatim:
  //   dxi = ln(2+sqrt3) |N c (Om^2 - D^2) / (6 k0 Om^2 M^2 D)|^(1/2) cos(theta)
  //   tau = ln(2+sqrt3) |N (Om^2 - D^2) / (6 k0 Om^2 M^2 D) cos^2(theta)|^(1/2)
  const double om2 = coeffs.omega_rabi * coeffs.omega_rabi;
  const double d = probe.detuning;
  const double m2 = spec.amp_m * spec.amp_m;
  if (d != 0.0) {
    const double core =
        medium.atoms_n * (om2 - d * d) / (6.0 * coeffs.k0 * om2 * m2 * d);
    out.printed_dxi =
        kSechHalfArg * std::sqrt(std::abs(core * medium.light_speed)) * coeffs.cos_t;
    out.printed_tau = kSechHalfArg * std::sqrt(std::abs(core) * coeffs.cos_t * coeffs.cos_t);
  }
  return out;
}

std::pair<double, double> scaling_laws(double omega_0, double omega_t) {
  if (!(omega_0 > 0) || !(omega_t > 0))
    throw std::domain_error("scaling_laws: Rabi frequencies must be > 0");
  return {omega_t / omega_0, omega_0 / omega_t};
}

}  // namespace dsp
