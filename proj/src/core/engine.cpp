#include "core/engine.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/textio.hpp"

namespace dsp {

CoefficientProvider make_coefficient_provider(const MediumParams& medium,
                                              const ProbeSpec& probe,
                                              const ControlSchedule& schedule,
                                              PerturbationModel model) {
  return [medium, probe, schedule, model](double t) {
    const Coefficients c = coefficients_at(medium, probe, schedule, t);
    StepCoefficients sc;
    sc.big_k = c.big_k;
    sc.c_n = c.c_n;
    sc.theta_dot = c.theta_dot;
    sc.pert = model == PerturbationModel::TanTheta
                  ? perturbation_tan_theta(medium, c.omega_rabi)
                  : perturbation_exact(medium, probe, c.omega_rabi);
    return sc;
  };
}

namespace {

std::vector<cplx> sample_dark_pair(const Grid1D& grid, const SolitonSpec& spec) {
  const double kappa = spec.kappa();
  const double c1 = -0.25 * grid.length;
  const double c2 = 0.25 * grid.length;
  std::vector<cplx> psi(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double x = grid.xi[j];
    psi[j] = spec.amp_m * std::tanh(kappa * (x - c1)) * std::tanh(kappa * (x - c2));
  }
  return psi;
}

std::vector<cplx> load_file_samples(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("init.file: cannot open " + path);
  std::vector<cplx> psi;
  psi.reserve(n);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double xi, re, im;
    if (!(ss >> xi >> re >> im))
      throw std::invalid_argument("init.file: expected rows 'xi,re_psi,im_psi' in " + path);
    psi.emplace_back(re, im);
  }
  if (psi.size() != n)
    throw std::invalid_argument("init.file: sample count " + std::to_string(psi.size()) +
                                " does not match grid.points " + std::to_string(n));
  return psi;
}

// Exact solution of i K psi_t = -c |psi|^2 psi over normalized span tau:
// |psi|^2 follows d|psi|^2/dtau = -2 Im(c) |psi|^4, then the exact phase
// integral of Re(c) |psi|^2.
void apply_nonlinear(std::vector<cplx>& psi, cplx c, double tau, double gain) {
  const double cr = c.real(), ci = c.imag();
  for (auto& v : psi) {
    const double p0 = std::norm(v);
    if (p0 == 0.0) {
      v *= gain;
      continue;
    }
    const double x = 2.0 * ci * p0 * tau;
    const double amp = 1.0 / std::sqrt(1.0 + x);
    const double lp = std::abs(x) > 1e-8 ? std::log1p(x) / x : 1.0 - 0.5 * x;
    const double phase = cr * p0 * tau * lp;
    v *= gain * amp * std::polar(1.0, phase);
  }
}

cplx effective_nonlinear_coefficient(const StepCoefficients& sc, PropagationMode mode) {
  if (mode == PropagationMode::Physical) return sc.c_n;
  const double mag = std::abs(sc.c_n);
  return mag > 0 ? 2.0 * sc.c_n / mag : cplx(0, 0);
}

}  // namespace

EngineState init_state(const Grid1D& grid, const InitProfile& profile, PropagationMode mode,
                       double t0, cplx c_n_at_t0) {
  EngineState state;
  state.grid = grid;
  state.t = t0;
  state.t_prime = 0;
  state.mode = mode;
  state.psi.assign(grid.n, cplx(0, 0));

  if (const auto* s = std::get_if<SolitonInit>(&profile)) {
    const SolitonSpec& spec = s->spec;
    spec.validate();
    if (spec.kind == SolitonKind::Dark) {
      if (!(c_n_at_t0.real() < 0))
        throw std::domain_error("init_state: dark profile requires Re(c_n) < 0 at t0");
      state.psi = sample_dark_pair(grid, spec);
    } else {
      if (!(c_n_at_t0.real() > 0))
        throw std::domain_error("init_state: bright profile requires Re(c_n) > 0 at t0");
      state.psi = bright_profile(spec, grid.xi, t0, 0.0);
      const double hwhm = kSechHalfArg / spec.kappa();
      const double clearance = 0.5 * grid.length - std::abs(spec.center_xi);
      if (clearance < 15.0 * hwhm)
        std::fprintf(stderr,
                     "warning: bright soliton clearance %.3g m is below 15 half widths "
                     "(%.3g m); periodic images may interact\n",
                     clearance, 15.0 * hwhm);
    }
  } else if (const auto* gauss = std::get_if<GaussianInit>(&profile)) {
    if (!(gauss->width > 0)) throw std::invalid_argument("init.gaussian: width must be > 0");
    for (std::size_t j = 0; j < grid.n; ++j) {
      const double u = (grid.xi[j] - gauss->center) / gauss->width;
      state.psi[j] = gauss->amplitude * std::exp(-0.5 * u * u);
    }
  } else if (std::get_if<ZeroInit>(&profile)) {
    // all samples stay zero
  } else if (const auto* file = std::get_if<FileInit>(&profile)) {
    state.psi = load_file_samples(file->path, grid.n);
  }

  if (mode == PropagationMode::Normalized) {
    const double scale = std::sqrt(0.5 * std::abs(c_n_at_t0));
    if (!(scale > 0))
      throw std::domain_error("init_state: normalized mode needs |c_n| > 0 at t0");
    for (auto& v : state.psi) v *= scale;
  }
  return state;
}

void step(EngineState& state, const CoefficientProvider& coeffs, double dt,
          SpectralWorkspace& ws) {
  if (dt == 0.0 || !std::isfinite(dt)) throw std::domain_error("step: dt must be finite and nonzero");
  if (ws.size() != state.grid.n) throw std::invalid_argument("step: workspace/grid mismatch");

  const double t = state.t;
  const StepCoefficients c_q1 = coeffs(t + 0.25 * dt);
  const StepCoefficients c_q3 = coeffs(t + 0.75 * dt);

  // First nonlinear half step.
  {
    const double tau = 0.5 * dt / c_q1.big_k;
    const double gain = state.mode == PropagationMode::Normalized
                            ? std::exp(c_q1.theta_dot * c_q1.pert * 0.5 * dt)
                            : 1.0;
    apply_nonlinear(state.psi, effective_nonlinear_coefficient(c_q1, state.mode), tau, gain);
  }

  // Full linear step with dtau = int dt/K by Simpson's rule; the symmetric
  // quadrature makes a -dt step the exact inverse.
  {
    const StepCoefficients ca = coeffs(t);
    const StepCoefficients cm = coeffs(t + 0.5 * dt);
    const StepCoefficients cb = coeffs(t + dt);
    const double dtau = dt / 6.0 * (1.0 / ca.big_k + 4.0 / cm.big_k + 1.0 / cb.big_k);
    const auto& mult = ws.dispersion_multiplier(state.grid.q, dtau);
    ws.forward(state.psi);
    for (std::size_t j = 0; j < state.psi.size(); ++j) state.psi[j] *= mult[j];
    ws.inverse(state.psi);
    state.t_prime += dtau;
  }

  // Second nonlinear half step.
  {
    const double tau = 0.5 * dt / c_q3.big_k;
    const double gain = state.mode == PropagationMode::Normalized
                            ? std::exp(c_q3.theta_dot * c_q3.pert * 0.5 * dt)
                            : 1.0;
    apply_nonlinear(state.psi, effective_nonlinear_coefficient(c_q3, state.mode), tau, gain);
  }

  state.t = t + dt;
}

namespace {

double wrap_distance(double dx, double length) {
  while (dx >= 0.5 * length) dx -= length;
  while (dx < -0.5 * length) dx += length;
  return dx;
}

struct PeakInfo {
  double amp = 0;
  double pos = 0;
  std::size_t index = 0;
};

// Parabolic vertex through |psi|^2 at the max sample and its neighbors.
PeakInfo interpolated_peak(const EngineState& state) {
  const auto& psi = state.psi;
  const std::size_t n = psi.size();
  std::size_t imax = 0;
  double pmax = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double p = std::norm(psi[j]);
    if (p > pmax) {
      pmax = p;
      imax = j;
    }
  }
  PeakInfo out;
  out.index = imax;
  if (pmax == 0) return out;
  const double pl = std::norm(psi[(imax + n - 1) % n]);
  const double pr = std::norm(psi[(imax + 1) % n]);
  const double denom = pl - 2.0 * pmax + pr;
  double shift = 0;
  double pv = pmax;
  if (denom < 0) {
    shift = 0.5 * (pl - pr) / denom;
    pv = pmax - 0.25 * (pl - pr) * shift;
  }
  out.amp = std::sqrt(std::max(pv, 0.0));
  out.pos = state.grid.xi[imax] + shift * state.grid.dxi;
  out.pos = wrap_distance(out.pos, state.grid.length);
  return out;
}

// Walk outward from the peak to the first |psi| = level crossings, linearly
// interpolated. Returns 0 if a crossing is never found.
double measured_fwhm(const EngineState& state, const PeakInfo& peak, double level) {
  const auto& psi = state.psi;
  const std::size_t n = psi.size();
  if (peak.amp == 0) return 0;
  double width = 0;
  for (int dir = -1; dir <= 1; dir += 2) {
    double prev = std::abs(psi[peak.index]);
    bool found = false;
    for (std::size_t k = 1; k < n; ++k) {
      const std::size_t j = (peak.index + n + static_cast<std::size_t>(dir) * k) % n;
      const double cur = std::abs(psi[j]);
      if (cur <= level && prev > level) {
        const double frac = (prev - level) / (prev - cur);
        const double xprev = state.grid.xi[(j + n - static_cast<std::size_t>(dir)) % n];
        double x = xprev + dir * frac * state.grid.dxi;
        width += std::abs(wrap_distance(x - peak.pos, state.grid.length));
        found = true;
        break;
      }
      prev = cur;
    }
    if (!found) return 0;
  }
  return width;
}

double golden_minimize(const std::function<double(double)>& f, double a, double b, int iters) {
  const double phi = 0.6180339887498949;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

// Normalized L2 misfit against amplitude-optimal a*profile(kappa).
double sech_misfit(const EngineState& state, double center, double kappa) {
  const auto& psi = state.psi;
  double ss = 0, sp = 0, pp = 0;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double d = wrap_distance(state.grid.xi[j] - center, state.grid.length);
    const double s = 1.0 / std::cosh(kappa * d);
    const double p = std::abs(psi[j]);
    ss += s * s;
    sp += s * p;
    pp += p * p;
  }
  if (pp == 0 || ss == 0) return 0;
  const double amp = sp / ss;
  const double res2 = std::max(pp - amp * sp, 0.0);
  return std::sqrt(res2 / pp);
}

struct DarkCenters {
  double c1 = 0, c2 = 0;
  bool ok = false;
};

DarkCenters dark_minima(const EngineState& state, double background) {
  const auto& psi = state.psi;
  const std::size_t n = psi.size();
  DarkCenters out;
  std::vector<std::pair<double, double>> minima;  // (|psi|, position)
  for (std::size_t j = 0; j < n; ++j) {
    const double a = std::abs(psi[j]);
    const double al = std::abs(psi[(j + n - 1) % n]);
    const double ar = std::abs(psi[(j + 1) % n]);
    if (a <= al && a < ar && a < 0.5 * background) {
      const double denom = al - 2.0 * a + ar;
      const double shift = denom > 0 ? 0.5 * (al - ar) / denom : 0.0;
      minima.emplace_back(a, state.grid.xi[j] + shift * state.grid.dxi);
    }
  }
  if (minima.size() < 2) return out;
  std::sort(minima.begin(), minima.end());  // two deepest notches
  out.c1 = minima[0].second;
  out.c2 = minima[1].second;
  if (out.c1 > out.c2) std::swap(out.c1, out.c2);
  out.ok = true;
  return out;
}

double tanh_pair_misfit(const EngineState& state, const DarkCenters& c, double kappa) {
  const auto& psi = state.psi;
  double ss = 0, sp = 0, pp = 0;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double x = state.grid.xi[j];
    const double d1 = wrap_distance(x - c.c1, state.grid.length);
    const double d2 = wrap_distance(x - c.c2, state.grid.length);
    const double s = std::abs(std::tanh(kappa * d1) * std::tanh(kappa * d2));
    const double p = std::abs(psi[j]);
    ss += s * s;
    sp += s * p;
    pp += p * p;
  }
  if (pp == 0 || ss == 0) return 0;
  const double amp = sp / ss;
  const double res2 = std::max(pp - amp * sp, 0.0);
  return std::sqrt(res2 / pp);
}

// Half width of the notch at |psi| = background/2, on both sides of a center.
double dark_notch_halfwidth(const EngineState& state, double center, double level) {
  const auto& psi = state.psi;
  const std::size_t n = psi.size();
  // nearest sample to center
  std::size_t i0 = 0;
  double best = 1e300;
  for (std::size_t j = 0; j < n; ++j) {
    const double d = std::abs(wrap_distance(state.grid.xi[j] - center, state.grid.length));
    if (d < best) {
      best = d;
      i0 = j;
    }
  }
  double total = 0;
  int count = 0;
  for (int dir = -1; dir <= 1; dir += 2) {
    double prev = std::abs(psi[i0]);
    for (std::size_t k = 1; k < n / 2; ++k) {
      const std::size_t j = (i0 + n + static_cast<std::size_t>(dir) * k) % n;
      const double cur = std::abs(psi[j]);
      if (cur >= level && prev < level) {
        const double frac = (level - prev) / (cur - prev);
        const double xprev = state.grid.xi[(j + n - static_cast<std::size_t>(dir)) % n];
        const double x = xprev + dir * frac * state.grid.dxi;
        total += std::abs(wrap_distance(x - center, state.grid.length));
        ++count;
        break;
      }
      prev = cur;
    }
  }
  return count == 2 ? 0.5 * total : 0.0;
}

double shape_error(const EngineState& state, cplx c_n, const PeakInfo& peak, double fwhm,
                   bool refined) {
  if (peak.amp == 0) return 0;
  const bool dark = c_n.real() < 0;
  if (!dark) {
    if (fwhm <= 0) return 1.0;
    const double kappa0 = 2.0 * kSechHalfArg / fwhm;
    if (!refined) return sech_misfit(state, peak.pos, kappa0);
    auto f = [&](double k) { return sech_misfit(state, peak.pos, k); };
    const double kappa = golden_minimize(f, 0.5 * kappa0, 2.0 * kappa0, 64);
    return sech_misfit(state, peak.pos, kappa);
  }
  const DarkCenters centers = dark_minima(state, peak.amp);
  if (!centers.ok) return 1.0;
  const double half = dark_notch_halfwidth(state, centers.c1, 0.5 * peak.amp);
  if (half <= 0) return 1.0;
  // |tanh| = 1/2 at atanh(1/2)
  const double kappa0 = 0.5493061443340549 / half;
  if (!refined) return tanh_pair_misfit(state, centers, kappa0);
  auto f = [&](double k) { return tanh_pair_misfit(state, centers, k); };
  const double kappa = golden_minimize(f, 0.5 * kappa0, 2.0 * kappa0, 64);
  return tanh_pair_misfit(state, centers, kappa);
}

}  // namespace

Diagnostics diagnostics(const EngineState& state, cplx c_n, SpectralWorkspace& ws,
                        bool refined) {
  Diagnostics d;
  const auto& psi = state.psi;
  const double dxi = state.grid.dxi;

  double sum2 = 0, sum4 = 0;
  for (const auto& v : psi) {
    const double p = std::norm(v);
    sum2 += p;
    sum4 += p * p;
  }
  d.norm = dxi * sum2;

  // Kinetic term via Parseval on the spectral derivative.
  std::vector<cplx> hat = psi;
  ws.forward(hat);
  double kinetic = 0;
  for (std::size_t j = 0; j < hat.size(); ++j)
    kinetic += state.grid.q[j] * state.grid.q[j] * std::norm(hat[j]);
  kinetic *= dxi / static_cast<double>(hat.size());
  d.hamiltonian = kinetic - 0.5 * c_n.real() * dxi * sum4;

  const PeakInfo peak = interpolated_peak(state);
  d.peak_amp = peak.amp;
  d.peak_pos = peak.pos;
  d.fwhm = measured_fwhm(state, peak, 0.5 * peak.amp);
  d.shape_err = shape_error(state, c_n, peak, d.fwhm, refined);
  return d;
}

void propagate_into(EngineState& state, const CoefficientProvider& coeffs, double t_final,
                    double dt, std::size_t snapshot_every, SpectralWorkspace& ws,
                    PropagationResult& result, std::size_t shape_stride) {
  if (!(t_final > state.t)) throw std::domain_error("propagate: t_final must exceed state.t");
  if (!(dt > 0)) throw std::domain_error("propagate: dt must be > 0");
  const auto n_steps = static_cast<std::size_t>(std::llround((t_final - state.t) / dt));
  if (n_steps == 0) throw std::domain_error("propagate: window shorter than one step");
  if (shape_stride == 0) shape_stride = 1;

  result.series.clear();
  result.snapshots.clear();
  result.series.reserve(n_steps + 1);

  // splitting accuracy guideline: largest spectral phase per step <= 0.1 rad
  {
    const double q_max = kPi / state.grid.dxi;
    const double phase = q_max * q_max * dt / coeffs(state.t).big_k;
    if (phase > 0.1)
      std::fprintf(stderr,
                   "warning: spectral phase per step q_max^2 dt/K = %.3g rad exceeds 0.1; "
                   "consider a smaller dt or coarser grid\n",
                   phase);
  }

  auto record = [&](std::size_t step_idx) {
    const cplx cn = coeffs(state.t).c_n;
    const cplx cn_eff = state.mode == PropagationMode::Normalized
                            ? (std::abs(cn) > 0 ? 2.0 * cn / std::abs(cn) : cplx(0, 0))
                            : cn;
    const bool refine = step_idx % shape_stride == 0 || step_idx == n_steps;
    Diagnostics d = diagnostics(state, cn_eff, ws, refine);
    if (!std::isfinite(d.norm) || !std::isfinite(d.peak_amp) || !std::isfinite(d.hamiltonian))
      throw IntegrationError(step_idx, state.t,
                             "propagate: non-finite field at step " + std::to_string(step_idx) +
                                 ", t = " + format_g17(state.t));
    if (!refine && !result.series.empty())
      d.shape_err = result.series.back().diag.shape_err;
    result.series.push_back({step_idx, state.t, state.t_prime, d});
  };

  auto snapshot = [&](std::size_t step_idx) {
    result.snapshots.push_back({step_idx, state.t, state.t_prime, state.psi});
  };

  record(0);
  snapshot(0);
  for (std::size_t k = 1; k <= n_steps; ++k) {
    step(state, coeffs, dt, ws);
    record(k);
    if ((snapshot_every > 0 && k % snapshot_every == 0) || k == n_steps) snapshot(k);
  }
}

PropagationResult propagate(EngineState& state, const CoefficientProvider& coeffs,
                            double t_final, double dt, std::size_t snapshot_every,
                            SpectralWorkspace& ws, std::size_t shape_stride) {
  PropagationResult result;
  propagate_into(state, coeffs, t_final, dt, snapshot_every, ws, result, shape_stride);
  return result;
}

double lab_frame_position(const ControlSchedule& schedule, const MediumParams& medium,
                          double t0, double t, double xi_peak) {
  if (t < t0) throw std::domain_error("lab_frame_position: t must be >= t0");
  if (t == t0) return xi_peak;
  const double G = medium.collective_coupling();
  auto vg = [&](double tau) {
    const double omega = schedule.omega(tau);
    const double h = std::hypot(omega, G);
    const double cos_t = omega / h;
    return medium.light_speed * cos_t * cos_t;
  };
  const double disp = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      vg, t0, t, 12, 1e-10);
  return xi_peak + disp;
}

}  // namespace dsp
