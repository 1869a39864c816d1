#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "core/grid.hpp"
#include "core/medium.hpp"
#include "core/soliton.hpp"

namespace dsp {

// Physical mode integrates i K(t) dPsi/dt + Psi_xx = -c_n(t) |Psi|^2 Psi
// directly. Normalized mode evolves Psi' = sqrt(|c_n|/2) Psi in t' = int dt/K
// with unit-scaled nonlinearity 2 c_n/|c_n| plus the explicit amplitude
// perturbation exp(theta_dot p(theta) dt); the two are related by an exactly
// invertible substitution and cross-validate each other.
enum class PropagationMode { Physical, Normalized };

enum class PerturbationModel { TanTheta, ExactLogCn };

struct StepCoefficients {
  double big_k = 0;     // K(t) (s/m^2)
  cplx c_n;             // nonlinear coefficient (1/m^2)
  double theta_dot = 0; // rad/s
  double pert = 0;      // p(theta), used only in Normalized mode
};

using CoefficientProvider = std::function<StepCoefficients(double t)>;

CoefficientProvider make_coefficient_provider(const MediumParams& medium,
                                              const ProbeSpec& probe,
                                              const ControlSchedule& schedule,
                                              PerturbationModel model);

struct EngineState {
  Grid1D grid;
  std::vector<cplx> psi;
  double t = 0;        // s
  double t_prime = 0;  // accumulated int dt/K (m^2)
  PropagationMode mode = PropagationMode::Physical;
};

struct IntegrationError : std::runtime_error {
  IntegrationError(std::size_t step, double time, const std::string& what_arg)
      : std::runtime_error(what_arg), step_index(step), t(time) {}
  std::size_t step_index = 0;
  double t = 0;
};

// Initial profiles. Dark solitons are installed as a well-separated black
// pair at -L/4 and +L/4 so the periodic phase winding totals zero.
struct SolitonInit { SolitonSpec spec; };
struct GaussianInit { double amplitude = 0; double width = 0; double center = 0; };
struct ZeroInit {};
struct FileInit { std::string path; };
using InitProfile = std::variant<SolitonInit, GaussianInit, ZeroInit, FileInit>;

EngineState init_state(const Grid1D& grid, const InitProfile& profile, PropagationMode mode,
                       double t0, cplx c_n_at_t0);

// One Strang step: half nonlinear, full linear (spectral), half nonlinear,
// with coefficients at substep midpoints. dt may be negative; stepping back
// with -dt exactly inverts a forward step.
void step(EngineState& state, const CoefficientProvider& coeffs, double dt,
          SpectralWorkspace& ws);

struct Diagnostics {
  double norm = 0;         // int |Psi|^2 dxi (m)
  double hamiltonian = 0;  // int (|Psi_x|^2 - Re(c_n)/2 |Psi|^4) dxi (1/m)
  double peak_amp = 0;
  double peak_pos = 0;     // m
  double fwhm = 0;         // m, amplitude full width at half maximum
  double shape_err = 0;    // normalized L2 residual vs best-fit sech or tanh pair
};

// refined=true polishes the fitted width to machine precision; the cheap
// variant reuses the measured FWHM as the fit width.
Diagnostics diagnostics(const EngineState& state, cplx c_n, SpectralWorkspace& ws,
                        bool refined = true);

struct DiagRecord {
  std::size_t step = 0;
  double t = 0;
  double t_prime = 0;
  Diagnostics diag;
};

struct Snapshot {
  std::size_t step = 0;
  double t = 0;
  double t_prime = 0;
  std::vector<cplx> psi;
};

struct PropagationResult {
  std::vector<DiagRecord> series;
  std::vector<Snapshot> snapshots;
};

// Fixed-step propagation to t_final. Diagnostics are recorded every step
// (shape_err is refreshed every shape_stride steps and carried in between);
// snapshots every snapshot_every steps (0 = endpoints only). NaN/overflow is
// checked every step and aborts with the offending step index; `out` then
// holds everything recorded before the failure.
void propagate_into(EngineState& state, const CoefficientProvider& coeffs, double t_final,
                    double dt, std::size_t snapshot_every, SpectralWorkspace& ws,
                    PropagationResult& out, std::size_t shape_stride = 100);

PropagationResult propagate(EngineState& state, const CoefficientProvider& coeffs,
                            double t_final, double dt, std::size_t snapshot_every,
                            SpectralWorkspace& ws, std::size_t shape_stride = 100);

// Lab-frame position z = xi_peak + int_{t0}^{t} V_g(tau) dtau, adaptive
// quadrature at 1e-10 relative tolerance.
double lab_frame_position(const ControlSchedule& schedule, const MediumParams& medium,
                          double t0, double t, double xi_peak);

}  // namespace dsp
