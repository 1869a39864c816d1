#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace dsp {

using cplx = std::complex<double>;

inline constexpr double kSpeedOfLightSI = 2.99792458e8;  // m/s
inline constexpr double kPi = 3.14159265358979323846;
// ln(2+sqrt(3)): |x| where sech(x) = 1/2, so hwhm = kSechHalfArg / kappa.
inline constexpr double kSechHalfArg = 1.3169578969248167086;

// Atomic constants defining the EIT medium. Immutable after construction.
struct MediumParams {
  double g = 0;         // single-atom coupling rate (1/s)
  double atoms_n = 0;   // effective atom number in the quantum volume
  double gamma_ab = 0;  // transverse decay rates (1/s)
  double gamma_cb = 0;
  double gamma_ca = 0;
  double omega0 = 0;    // probe carrier angular frequency (1/s)
  double light_speed = kSpeedOfLightSI;  // m/s

  // Collective coupling G = g*sqrt(N).
  double collective_coupling() const;
  void validate() const;  // throws std::invalid_argument naming the field
};

struct ProbeSpec {
  double detuning = 0;  // one-photon detuning Delta (1/s), signed
  double a0cos0 = 0;    // initial amplitude product A0*cos(theta(0))
  std::optional<double> k_c;  // coupling wave vector along z (1/m); default k0

  double effective_kc(double k0) const { return k_c.value_or(k0); }
  void validate() const;
};

enum class ScheduleKind { Constant, Linear, Tanh };

// Coupling Rabi frequency Omega(t) with analytic derivative. Omega is floored
// at 1e-6 * omega_start; K and 1/V_g diverge as Omega -> 0, so schedules that
// request less are rejected outright.
struct ControlSchedule {
  ScheduleKind kind = ScheduleKind::Constant;
  double omega_start = 0;  // 1/s
  double omega_end = 0;    // 1/s (ignored for Constant)
  double t_center = 0;     // s
  double t_ramp = 0;       // s

  double floor() const { return 1e-6 * omega_start; }
  double omega(double t) const;
  double omega_dot(double t) const;
  void validate() const;
};

ScheduleKind schedule_kind_from_name(const std::string& name);
std::string schedule_kind_name(ScheduleKind kind);

// Medium-derived scalars at one instant.
struct Coefficients {
  double omega_rabi = 0;  // Omega(t) actually used (1/s)
  double theta = 0;       // mixing angle (rad)
  double cos_t = 0, sin_t = 0, tan_t = 0;
  double alpha = 0;   // group index g^2 N / Omega^2
  double v_g = 0;     // group velocity c*cos^2(theta) (m/s)
  double beta1 = 0;   // 1/V_g (s/m)
  double beta2 = 0;   // group-velocity dispersion -tan^4(theta)/(omega0 c) (s^2/m)
  double k0 = 0;      // omega0/c (1/m)
  cplx chi1;          // linear susceptibility
  cplx chi3;          // third-order susceptibility (per |eps|^2)
  cplx eta;           // Kerr coefficient 3 omega0^2 chi3 / (2 c^2) (1/m^2)
  cplx c_n;           // nonlinear coefficient eta cot^2 csc^2 (1/m^2)
  double big_k = 0;   // k0/(V_g sin^4 theta) (s/m^2)
  double delta_loss = 0;  // Im(c_n)/|c_n|
  double theta_dot = 0;   // dtheta/dt (rad/s)
};

enum class RegimeKind { Bright, Dark, Linear, Singular };

std::string regime_name(RegimeKind kind);

double mixing_angle(const MediumParams& medium, double omega_rabi);

// chi1 = -2 g^2 N Delta / (Omega^2 omega0)
// chi3 = -6 g^4 N Delta / (Omega^2 (Omega^2 - Delta^2 + i gamma_ab Delta) omega0)
std::pair<cplx, cplx> susceptibility(const MediumParams& medium, const ProbeSpec& probe,
                                     double omega_rabi);

Coefficients coefficients_at(const MediumParams& medium, const ProbeSpec& probe,
                             const ControlSchedule& schedule, double t);

RegimeKind classify_regime(double detuning, double omega_rabi);
RegimeKind classify_regime(const ProbeSpec& probe, double omega_rabi);

struct AssumptionCheck {
  std::string name;
  double margin = 0;     // dimensionless ratio; small is good
  double threshold = 0;  // pass iff margin <= threshold
  bool pass = false;
};

std::vector<AssumptionCheck> validate_assumptions(const MediumParams& medium,
                                                  const ProbeSpec& probe,
                                                  const ControlSchedule& schedule, double t,
                                                  double peak_field, double threshold = 0.1);

// Amplitude response of the normalized field to a slow change of theta,
// d ln sqrt(|c_n|) / dtheta. The ultraslow-light limit of the exact form is
// tan(theta); both variants are selectable in the engine.
double perturbation_exact(const MediumParams& medium, const ProbeSpec& probe, double omega_rabi);
double perturbation_tan_theta(const MediumParams& medium, double omega_rabi);

struct Preset {
  MediumParams medium;
  ProbeSpec probe;
  ControlSchedule control;
};

// Named preset "paper-ultraslow": ultraslow-light parameter set
// (g = 2.0e6, N = 1.0e13, Omega = 1.0e8, Delta = -1.0e7, omega0 = 2.0e15).
// g and N are stored as ground truth; G = g*sqrt(N) = 6.3246e12 is derived.
Preset make_paper_ultraslow();

bool is_known_preset(const std::string& name);

}  // namespace dsp
