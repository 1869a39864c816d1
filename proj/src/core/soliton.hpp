#pragma once

#include <vector>

#include "core/medium.hpp"

namespace dsp {

enum class SolitonKind { Bright, Dark, PrintedForm };

std::string soliton_kind_name(SolitonKind kind);

// Analytic soliton family at fixed coefficients. The Bright/Dark kinds are
// self-consistent solutions of i K dPsi/dt + Psi_xx = -c_n |Psi|^2 Psi; the
// PrintedForm kind keeps the sqrt(2)-wider sech and doubled phase rate that
// are often printed in the literature, retained for comparison because it
// does not solve the same equation.
struct SolitonSpec {
  SolitonKind kind = SolitonKind::Bright;
  double amp_m = 0;      // peak (bright) or background (dark) amplitude M
  double center_xi = 0;  // m
  double t_ref = 0;      // s, reference time of the coefficients
  cplx c_n;              // nonlinear coefficient at t_ref (real part drives the shape)
  double big_k = 0;      // K at t_ref (s/m^2)

  // Spatial rate of the implemented profile (1/m):
  //   Bright:    sqrt(Re c_n / 2) * M
  //   Dark:      sqrt(|Re c_n| / 2) * M
  //   PrintedForm: sqrt(Re c_n) * M
  double kappa() const;
  void validate() const;
};

// Profile samples at normalized time t_prime = int_{t_ref}^t dtau / K.
// Bright:    M sech(kappa (xi - xi0)) e^{i kappa^2 t'}
// PrintedForm: M sech(kappa (xi - xi0)) e^{i Re(c_n) M^2 t'}
std::vector<cplx> bright_profile(const SolitonSpec& spec, const std::vector<double>& xi_grid,
                                 double t, double t_prime);

// Black soliton M tanh(kappa (xi - xi0)) e^{-2 i kappa^2 t'}.
std::vector<cplx> dark_profile(const SolitonSpec& spec, const std::vector<double>& xi_grid,
                               double t_prime);

// M = a0cos0 / (sqrt(|c_n|/2) cos(theta)).
double amplitude_law(double a0cos0, double cos_theta_t, cplx c_n_t);

struct WidthReport {
  double hwhm_xi = 0;   // m, amplitude half width at half maximum
  double fwhm_xi = 0;   // m
  double tau = 0;       // s, hwhm_xi / V_g
  double printed_dxi = 0; // m, printed closed-form width, kept for comparison
  double printed_tau = 0; // printed time-width formula (mixed units, see README)
};

WidthReport widths(const SolitonSpec& spec, const Coefficients& coeffs,
                   const MediumParams& medium, const ProbeSpec& probe);

// Width ratios under a coupling change: dxi_ratio = Omega(t)/Omega(0),
// tau_ratio = Omega(0)/Omega(t).
std::pair<double, double> scaling_laws(double omega_0, double omega_t);

}  // namespace dsp
