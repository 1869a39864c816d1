#pragma once

#include <vector>

#include "core/medium.hpp"

namespace dsp {

// Probe envelope eps(z) and spin coherence rho_cb(z) on a shared grid.
struct FieldPair {
  std::vector<cplx> epsilon;
  std::vector<cplx> rho_cb;
  std::vector<double> z_grid;  // m
  double k0 = 0;               // 1/m
  double k_c = 0;              // 1/m
};

// Dark/bright polariton superpositions on the same grid:
//   Psi = cos(theta) eps - sin(theta) sqrt(N) rho_cb e^{i(k0-kc)z}
//   Phi = sin(theta) eps + cos(theta) sqrt(N) rho_cb e^{i(k0-kc)z}
struct PolaritonPair {
  std::vector<cplx> psi;
  std::vector<cplx> phi;
  std::vector<double> z_grid;
};

PolaritonPair to_polaritons(const FieldPair& fields, double theta, double atoms_n);

FieldPair from_polaritons(const PolaritonPair& pol, double theta, double atoms_n, double k0,
                          double k_c);

// Adiabatic reduction Phi ~ 0: eps = cos(theta) Psi and
// sqrt(N) rho_cb e^{i(k0-kc)z} = -sin(theta) Psi.
FieldPair adiabatic_project(const std::vector<cplx>& psi, double theta, double atoms_n,
                            double k0, double k_c, const std::vector<double>& z_grid);

// Leading-order estimate of |Phi| / |cos(theta) Psi|:
//   r = (|g Delta| / Omega^2) * (g |eps_peak| / Omega)^2.
// Assumes weak probe and low atomic excitation, where the two-photon
// coherence dominates: |rho_ca| ~ |g Delta eps / Omega^2| |rho_cb| << |rho_cb|.
double bsp_residual(const MediumParams& medium, const ProbeSpec& probe, double omega_rabi,
                    double eps_peak);

// Adiabatic parameter 1 / (g sqrt(N) T).
double adiabaticity(const MediumParams& medium, double characteristic_time);

}  // namespace dsp
