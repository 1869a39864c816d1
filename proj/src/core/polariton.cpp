#include "core/polariton.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dsp {

namespace {

void require_matched(std::size_t a, std::size_t b, std::size_t g, const char* who) {
  if (a != b || a != g)
    throw std::invalid_argument(std::string(who) + ": field arrays must match the grid length");
}

void require_angle(double theta, const char* who) {
  if (!(theta >= 0.0 && theta <= 0.5 * kPi + 1e-12))
    throw std::domain_error(std::string(who) + ": theta must lie in [0, pi/2]");
}

}  // namespace

PolaritonPair to_polaritons(const FieldPair& fields, double theta, double atoms_n) {
  require_matched(fields.epsilon.size(), fields.rho_cb.size(), fields.z_grid.size(),
                  "to_polaritons");
  require_angle(theta, "to_polaritons");
  const double c = std::cos(theta), s = std::sin(theta);
  const double rootN = std::sqrt(atoms_n);
  const double dk = fields.k0 - fields.k_c;

  bool coherence_bound_ok = true;
  PolaritonPair out;
  out.z_grid = fields.z_grid;
  out.psi.resize(fields.epsilon.size());
  out.phi.resize(fields.epsilon.size());
  for (std::size_t i = 0; i < fields.epsilon.size(); ++i) {
    if (std::abs(fields.rho_cb[i]) > 1.0 + 1e-12) coherence_bound_ok = false;
    const cplx rho_t = fields.rho_cb[i] * std::polar(1.0, dk * fields.z_grid[i]);
    const cplx atomic = rootN * rho_t;
    out.psi[i] = c * fields.epsilon[i] - s * atomic;
    out.phi[i] = s * fields.epsilon[i] + c * atomic;
  }
  if (!coherence_bound_ok)
    std::fprintf(stderr, "warning: |rho_cb| > 1 somewhere; density-matrix bound violated\n");
  return out;
}

FieldPair from_polaritons(const PolaritonPair& pol, double theta, double atoms_n, double k0,
                          double k_c) {
  require_matched(pol.psi.size(), pol.phi.size(), pol.z_grid.size(), "from_polaritons");
  require_angle(theta, "from_polaritons");
  const double c = std::cos(theta), s = std::sin(theta);
  const double rootN = std::sqrt(atoms_n);
  const double dk = k0 - k_c;

  FieldPair out;
  out.z_grid = pol.z_grid;
  out.k0 = k0;
  out.k_c = k_c;
  out.epsilon.resize(pol.psi.size());
  out.rho_cb.resize(pol.psi.size());
  for (std::size_t i = 0; i < pol.psi.size(); ++i) {
    out.epsilon[i] = c * pol.psi[i] + s * pol.phi[i];
    const cplx rho_t = (-s * pol.psi[i] + c * pol.phi[i]) / rootN;
    out.rho_cb[i] = rho_t * std::polar(1.0, -dk * pol.z_grid[i]);
  }
  return out;
}

FieldPair adiabatic_project(const std::vector<cplx>& psi, double theta, double atoms_n,
                            double k0, double k_c, const std::vector<double>& z_grid) {
  if (psi.size() != z_grid.size())
    throw std::invalid_argument("adiabatic_project: psi must match the grid length");
  require_angle(theta, "adiabatic_project");
  const double c = std::cos(theta), s = std::sin(theta);
  const double rootN = std::sqrt(atoms_n);
  const double dk = k0 - k_c;

  FieldPair out;
  out.z_grid = z_grid;
  out.k0 = k0;
  out.k_c = k_c;
  out.epsilon.resize(psi.size());
  out.rho_cb.resize(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    out.epsilon[i] = c * psi[i];
    out.rho_cb[i] = -s * psi[i] * std::polar(1.0, -dk * z_grid[i]) / rootN;
  }
  return out;
}

double bsp_residual(const MediumParams& medium, const ProbeSpec& probe, double omega_rabi,
                    double eps_peak) {
  if (!(omega_rabi > 0))
    throw std::domain_error("bsp_residual: Rabi frequency must be > 0");
  const double drive = medium.g * std::abs(eps_peak) / omega_rabi;
  return std::abs(medium.g * probe.detuning) / (omega_rabi * omega_rabi) * drive * drive;
}

double adiabaticity(const MediumParams& medium, double characteristic_time) {
  if (!(characteristic_time > 0))
    throw std::domain_error("adiabaticity: characteristic time must be > 0");
  return 1.0 / (medium.collective_coupling() * characteristic_time);
}

}  // namespace dsp
