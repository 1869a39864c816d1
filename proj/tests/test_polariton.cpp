#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/polariton.hpp"
#include "oracles.hpp"

using namespace dsp;

namespace {

FieldPair random_fields(std::mt19937_64& rng, std::size_t n, double k0, double k_c) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  FieldPair f;
  f.k0 = k0;
  f.k_c = k_c;
  f.z_grid.resize(n);
  f.epsilon.resize(n);
  f.rho_cb.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    f.z_grid[j] = 1e-5 * static_cast<double>(j);
    f.epsilon[j] = cplx(uni(rng), uni(rng));
    f.rho_cb[j] = 0.4 * cplx(uni(rng), uni(rng));
  }
  return f;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("rotation limits") {
  const double N = 1e13;
  std::mt19937_64 rng(3);
  FieldPair f = random_fields(rng, 64, 6.67e6, 6.67e6);  // copropagating: phase factor 1

  SUBCASE("theta = 0: pure photon") {
    const PolaritonPair pol = to_polaritons(f, 0.0, N);
    for (std::size_t j = 0; j < f.epsilon.size(); ++j) {
      CHECK(std::abs(pol.psi[j] - f.epsilon[j]) < 1e-15);
      CHECK(std::abs(pol.phi[j] - std::sqrt(N) * f.rho_cb[j]) < 1e-9 * std::sqrt(N));
    }
  }

  SUBCASE("theta = pi/2: pure spin wave") {
    const PolaritonPair pol = to_polaritons(f, 0.5 * kPi, N);
    for (std::size_t j = 0; j < f.epsilon.size(); ++j) {
      CHECK(std::abs(pol.psi[j] + std::sqrt(N) * f.rho_cb[j]) < 1e-9 * std::sqrt(N));
      CHECK(std::abs(pol.phi[j] - f.epsilon[j]) < 1e-9);
    }
  }

  SUBCASE("theta = pi/4 on a unit field") {
    FieldPair unit = f;
    for (auto& e : unit.epsilon) e = cplx(1, 0);
    for (auto& r : unit.rho_cb) r = cplx(0, 0);
    const PolaritonPair pol = to_polaritons(unit, 0.25 * kPi, N);
    for (std::size_t j = 0; j < unit.epsilon.size(); ++j) {
      CHECK(pol.psi[j].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
      CHECK(pol.phi[j].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    }
  }

  SUBCASE("grid mismatch") {
    FieldPair bad = f;
    bad.rho_cb.pop_back();
    CHECK_THROWS_AS(to_polaritons(bad, 0.3, N), std::invalid_argument);
  }
}

TEST_CASE("round trip is the identity") {
  const double N = 1e13;
  std::mt19937_64 rng(17);

  // weak atomic excitation, sqrt(N) rho ~ O(1): absolute machine precision
  for (double theta : {0.0, 0.2, 0.25 * kPi, 1.3, 0.5 * kPi}) {
    FieldPair f = random_fields(rng, 128, 6.67e6, 6.1e6);  // nontrivial phase factor
    for (auto& r : f.rho_cb) r /= std::sqrt(N);
    const PolaritonPair pol = to_polaritons(f, theta, N);
    const FieldPair back = from_polaritons(pol, theta, N, f.k0, f.k_c);
    CHECK(max_abs_diff(back.epsilon, f.epsilon) < 1e-14);
    CHECK(max_abs_diff(back.rho_cb, f.rho_cb) < 1e-14);
    const PolaritonPair again = to_polaritons(back, theta, N);
    CHECK(max_abs_diff(again.psi, pol.psi) < 1e-14);
    CHECK(max_abs_diff(again.phi, pol.phi) < 1e-14);
  }

  // order-unity coherences: idempotent relative to the atomic amplitude scale
  for (double theta : {0.1, 0.7, 1.4}) {
    FieldPair f = random_fields(rng, 128, 6.67e6, 6.1e6);
    const double scale = std::sqrt(N);
    const PolaritonPair pol = to_polaritons(f, theta, N);
    const FieldPair back = from_polaritons(pol, theta, N, f.k0, f.k_c);
    const PolaritonPair again = to_polaritons(back, theta, N);
    CHECK(max_abs_diff(back.epsilon, f.epsilon) < 1e-14 * scale);
    CHECK(max_abs_diff(again.psi, pol.psi) < 1e-14 * scale);
    CHECK(max_abs_diff(again.phi, pol.phi) < 1e-14 * scale);
  }
}

TEST_CASE("rotation unitarity") {
  const double N = 1e13;
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const double theta = 0.5 * kPi * (trial / 49.0);
    FieldPair f = random_fields(rng, 256, 6.67e6, 6.3e6);
    const PolaritonPair pol = to_polaritons(f, theta, N);
    double lhs = 0, rhs = 0;
    for (std::size_t j = 0; j < f.epsilon.size(); ++j) {
      lhs += std::norm(pol.psi[j]) + std::norm(pol.phi[j]);
      rhs += std::norm(f.epsilon[j]) + N * std::norm(f.rho_cb[j]);
    }
    CHECK(std::abs(lhs / rhs - 1.0) < 1e-12);
  }
}

TEST_CASE("adiabatic projection") {
  const double N = 1e13;
  std::vector<double> z(64);
  for (std::size_t j = 0; j < z.size(); ++j) z[j] = 1e-5 * static_cast<double>(j);
  std::vector<cplx> psi(z.size());
  for (std::size_t j = 0; j < z.size(); ++j)
    psi[j] = oracle::kM_c3 / std::cosh(0.1 * (static_cast<double>(j) - 32.0));

  SUBCASE("stopped light limit") {
    const FieldPair f = adiabatic_project(psi, 0.5 * kPi, N, 6.67e6, 6.67e6, z);
    for (const auto& e : f.epsilon) CHECK(std::abs(e) < 1e-11 * oracle::kM_c3);
  }

  SUBCASE("ultraslow preset peak mapping") {
    const double theta = std::acos(oracle::kCosTheta);
    const FieldPair f = adiabatic_project(psi, theta, N, 6.67e6, 6.67e6, z);
    double peak = 0;
    for (const auto& e : f.epsilon) peak = std::max(peak, std::abs(e));
    CHECK(peak == doctest::Approx(oracle::kEpsPeak_c3).epsilon(1e-9));
    CHECK(peak == doctest::Approx(4.975e-3).epsilon(1e-3));
  }

  SUBCASE("re-rotation gives a dark state") {
    const double theta = 1.2;
    const FieldPair f = adiabatic_project(psi, theta, N, 6.67e6, 6.2e6, z);
    const PolaritonPair pol = to_polaritons(f, theta, N);
    for (std::size_t j = 0; j < z.size(); ++j) {
      CHECK(std::abs(pol.phi[j]) < 1e-12 * oracle::kM_c3);
      CHECK(std::abs(pol.psi[j] - psi[j]) < 1e-12 * oracle::kM_c3);
    }
  }

  SUBCASE("eps = cos(theta) Psi for a pure dark state") {
    const double theta = 0.9;
    const FieldPair f = adiabatic_project(psi, theta, N, 6.67e6, 6.67e6, z);
    for (std::size_t j = 0; j < z.size(); ++j)
      CHECK(std::abs(f.epsilon[j] - std::cos(theta) * psi[j]) < 1e-14 * oracle::kM_c3);
  }
}

TEST_CASE("bright-polariton residual estimate") {
  const Preset p = make_paper_ultraslow();
  SUBCASE("preset value") {
    const double r = bsp_residual(p.medium, p.probe, 1e8, oracle::kEpsPeak_c3);
    CHECK(r == doctest::Approx(oracle::kBspResidual_c3).epsilon(1e-9));
    CHECK(r == doctest::Approx(1.98e-11).epsilon(0.01));
  }
  SUBCASE("zeros") {
    ProbeSpec probe = p.probe;
    probe.detuning = 0;
    CHECK(bsp_residual(p.medium, probe, 1e8, 4.975e-3) == 0.0);
    CHECK(bsp_residual(p.medium, p.probe, 1e8, 0.0) == 0.0);
  }
  SUBCASE("monotonicity") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> eps(1e-4, 1e-2), det(1e6, 5e7);
    for (int i = 0; i < 200; ++i) {
      ProbeSpec probe = p.probe;
      probe.detuning = det(rng);
      const double e1 = eps(rng), e2 = e1 * 1.5;
      CHECK(bsp_residual(p.medium, probe, 1e8, e2) >
            bsp_residual(p.medium, probe, 1e8, e1));
      ProbeSpec probe2 = probe;
      probe2.detuning = probe.detuning * 2.0;
      CHECK(bsp_residual(p.medium, probe2, 1e8, e1) >
            bsp_residual(p.medium, probe, 1e8, e1));
      CHECK(bsp_residual(p.medium, probe, 2e8, e1) <
            bsp_residual(p.medium, probe, 1e8, e1));
    }
  }
}

TEST_CASE("adiabatic parameter") {
  const Preset p = make_paper_ultraslow();
  CHECK(adiabaticity(p.medium, 2.7763917330893162e-3) ==
        doctest::Approx(oracle::kAdiabaticity_c3).epsilon(1e-12));
  // G T = 1
  MediumParams unit = p.medium;
  unit.g = 2.0;
  unit.atoms_n = 0.25;
  CHECK(adiabaticity(unit, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(adiabaticity(p.medium, 1e30) < 1e-41);
  CHECK_THROWS_AS(adiabaticity(p.medium, 0.0), std::domain_error);
  CHECK_THROWS_AS(adiabaticity(p.medium, -1.0), std::domain_error);
}
