#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/medium.hpp"
#include "oracles.hpp"

using namespace dsp;

namespace {

Preset preset_c3() {
  Preset p = make_paper_ultraslow();
  p.medium.light_speed = 3.0e8;
  return p;
}

double rel(double a, double b) { return std::abs(a / b - 1.0); }

}  // namespace

TEST_CASE("mixing angle basics") {
  MediumParams m = make_paper_ultraslow().medium;
  // G = Omega gives theta = pi/4
  const double G = m.collective_coupling();
  CHECK(mixing_angle(m, G) == doctest::Approx(0.25 * kPi).epsilon(1e-14));

  // ultraslow preset: cos(theta) to 1e-10 relative
  const Coefficients c = coefficients_at(m, make_paper_ultraslow().probe,
                                         make_paper_ultraslow().control, 0.0);
  CHECK(rel(c.cos_t, oracle::kCosTheta) < 1e-10);
  CHECK(rel(c.tan_t, oracle::kTanTheta) < 1e-12);

  // strong coupling limit: photon-like polariton
  CHECK(mixing_angle(m, 1e6 * G) < 1.1e-6);
  CHECK_THROWS_AS(mixing_angle(m, 0.0), std::domain_error);
  CHECK_THROWS_AS(mixing_angle(m, -5.0), std::domain_error);
}

TEST_CASE("susceptibility closed forms") {
  const Preset p = preset_c3();

  SUBCASE("transparency point") {
    ProbeSpec probe = p.probe;
    probe.detuning = 0;
    const auto [chi1, chi3] = susceptibility(p.medium, probe, 1e8);
    CHECK(chi1 == cplx(0, 0));
    CHECK(chi3 == cplx(0, 0));
  }

  SUBCASE("ultraslow preset values") {
    const auto [chi1, chi3] = susceptibility(p.medium, p.probe, 1e8);
    CHECK(chi1.real() == doctest::Approx(oracle::kChi1).epsilon(1e-12));
    CHECK(chi1.imag() == 0.0);
    CHECK(rel(chi3.real(), oracle::kChi3Re) < 1e-12);
    CHECK(rel(chi3.imag(), oracle::kChi3Im) < 1e-12);
    // five-figure desk values
    CHECK(rel(chi3.real(), 4.8485e-2) < 1e-4);
    CHECK(rel(chi3.imag(), 4.897e-5) < 1e-3);
  }

  SUBCASE("detuning sign flip") {
    ProbeSpec probe = p.probe;
    probe.detuning = +1e7;
    const auto [chi1, chi3] = susceptibility(p.medium, probe, 1e8);
    CHECK(rel(chi1.real(), -oracle::kChi1) < 1e-12);
    CHECK(rel(chi3.real(), -oracle::kChi3Re) < 1e-12);
    CHECK(rel(chi3.imag(), oracle::kChi3Im) < 1e-12);  // imaginary part is even
  }

  SUBCASE("nonlinear resonance") {
    MediumParams m = p.medium;
    m.gamma_ab = 0;
    ProbeSpec probe = p.probe;
    probe.detuning = -1e7;
    CHECK_THROWS_AS(susceptibility(m, probe, 1e7), std::domain_error);
    // complex denominator is fine with gamma_ab > 0
    CHECK_NOTHROW(susceptibility(p.medium, probe, 1e7));
  }

  SUBCASE("odd in detuning at gamma_ab = 0") {
    MediumParams m = p.medium;
    m.gamma_ab = 0;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> logd(5.0, 7.9);
    for (int i = 0; i < 200; ++i) {
      ProbeSpec probe = p.probe;
      probe.detuning = std::pow(10.0, logd(rng));
      const auto [c1p, c3p] = susceptibility(m, probe, 1e8);
      probe.detuning = -probe.detuning;
      const auto [c1m, c3m] = susceptibility(m, probe, 1e8);
      CHECK(rel(c1p.real(), -c1m.real()) < 1e-12);
      CHECK(rel(c3p.real(), -c3m.real()) < 1e-12);
    }
  }
}

TEST_CASE("coefficients at the ultraslow preset, c = 3.0e8") {
  const Preset p = preset_c3();
  const Coefficients c = coefficients_at(p.medium, p.probe, p.control, 0.0);

  // frozen high-precision anchors
  CHECK(rel(c.v_g, oracle::kVg_c3) < 1e-12);
  CHECK(rel(c.beta2, oracle::kBeta2_c3) < 1e-12);
  CHECK(rel(c.eta.real(), oracle::kEtaRe_c3) < 1e-12);
  CHECK(rel(c.c_n.real(), oracle::kCnRe_c3) < 1e-12);
  CHECK(rel(c.c_n.imag(), oracle::kCnIm_c3) < 1e-12);
  CHECK(rel(c.big_k, oracle::kBigK_c3) < 1e-12);
  CHECK(rel(c.delta_loss, oracle::kDeltaLoss) < 1e-12);

  // five-figure desk values at 1e-4 relative
  CHECK(rel(c.v_g, 7.500e-2) < 1e-4);
  CHECK(rel(c.beta2, -2.6667e-5) < 1e-4);
  CHECK(rel(c.eta.real(), 3.2323e12) < 1e-4);
  CHECK(rel(c.c_n.real(), 808.08) < 1e-4);
  CHECK(rel(c.big_k, 8.8889e7) < 1e-4);
  CHECK(rel(c.delta_loss, 1.0101e-3) < 1e-4);

  CHECK(c.theta_dot == 0.0);  // constant schedule
}

TEST_CASE("coefficient invariants on random parameters") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> logG(10.0, 13.5), logOm(5.5, 9.0), logD(4.0, 7.5),
      logW(14.0, 16.0), sign(-1.0, 1.0);
  for (int i = 0; i < 400; ++i) {
    MediumParams m;
    m.g = 1.0;  // fold the collective coupling into atoms_n
    m.atoms_n = std::pow(std::pow(10.0, logG(rng)), 2);
    m.gamma_ab = (i % 3 == 0) ? 0.0 : 1e6;
    m.gamma_cb = m.gamma_ca = 1e3;
    m.omega0 = std::pow(10.0, logW(rng));
    m.light_speed = kSpeedOfLightSI;
    ProbeSpec probe;
    probe.a0cos0 = 0.1;
    probe.detuning = std::copysign(std::pow(10.0, logD(rng)), sign(rng));
    ControlSchedule sched;
    sched.omega_start = sched.omega_end = std::pow(10.0, logOm(rng));
    if (sched.omega_start * sched.omega_start == probe.detuning * probe.detuning) continue;

    const Coefficients c = coefficients_at(m, probe, sched, 0.0);
    CHECK(std::abs(c.cos_t * c.cos_t + c.sin_t * c.sin_t - 1.0) <= 1e-14);
    CHECK(std::abs(c.v_g * c.beta1 - 1.0) <= 1e-12);
    CHECK(rel(c.alpha, c.tan_t * c.tan_t) <= 1e-12);
    CHECK(c.beta2 <= 0.0);
    CHECK(c.delta_loss >= 0.0);
    CHECK(c.delta_loss <= 1.0);
    if (m.gamma_ab == 0.0) CHECK(std::abs(c.delta_loss) < 1e-15);

    // sign(Re c_n) = sign(-Delta (Omega^2 - Delta^2)) away from resonance
    const double om2 = sched.omega_start * sched.omega_start;
    const double s = -probe.detuning * (om2 - probe.detuning * probe.detuning);
    if (c.c_n.real() != 0.0) CHECK((c.c_n.real() > 0) == (s > 0));
  }
}

TEST_CASE("regime classification") {
  CHECK(classify_regime(-1e7, 1e8) == RegimeKind::Bright);
  CHECK(classify_regime(-1e7, 3e6) == RegimeKind::Dark);
  CHECK(classify_regime(+1e7, 1e8) == RegimeKind::Dark);
  CHECK(classify_regime(+1e7, 3e6) == RegimeKind::Bright);
  CHECK(classify_regime(0.0, 1e8) == RegimeKind::Linear);
  CHECK(classify_regime(1e7, 1e7) == RegimeKind::Singular);
  CHECK_THROWS_AS(classify_regime(1e7, 0.0), std::domain_error);

  // mirror property: flipping the detuning sign flips Bright <-> Dark
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logOm(6.0, 9.0), logD(4.0, 8.0);
  for (int i = 0; i < 300; ++i) {
    const double om = std::pow(10.0, logOm(rng));
    const double d = std::pow(10.0, logD(rng));
    if (om == d) continue;
    const RegimeKind plus = classify_regime(d, om);
    const RegimeKind minus = classify_regime(-d, om);
    CHECK(((plus == RegimeKind::Bright && minus == RegimeKind::Dark) ||
           (plus == RegimeKind::Dark && minus == RegimeKind::Bright)));
  }
}

TEST_CASE("classifier agrees with sign(Re c_n) at gamma_ab = 0") {
  MediumParams m = make_paper_ultraslow().medium;
  m.gamma_ab = 0;
  ProbeSpec probe = make_paper_ultraslow().probe;
  int cells = 0;
  for (int i = 0; i < 40; ++i) {
    ControlSchedule sched;
    sched.omega_start = sched.omega_end = 1e6 * std::pow(1e3, i / 39.0);
    for (int j = 0; j < 40; ++j) {
      probe.detuning = -1e8 + j * (2e8 / 39.0);
      if (probe.detuning == 0.0) continue;
      if (sched.omega_start * sched.omega_start == probe.detuning * probe.detuning) continue;
      const Coefficients c = coefficients_at(m, probe, sched, 0.0);
      if (c.c_n.real() == 0.0) continue;
      ++cells;
      CHECK((classify_regime(probe.detuning, sched.omega_start) == RegimeKind::Bright) ==
            (c.c_n.real() > 0));
    }
  }
  CHECK(cells > 1000);
}

TEST_CASE("assumption margins") {
  const Preset p = preset_c3();
  const auto checks = validate_assumptions(p.medium, p.probe, p.control, 0.0, 4.975e-3);
  REQUIRE(checks.size() == 4);
  CHECK(checks[0].margin == doctest::Approx(1e-5).epsilon(1e-12));  // gamma_cb/Omega
  CHECK(checks[0].pass);
  CHECK(checks[2].margin == doctest::Approx(1.0101010101010101e-3).epsilon(1e-12));
  CHECK(checks[2].pass);
  CHECK(checks[3].margin == doctest::Approx(9.900025e-9).epsilon(1e-9));
  CHECK(checks[3].pass);

  MediumParams m = p.medium;
  m.gamma_cb = 1e8;  // equal to Omega
  const auto bad = validate_assumptions(m, p.probe, p.control, 0.0, 4.975e-3);
  CHECK(bad[0].margin == doctest::Approx(1.0));
  CHECK_FALSE(bad[0].pass);
}

TEST_CASE("scaled coupling: halving Omega") {
  const Preset p = preset_c3();
  ControlSchedule half = p.control;
  half.omega_start = half.omega_end = 0.5e8;
  const Coefficients c1 = coefficients_at(p.medium, p.probe, p.control, 0.0);
  const Coefficients c2 = coefficients_at(p.medium, p.probe, half, 0.0);
  // Omega^2 << G^2 regime: cos scales linearly, V_g quadratically
  CHECK(rel(c2.cos_t / c1.cos_t, 0.5) < 1e-9);
  CHECK(rel(c2.v_g / c1.v_g, 0.25) < 1e-9);
}

TEST_CASE("control schedules") {
  SUBCASE("tanh is smooth and floored") {
    ControlSchedule s;
    s.kind = ScheduleKind::Tanh;
    s.omega_start = 1e8;
    s.omega_end = 0.8e8;
    s.t_center = 2.5e-3;
    s.t_ramp = 1e-3;
    s.validate();
    CHECK(s.omega(-1.0) == doctest::Approx(1e8).epsilon(1e-6));
    CHECK(s.omega(1.0) == doctest::Approx(0.8e8).epsilon(1e-6));
    CHECK(s.omega(s.t_center) == doctest::Approx(0.9e8).epsilon(1e-12));
    // derivative consistency by central differences
    for (double t : {1e-3, 2.2e-3, 2.5e-3, 3.1e-3}) {
      const double h = 1e-9;
      const double fd = (s.omega(t + h) - s.omega(t - h)) / (2 * h);
      CHECK(s.omega_dot(t) == doctest::Approx(fd).epsilon(1e-5));
    }
  }

  SUBCASE("linear ramp endpoints") {
    ControlSchedule s;
    s.kind = ScheduleKind::Linear;
    s.omega_start = 1e8;
    s.omega_end = 5e7;
    s.t_center = 5e-4;
    s.t_ramp = 2e-4;
    s.validate();
    CHECK(s.omega(0.0) == 1e8);
    CHECK(s.omega(1.0) == 5e7);
    CHECK(s.omega(s.t_center) == doctest::Approx(7.5e7).epsilon(1e-12));
    CHECK(s.omega_dot(0.0) == 0.0);
    CHECK(s.omega_dot(s.t_center) == doctest::Approx(-2.5e11).epsilon(1e-12));
  }

  SUBCASE("floor is a hard error") {
    ControlSchedule s;
    s.kind = ScheduleKind::Tanh;
    s.omega_start = 1e8;
    s.omega_end = 1.0;  // below 1e-6 * omega_start
    s.t_center = 0;
    s.t_ramp = 1e-3;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }

  SUBCASE("theta_dot against finite differences") {
    const Preset p = preset_c3();
    ControlSchedule s;
    s.kind = ScheduleKind::Tanh;
    s.omega_start = 1e8;
    s.omega_end = 0.8e8;
    s.t_center = 2.5e-3;
    s.t_ramp = 1e-3;
    const double t = 2.4e-3, h = 1e-7;
    const double th1 = mixing_angle(p.medium, s.omega(t - h));
    const double th2 = mixing_angle(p.medium, s.omega(t + h));
    const Coefficients c = coefficients_at(p.medium, p.probe, s, t);
    CHECK(c.theta_dot == doctest::Approx((th2 - th1) / (2 * h)).epsilon(1e-5));
  }
}

TEST_CASE("perturbation coefficient") {
  const Preset p = make_paper_ultraslow();
  const double exact = perturbation_exact(p.medium, p.probe, 1e8);
  CHECK(rel(exact, oracle::kPerturbationExact) < 1e-12);
  // ultraslow limit reduces to tan(theta) within Omega^2/(Omega^2-Delta^2)
  const double tan_t = perturbation_tan_theta(p.medium, 1e8);
  CHECK(rel(exact, tan_t * 1e16 / (1e16 - 1e14)) < 1e-4);

  // matches numerical differentiation of ln|c_n| along theta(Omega)
  const double G = p.medium.collective_coupling();
  auto ln_cn = [&](double omega) {
    ControlSchedule sched;
    sched.omega_start = sched.omega_end = omega;
    return std::log(std::abs(coefficients_at(p.medium, p.probe, sched, 0.0).c_n));
  };
  const double th0 = mixing_angle(p.medium, 1e8);
  const double dth = 1e-9;
  const double om_p = G / std::tan(th0 + dth);
  const double om_m = G / std::tan(th0 - dth);
  const double numeric = (ln_cn(om_p) - ln_cn(om_m)) / (4 * dth);
  CHECK(rel(exact, numeric) < 1e-5);
}

TEST_CASE("parameter validation") {
  MediumParams m = make_paper_ultraslow().medium;
  m.g = -1;
  CHECK_THROWS_WITH_AS(m.validate(), doctest::Contains("medium.g"), std::invalid_argument);
  ProbeSpec probe;
  probe.a0cos0 = 0;
  CHECK_THROWS_AS(probe.validate(), std::invalid_argument);
}
