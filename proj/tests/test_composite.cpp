#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinpulse/composite.hpp"

using namespace spinpulse;
using std::numbers::pi;

namespace {

ChainConfig cfg(int k = 2) {
  ChainConfig c;
  c.L = 3;
  c.w = 1e5;
  c.delta_omega = 1e4;
  c.J = 1.0;
  c.k = k;
  return c;
}

// Two-level walk through a composite pulse on the mixed-neighbor pair: main
// pulse at detuning +-Delta, then the resonant correcting pulse.  Returns the
// final (c_mixed_lower, c_mixed_upper) pair.
std::pair<cplx, cplx> composite_on_mixed_pair(const CompositeParams& p, bool kind11,
                                              double main_phase, double t0_main, cplx lo,
                                              cplx up) {
  const double tau_main = p.rho * pi / p.omega_main;
  const double delta = kind11 ? p.delta : -p.delta;
  auto [l1, u1] = two_level_evolution(delta, p.omega_main, main_phase, tau_main, t0_main, lo, up);
  const ChainConfig c = cfg(p.k);
  const PulseSpec corr = correcting_pulse_spec(
      kind11 ? CorrectionKind::after11 : CorrectionKind::after00, main_phase,
      t0_main + tau_main, 1, c, p);
  return two_level_evolution(0.0, corr.omega_rabi, corr.phi, corr.tau, corr.t0, l1, u1);
}

}  // namespace

TEST_CASE("single-pulse Rabi frequency obeys the 2*pi*k condition") {
  CHECK(rabi_for_pi_pulse(1, 2.0, 1.0) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(rabi_for_pi_pulse(2, 2.0, 1.0) == doctest::Approx(2.0 / std::sqrt(15.0)).epsilon(1e-15));
  CHECK(rabi_for_pi_pulse(2, 2.0, 1.0) == doctest::Approx(0.51639778).epsilon(1e-7));
  CHECK(rabi_for_pi_pulse(3, 2.0, 1e-9) < 1e-9);  // Omega -> 0 with rho
  CHECK_THROWS_AS(rabi_for_pi_pulse(0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(rabi_for_pi_pulse(2, 2.0, 1.5), std::invalid_argument);
}

TEST_CASE("composite parameters at k = 2, rho = 1 match the closed forms") {
  const CompositeParams p = composite_params(2, 1.0, 2.0);
  CHECK(p.theta == doctest::Approx(0.5 * pi * std::sqrt(15.0)).epsilon(1e-15));
  CHECK(p.theta == doctest::Approx(6.083668).epsilon(1e-6));
  CHECK(p.alpha == doctest::Approx(0.5 * pi * std::sqrt(4.75)).epsilon(1e-15));
  CHECK(p.f == doctest::Approx(0.88852332).epsilon(1e-7));
  CHECK(p.g == doctest::Approx(0.45883147).epsilon(1e-7));
  CHECK(p.f * p.f + p.g * p.g == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.omega_main == doctest::Approx(2.0 * p.omega_single).epsilon(1e-15));
  // beta is small and negative for k > 1; the rotation angle stays in (0, pi]
  CHECK(p.beta < 0.0);
  CHECK(p.beta > -0.2);
  CHECK(p.beta_star == doctest::Approx(p.beta + pi));
  CHECK(p.beta_star > 0.5 * pi);
  CHECK(p.beta_star <= pi);
}

TEST_CASE("f^2 + g^2 = 1 and gamma real across k and rho") {
  for (int k : {1, 2, 3, 4}) {
    for (double rho : {1.0, 0.75, 0.5, 0.25, 0.05}) {
      const CompositeParams p = composite_params(k, rho, 2.0);
      CHECK(p.f * p.f + p.g * p.g == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(p.gamma > 0.0);
      CHECK(std::isfinite(p.gamma));
      CHECK(p.beta <= 0.0);
      CHECK(p.beta_star > 0.0);
      CHECK(p.beta_star <= pi);
      CHECK(p.tau_corr > 0.0);
      CHECK(p.omega_corr > 0.0);
      if (rho == 1.0)
        CHECK(p.theta == doctest::Approx(0.5 * pi * std::sqrt(4.0 * k * k - 1.0)).epsilon(1e-14));
    }
  }
}

TEST_CASE("paper arctangent relations hold on the implemented branches") {
  for (int k : {1, 2, 3}) {
    for (double rho : {1.0, 0.5}) {
      const CompositeParams p = composite_params(k, rho, 2.0);
      const double tan_alpha = std::tan(p.alpha);
      CHECK(std::tan(p.Theta) == doctest::Approx(-p.f * tan_alpha).epsilon(1e-9));
      // the general-rho coefficient is theta/(2 alpha), not 2 theta/alpha
      CHECK(p.f == doctest::Approx(p.theta / (2.0 * p.alpha)).epsilon(1e-12));
      CHECK(std::tan(p.beta) ==
            doctest::Approx(-p.g * tan_alpha * std::cos(p.theta_corr)).epsilon(1e-9));
    }
  }
}

TEST_CASE("dual routes for the correcting-pulse Rabi frequency agree") {
  for (int k : {1, 2, 3}) {
    const CompositeParams p = composite_params(k, 1.0, 2.0);
    const double route1 = p.delta / std::sqrt(std::pow(pi * k / p.beta_star, 2) - 1.0);
    CHECK(p.omega_corr == doctest::Approx(route1).epsilon(1e-12));
    const double gamma2 = std::sqrt(std::pow(pi * k, 2) - p.beta_star * p.beta_star);
    CHECK(p.gamma == doctest::Approx(gamma2).epsilon(1e-12));
    // Omega_c ~ 2 Omega_1 in the beta* ~ pi approximation
    if (k >= 2) CHECK(p.omega_corr / (2.0 * p.omega_single) == doctest::Approx(1.0).epsilon(0.10));
  }
}

TEST_CASE("correcting pulse empties the unwanted state in both directions") {
  for (int k : {1, 2, 3}) {
    for (double rho : {1.0, 0.5, 0.37}) {
      const CompositeParams p = composite_params(k, rho, 2.0);
      for (bool kind11 : {true, false}) {
        for (double t0 : {0.0, 2.375}) {
          const double phase = 0.7;
          auto [lo, up] = composite_on_mixed_pair(p, kind11, phase, t0, cplx(1, 0), cplx(0, 0));
          CHECK(std::abs(up) < 1e-12);
          CHECK(std::abs(std::abs(lo) - 1.0) < 1e-12);
          // acquired phase pi -+ (theta/2 + Theta), independent of pulse phase and t0
          const double expected =
              kind11 ? pi - 0.5 * p.theta - p.Theta : pi + 0.5 * p.theta + p.Theta;
          CHECK(std::abs(wrap_angle(std::arg(lo) - expected)) < 1e-10);

          auto [lo2, up2] = composite_on_mixed_pair(p, kind11, phase, t0, cplx(0, 0), cplx(1, 0));
          CHECK(std::abs(lo2) < 1e-12);
          CHECK(std::abs(std::abs(up2) - 1.0) < 1e-12);
          const double expected_up =
              kind11 ? pi + 0.5 * p.theta + p.Theta : pi - 0.5 * p.theta - p.Theta;
          CHECK(std::abs(wrap_angle(std::arg(up2) - expected_up)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("correcting pulse phase formula and its 2*pi periodicity") {
  const ChainConfig c = cfg(1);  // sin(alpha) > 0 at k = 1: theta_corr == Theta
  const CompositeParams p = composite_params(1, 1.0, 2.0);
  const double tau_main = pi / p.omega_main;
  // main pulse at t0 = 0, so the correcting pulse starts at tau_main and the
  // zero-start specialization phi_c^{11} = -theta - Theta applies
  const PulseSpec c11 = correcting_pulse_spec(CorrectionKind::after11, 0.0, tau_main, 1, c, p);
  CHECK(std::abs(wrap_angle(c11.phi - (-p.theta - p.Theta))) < 1e-12);
  const PulseSpec c00 = correcting_pulse_spec(CorrectionKind::after00, 0.0, tau_main, 1, c, p);
  CHECK(std::abs(wrap_angle(c00.phi - (p.theta + p.Theta))) < 1e-12);
  CHECK(c11.nu == doctest::Approx(c.omega(1)));
  CHECK(c11.omega_rabi == doctest::Approx(p.omega_corr));
  CHECK(c11.tau == doctest::Approx(p.tau_corr));

  // shifting the start by exactly 2 pi / Delta shifts the phase by -2 pi:
  // identical action
  const double shift = 2.0 * pi / p.delta;
  const PulseSpec c11b =
      correcting_pulse_spec(CorrectionKind::after11, 0.3, tau_main + shift, 1, c, p);
  const PulseSpec c11a = correcting_pulse_spec(CorrectionKind::after11, 0.3, tau_main, 1, c, p);
  CHECK(std::abs(wrap_angle(c11b.phi - c11a.phi)) < 1e-10);

  CHECK_THROWS_AS(correcting_pulse_spec(CorrectionKind::after11, 0.0, 0.0, 0, c, p),
                  std::invalid_argument);
}
