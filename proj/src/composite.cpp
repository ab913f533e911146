#include "spinpulse/composite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinpulse {

double rabi_for_pi_pulse(int k, double delta, double rho) {
  if (k < 1) throw std::invalid_argument("rabi_for_pi_pulse: k must be >= 1");
  if (!(rho > 0.0) || rho > 1.0) throw std::invalid_argument("rabi_for_pi_pulse: rho in (0,1]");
  if (!(delta > 0.0)) throw std::invalid_argument("rabi_for_pi_pulse: delta must be > 0");
  return delta * rho / std::sqrt(4.0 * k * k - rho * rho);
}

CompositeParams composite_params(int k, double rho, double delta) {
  if (k < 1) throw std::invalid_argument("composite_params: k must be >= 1");
  if (!(rho > 0.0) || rho > 1.0) throw std::invalid_argument("composite_params: rho in (0,1]");
  if (!(delta > 0.0)) throw std::invalid_argument("composite_params: delta must be > 0");

  CompositeParams p;
  p.k = k;
  p.rho = rho;
  p.delta = delta;
  const double kk = static_cast<double>(k) * k;
  p.theta = std::numbers::pi * std::sqrt(kk - rho * rho / 4.0);
  p.alpha = 0.5 * std::numbers::pi * std::sqrt(kk + 3.0 * rho * rho / 4.0);
  p.f = std::sqrt((kk - rho * rho / 4.0) / (kk + 3.0 * rho * rho / 4.0));
  p.g = rho / std::sqrt(kk + 3.0 * rho * rho / 4.0);

  const double s = std::sin(p.alpha);
  const double c = std::cos(p.alpha);
  const double gs = p.g * s;
  const double r = std::sqrt(std::max(0.0, 1.0 - gs * gs));  // = sqrt(c^2 + f^2 s^2)

  // Amplitude surviving the main pulse on a mixed pair: R e^{-i(theta/2+Theta)}.
  p.Theta = std::atan2(-p.f * s, c);
  // Cancellation condition tan(beta) = -g tan(alpha) cos(Theta_corr), taken
  // on the branch with beta <= 0 so the rotation angle beta_star stays in
  // (pi/2, pi] and the pulse duration is positive.
  p.beta = -std::atan2(std::abs(gs), r);
  p.beta_star = p.beta + std::numbers::pi;
  p.theta_corr = wrap_angle(p.Theta + (s < 0.0 ? std::numbers::pi : 0.0));

  const double pik = std::numbers::pi * k;
  const double gamma_sq = pik * pik - p.beta_star * p.beta_star;
  if (!(gamma_sq >= 0.0))
    throw std::invalid_argument("composite_params: gamma is not real for these parameters");
  p.gamma = std::sqrt(gamma_sq);

  p.omega_single = rabi_for_pi_pulse(k, delta, rho);
  p.omega_main = 2.0 * p.omega_single;
  p.omega_corr = delta * p.beta_star / p.gamma;
  p.tau_corr = 2.0 * p.gamma / delta;
  return p;
}

PulseSpec correcting_pulse_spec(CorrectionKind kind, double main_phase, double t0_corr, int qubit,
                                const ChainConfig& config, const CompositeParams& params) {
  if (config.is_edge(qubit))
    throw std::invalid_argument("correcting_pulse_spec: edge qubits take single pulses only");
  PulseSpec pulse;
  pulse.nu = transition_frequency(config, qubit, NeighborContext::interior(1, 0));
  pulse.omega_rabi = params.omega_corr;
  pulse.tau = params.tau_corr;
  pulse.t0 = t0_corr;
  // Equivalent to the -theta + Phi - Delta*t0_main - Theta_corr form: the
  // main pulse starts at t0_corr - tau_main and Delta*tau_main = theta_rho,
  // so the theta term folds into the t0_corr product.
  const double d = params.delta;
  if (kind == CorrectionKind::after11)
    pulse.phi = wrap_angle(main_phase - d * t0_corr - params.theta_corr);
  else
    pulse.phi = wrap_angle(main_phase + d * t0_corr + params.theta_corr);
  return pulse;
}

}  // namespace spinpulse
