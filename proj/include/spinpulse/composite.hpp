#pragma once

#include "spinpulse/chain.hpp"
#include "spinpulse/dynamics.hpp"

namespace spinpulse {

// All derived quantities of the probability-corrected composite pulse for a
// rotation fraction rho in (0, 1] and suppression integer k.  delta is the
// near-resonant detuning 2J.
//
// Branches: Theta is fixed so that the amplitude left on a mixed-neighbor
// state after the main pulse is R e^{-i(theta/2 + Theta)} with R > 0; beta is
// the small non-positive solution of the cancellation condition, so
// beta_star = beta + pi lies in (pi/2, pi] and gamma is always real.  The
// correcting-pulse phase needs Theta shifted by pi when sin(alpha) < 0; that
// variant is kept separately as theta_corr.
struct CompositeParams {
  int k = 1;
  double rho = 1.0;
  double delta = 2.0;         // = 2J
  double theta = 0.0;         // theta_rho = pi sqrt(k^2 - rho^2/4)
  double alpha = 0.0;         // alpha_rho = (pi/2) sqrt(k^2 + 3 rho^2/4)
  double f = 0.0;             // detuning/lambda of the main pulse
  double g = 0.0;             // Rabi/lambda of the main pulse; f^2 + g^2 = 1
  double Theta = 0.0;         // ledger symbol Theta_rho
  double beta = 0.0;          // in (-pi/2, 0]
  double beta_star = 0.0;     // beta + pi, rotation angle of the correcting pulse
  double gamma = 0.0;         // gamma_rho = sqrt((pi k)^2 - beta_star^2)
  double omega_single = 0.0;  // Omega_rho = delta*rho/sqrt(4k^2 - rho^2)
  double omega_main = 0.0;    // Omega_{2,rho} = 2 Omega_rho
  double omega_corr = 0.0;    // Omega_{c,rho} = delta*beta_star/gamma
  double tau_corr = 0.0;      // tau_{c,rho} = 2 gamma / delta
  double theta_corr = 0.0;    // Theta branch used in the correcting-pulse phase
};

// Rabi frequency of the single pi (or rho*pi) pulse satisfying the 2*pi*k
// condition at detuning delta: Omega_rho = delta*rho / sqrt(4k^2 - rho^2).
double rabi_for_pi_pulse(int k, double delta, double rho);

CompositeParams composite_params(int k, double rho, double delta);

// The correcting pulse that follows the main pulse of a composite Q^{00} or
// Q^{11} pulse.  `kind` names the main pulse's frequency class (00 or 11),
// `main_phase` its phase, `t0_corr` the correcting pulse's own start time.
// The correcting pulse must directly abut its main pulse: its phase depends
// on where in the timeline the pair sits.
enum class CorrectionKind { after00, after11 };

PulseSpec correcting_pulse_spec(CorrectionKind kind, double main_phase, double t0_corr, int qubit,
                                const ChainConfig& config, const CompositeParams& params);

}  // namespace spinpulse
