#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spinpulse/chain.hpp"

namespace spinpulse {

using cplx = std::complex<double>;

// One rectangular rf pulse.  Frequencies in units of J, times in 1/J,
// phase in radians.
struct PulseSpec {
  double nu = 0.0;          // carrier frequency
  double omega_rabi = 0.0;  // Rabi frequency
  double phi = 0.0;         // phase constant
  double tau = 0.0;         // duration
  double t0 = 0.0;          // start time

  void validate() const;
};

// Interaction-picture amplitudes C_p(t) of the 2^L register plus the current
// time.  States are plain values; copying is cheap enough at the sizes the
// protocols use.
struct QuantumState {
  std::vector<cplx> amplitudes;
  double time = 0.0;

  static QuantumState basis(int L, std::uint32_t index, double time = 0.0);
  int num_qubits() const;
  double norm() const;

  void save(const std::string& path) const;  // (index, re, im) records
  static QuantumState load(const std::string& path);
};

// Closed-form solution of the driven two-level problem for one rectangular
// pulse, for an arbitrary initial amplitude pair.  `delta` is the detuning
// E_upper - E_lower - nu.  Returns (c_lower, c_upper) at t0 + tau.  This is
// the independent oracle the full propagator is checked against.
std::pair<cplx, cplx> two_level_evolution(double delta, double omega_rabi, double phi, double tau,
                                          double t0, cplx c_lower, cplx c_upper);

// Exact evolution of the full register through one pulse: lab frame ->
// rotating frame -> eigendecomposition of the static rotating-frame
// Hamiltonian -> frames inverted at t0 + tau.  No resonance approximation.
QuantumState apply_pulse(const QuantumState& state, const ChainConfig& config,
                         const PulseSpec& pulse);

struct StateComparison {
  double fidelity = 0.0;       // |<a|b>|^2
  double global_phase = 0.0;   // phase of a relative to b
  double max_phase_dev = 0.0;  // max over components with |b_j|^2 > 1e-12
  double max_prob_dev = 0.0;
};

StateComparison compare_states(const QuantumState& a, const QuantumState& b);

// Reduce an angle to (-pi, pi].
double wrap_angle(double x);

// Caches the eigendecomposition of the rotating-frame Hamiltonian per
// (nu, omega_rabi), so long pulse programs reuse the handful of distinct
// carriers they are built from.
class Propagator {
 public:
  explicit Propagator(const ChainConfig& config);
  ~Propagator();
  Propagator(Propagator&&) noexcept;
  Propagator& operator=(Propagator&&) noexcept;

  const ChainConfig& config() const { return config_; }
  QuantumState apply(const QuantumState& state, const PulseSpec& pulse);

 private:
  ChainConfig config_;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace spinpulse
