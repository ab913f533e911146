#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinpulse/compiler.hpp"
#include "spinpulse/program.hpp"

namespace spinpulse {

// Error metrics of one protocol run against the ideal gate action, in the
// interaction picture.  Phases compare the simulated amplitude of basis
// state j against its ideal counterpart; Phi is the amplitude-weighted
// common phase arg(sum_j conj(ideal_j) simulated_j).
struct ErrorReport {
  int L = 0;
  double delta_omega = 0.0;
  int k = 0;
  std::uint64_t seed = 0;
  std::string gate;

  std::vector<double> per_state_phase_dev;  // phi_j - Phi, wrapped
  double max_phase_error = 0.0;             // max_j |phi_j - Phi|
  double phase_spread = 0.0;                // max_j(phi_j-Phi) - min_j(phi_j-Phi)
  std::vector<double> ideal_probs;          // |B_j|^2 of the ideal reference
  std::vector<double> sim_probs;            // |B'_j|^2 of the simulated state
  std::vector<double> prob_errors;          // P_j = ||B_j|^2 - |B'_j|^2|
  std::vector<double> relative_prob_errors; // P_j / |B_j|^2 (-1 when undefined)
  std::vector<double> phase_error_series;   // sampled after each elementary gate
  double mu = 0.0;                          // Omega_1 / (2 delta_omega)
  int q_pulse_count = 0;
  double norm_drift = 0.0;                  // | ||simulated|| - 1 |

  void save_text(const std::string& path) const;
  void save_json(const std::string& path) const;
  void save_csv(const std::string& path) const;  // per-state rows
};

// All 2^L amplitudes real, strictly positive, normalized; deterministic per
// seed (SplitMix64 generator, documented in the README).
QuantumState random_superposition(int L, std::uint64_t seed);

ErrorReport error_metrics(const QuantumState& simulated, const QuantumState& ideal_reference);

// Compiles the gate, initializes the seeded random superposition, simulates
// pulse by pulse, and samples the phase error after each completed
// elementary gate.
ErrorReport run_protocol_experiment(const ChainConfig& config, const IdealGate& gate,
                                    std::uint64_t seed);

struct SweepConfig {
  std::vector<int> L_values;
  std::vector<double> delta_omega_values;
  std::vector<int> k_values;
  std::vector<std::uint64_t> seeds;
  std::string gate_descriptor;  // may use "end" for the last qubit
  ChainConfig base;

  void validate() const;
};

struct SweepResult {
  std::vector<ErrorReport> reports;  // grid order: L, delta_omega, k, seed
  std::vector<std::string> errors;   // one entry per failed grid point

  void save_states_csv(const std::string& path) const;
  void save_summary_csv(const std::string& path) const;
  void save_series_csv(const std::string& path) const;
};

SweepResult sweep(const SweepConfig& cfg);

}  // namespace spinpulse
