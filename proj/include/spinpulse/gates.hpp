#pragma once

#include <cstdint>
#include <string>

#include "spinpulse/dynamics.hpp"

namespace spinpulse {

// Ideal (error-free) gate semantics.  Not/CN/Swap/LongRangeCN are basis
// permutations; Rotation mixes each |...0_j...>, |...1_j...> pair as
//   |0> -> cos(rho pi/2)|0> + i e^{+i phi} sin(rho pi/2)|1>
//   |1> -> cos(rho pi/2)|1> + i e^{-i phi} sin(rho pi/2)|0>.
struct IdealGate {
  enum class Kind { Identity, Not, CN, Swap, Rotation, LongRangeCN };

  Kind kind = Kind::Identity;
  int a = 0;  // control (CN) or target qubit
  int b = 0;  // target (CN) / second qubit (Swap)
  double rho = 1.0;
  double phi = 0.0;

  static IdealGate identity() { return IdealGate{}; }
  static IdealGate not_gate(int i) { return IdealGate{Kind::Not, i, i}; }
  static IdealGate cn(int control, int target) { return IdealGate{Kind::CN, control, target}; }
  static IdealGate swap(int i) { return IdealGate{Kind::Swap, i, i + 1}; }
  static IdealGate rotation(int j, double rho, double phi) {
    return IdealGate{Kind::Rotation, j, j, rho, phi};
  }
  static IdealGate long_range_cn(int control, int target) {
    return IdealGate{Kind::LongRangeCN, control, target};
  }

  bool is_permutation() const { return kind != Kind::Rotation; }

  // Basis-state image under the permutation kinds.
  std::uint32_t apply_bits(std::uint32_t index) const;

  std::string str() const;

  // Parses the CLI gate descriptor grammar:
  //   not <i> | cn <a> <b> | swap <i> | rot <j> <rho> <phi>
  // "end" may stand for the last qubit index.  CN picks the long-range form
  // automatically when |a-b| > 1.
  static IdealGate parse(const std::string& descriptor, int L);
};

// Applies the ideal gate to interaction-picture amplitudes (no overall-phase
// factor; overall phases of the compiled protocols are tracked separately).
QuantumState ideal_apply(const IdealGate& gate, const QuantumState& state);

}  // namespace spinpulse
