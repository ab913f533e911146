#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinpulse/compiler.hpp"

namespace spinpulse {

// One verified configuration: the bits of the relevant qubits before and
// after the sequence and the exact phase acquired.
struct ConfigResult {
  std::uint32_t bits_in = 0;
  std::uint32_t bits_out = 0;
  SymbolicPhase phase;
};

struct VerifyReport {
  bool permutation_ok = false;
  bool phases_equal = false;
  SymbolicPhase common_phase;           // meaningful when phases_equal
  std::vector<int> relevant_qubits;     // bit order of ConfigResult::bits_*
  std::vector<ConfigResult> rows;
  std::string detail;                   // witness / failure description

  bool pass() const { return permutation_ok && phases_equal; }
};

// Propagates every configuration of the relevant qubits through the pulse
// ledger, composing flips and phases exactly, and checks the result against
// the ideal gate.  Pulse phases may contain free symbols (names outside the
// ledger geometry set); phase equality is then decided by the witness rule:
// two configurations whose phase difference contains no free symbols yet is
// not an exact multiple of 2*pi can never be equalized by any phase choice.
// Sequences with partial rotations are rejected (not a basis permutation).
VerifyReport symbolic_verify(const std::vector<QPulse>& sequence, const IdealGate& ideal,
                             const ChainConfig& config);
VerifyReport symbolic_verify(const GatePlan& plan, const ChainConfig& config);

// Pulse-by-pulse phase trace of one initial configuration (full register
// bits).  Row n holds the state after pulse n, the phase acquired at pulse n
// and the running total.
struct TraceRow {
  std::string pulse;
  std::uint32_t state_after = 0;
  SymbolicPhase acquired;
  SymbolicPhase running;
};

std::vector<TraceRow> trace_sequence(const std::vector<QPulse>& sequence, std::uint32_t initial,
                                     const ChainConfig& config);

}  // namespace spinpulse
