#pragma once

#include <vector>

#include "spinpulse/chain.hpp"
#include "spinpulse/gates.hpp"
#include "spinpulse/ledger.hpp"
#include "spinpulse/program.hpp"

namespace spinpulse {

// One elementary phase-corrected gate inside a plan: a contiguous run of Q
// pulses plus its ideal action and expected overall phase.
struct ElementaryGate {
  IdealGate ideal;
  int first_qpulse = 0;
  int qpulse_count = 0;
  SymbolicPhase overall_phase;
};

// A compiled logical gate before lowering to timed pulses.  extra_symbols
// carries numeric values for non-geometry symbols in the pulse phases (the
// rotation argument "phi").
struct GatePlan {
  std::vector<QPulse> qpulses;
  std::vector<ElementaryGate> gates;
  IdealGate ideal;
  SymbolicPhase overall_phase;
  SymbolTable extra_symbols;
};

GatePlan compile_not(int i, const ChainConfig& config);
GatePlan compile_cn(int a, int b, const ChainConfig& config);
GatePlan compile_swap(int i, const ChainConfig& config);
GatePlan compile_rotation(int j, double rho, double phi, const ChainConfig& config);
GatePlan compile_long_range_cn(int a, int b, const ChainConfig& config);
GatePlan compile_gate(const IdealGate& gate, const ChainConfig& config);

// Lowers one Q pulse starting at t_start: one physical pulse for classes
// 10/e0/e1, main + correcting pulse for 00/11.
PulseProgram compile_q_pulse(int i, PulseClass cls, double phi, double rho, double t_start,
                             const ChainConfig& config);

// Lowers a whole plan to a time-contiguous program starting at t_start.
PulseProgram lower(const GatePlan& plan, const ChainConfig& config, double t_start = 0.0);

// Numeric values of the ledger symbols for this config (and optional rho).
SymbolTable protocol_symbols(const ChainConfig& config, double rho = 1.0);

}  // namespace spinpulse
