#pragma once

#include <optional>
#include <string>

#include "spinpulse/composite.hpp"
#include "spinpulse/symbolic.hpp"

namespace spinpulse {

// Probability-corrected pulse classes.  P10 covers both mixed-neighbor
// orders (nu^{10} = nu^{01}).  E0/E1 are the edge single pulses resonant for
// neighbor bit 0 / 1.
enum class PulseClass { P10, P00, P11, E0, E1 };

std::string pulse_class_name(PulseClass cls);
PulseClass pulse_class_from_name(const std::string& name);

// One logical Q pulse: target qubit, class, rotation fraction, and the pulse
// phase as an exact symbolic expression.
struct QPulse {
  int qubit = 0;
  PulseClass cls = PulseClass::P10;
  double rho = 1.0;
  SymbolicPhase phase;

  bool is_composite() const { return cls == PulseClass::P00 || cls == PulseClass::P11; }
  bool is_partial() const { return rho != 1.0; }
  std::string label() const;
};

// Effect of one Q pulse on one configuration.  For a driven (resonant)
// configuration the amplitude splits into a surviving part (weight
// cos(rho*pi/2), phase `stay`) and a transferred part (weight sin(rho*pi/2),
// phase `go`); a full pi pulse transfers everything.  For a suppressed
// configuration only `stay` applies.
struct LedgerEntry {
  bool resonant = false;
  SymbolicPhase stay;
  SymbolicPhase go;
};

// The acquired phases, exactly, per neighbor configuration.  Suppressed rows
// include the k*pi factor from cos(pi k) that the 2*pi*k condition leaves
// behind; it cancels mod 2pi for even k.  `left`/`right` are the neighbor
// bits (right is empty for edge qubits, in which case `left` is the single
// neighbor).
LedgerEntry ledger_phase(const QPulse& pulse, int target_bit, std::optional<int> left,
                         std::optional<int> right, int k);

// Symbol values for evaluating ledger phases numerically.  rho_params may be
// the same object as full_params when no partial pulses are involved.
SymbolTable ledger_symbols(const CompositeParams& full_params,
                           const CompositeParams* rho_params = nullptr);

}  // namespace spinpulse
