#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spinpulse/dynamics.hpp"
#include "spinpulse/gates.hpp"

namespace spinpulse {

// Per-pulse bookkeeping carried through compilation.  gate_index counts
// elementary gates (each CN of a swap chain separately); gate_end marks the
// last physical pulse of an elementary gate, where phases are re-equalized.
struct PulseAnnotation {
  int gate_index = 0;
  std::string gate;  // elementary gate descriptor, e.g. "cn 1 2"
  int qubit = 0;
  std::string q_class;  // 10 | 00 | 11 | e0 | e1
  double rho = 1.0;
  std::string role = "main";  // main | corr
  bool gate_end = false;
};

// Ordered, time-contiguous pulse list with logical annotations.
struct PulseProgram {
  std::vector<PulseSpec> pulses;
  std::vector<PulseAnnotation> annotations;
  int q_pulse_count = 0;  // logical Q pulses (a composite pair counts once)

  double total_duration() const;
  int gate_count() const;
  IdealGate elementary_ideal(int gate_index) const;

  // Throws if the program is not contiguous / annotated / positively timed.
  void validate() const;

  void save_text(const std::string& path) const;
  void save_json(const std::string& path) const;
  static PulseProgram load(const std::string& path);  // text or json, by content
};

// Runs the program with a cached propagator.  on_gate_end, when set, is
// invoked after the closing pulse of each elementary gate.
QuantumState simulate_program(
    Propagator& propagator, const PulseProgram& program, const QuantumState& initial,
    const std::function<void(int gate_index, const QuantumState&)>& on_gate_end = {});

}  // namespace spinpulse
