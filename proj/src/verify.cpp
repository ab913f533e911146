#include "spinpulse/verify.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace spinpulse {

namespace {

const std::set<std::string> kGeometrySymbols = {"theta",     "Theta",     "gamma",
                                                "theta_rho", "Theta_rho", "gamma_rho"};

bool has_free_symbols(const SymbolicPhase& p) {
  for (const auto& [name, coeff] : p.terms()) {
    (void)coeff;
    if (!kGeometrySymbols.count(name)) return true;
  }
  return false;
}

struct LedgerStep {
  bool flips = false;
  SymbolicPhase phase;
};

// Applies one full (rho = 1) Q pulse to a register configuration.
LedgerStep step(const QPulse& qp, std::uint32_t state, const ChainConfig& config) {
  if (qp.is_partial())
    throw std::invalid_argument("symbolic_verify: partial rotations are not permutation gates");
  const BasisState bs{state};
  std::optional<int> left, right;
  if (qp.qubit > 0) left = bs.bit(qp.qubit - 1);
  if (qp.qubit < config.L - 1) right = bs.bit(qp.qubit + 1);
  const LedgerEntry entry = ledger_phase(qp, bs.bit(qp.qubit), left, right, config.k);
  if (entry.resonant) return {true, entry.go};
  return {false, entry.stay};
}

std::uint32_t pack_bits(std::uint32_t full, const std::vector<int>& qubits) {
  std::uint32_t packed = 0;
  for (std::size_t n = 0; n < qubits.size(); ++n)
    packed |= ((full >> qubits[n]) & 1u) << n;
  return packed;
}

}  // namespace

VerifyReport symbolic_verify(const std::vector<QPulse>& sequence, const IdealGate& ideal,
                             const ChainConfig& config) {
  VerifyReport report;
  if (!ideal.is_permutation())
    throw std::invalid_argument("symbolic_verify: ideal gate must be a basis permutation");

  std::set<int> relevant;
  for (const auto& qp : sequence) {
    relevant.insert(qp.qubit);
    if (qp.qubit > 0) relevant.insert(qp.qubit - 1);
    if (qp.qubit < config.L - 1) relevant.insert(qp.qubit + 1);
  }
  report.relevant_qubits.assign(relevant.begin(), relevant.end());
  const int nrel = static_cast<int>(report.relevant_qubits.size());
  if (nrel > 20) throw std::invalid_argument("symbolic_verify: too many relevant qubits");

  report.permutation_ok = true;
  for (std::uint32_t packed = 0; packed < (1u << nrel); ++packed) {
    std::uint32_t state = 0;
    for (int n = 0; n < nrel; ++n)
      state |= ((packed >> n) & 1u) << report.relevant_qubits[n];
    const std::uint32_t initial = state;

    SymbolicPhase phase;
    for (const auto& qp : sequence) {
      const LedgerStep s = step(qp, state, config);
      phase += s.phase;
      if (s.flips) state ^= 1u << qp.qubit;
    }

    ConfigResult row;
    row.bits_in = packed;
    row.bits_out = pack_bits(state, report.relevant_qubits);
    row.phase = phase;
    if (state != ideal.apply_bits(initial)) report.permutation_ok = false;
    report.rows.push_back(row);
  }

  // Phase equality.  With free pulse-phase symbols present, equality cannot
  // hold as written; search all pairs for a witness difference that is
  // free-symbol-independent yet nonzero, which rules out every assignment.
  bool free_syms = false;
  for (const auto& qp : sequence) free_syms = free_syms || has_free_symbols(qp.phase);
  if (!free_syms) {
    report.phases_equal = true;
    const SymbolicPhase& first = report.rows.front().phase;
    for (std::size_t n = 1; n < report.rows.size(); ++n) {
      const SymbolicPhase diff = report.rows[n].phase - first;
      if (diff.equivalent_mod_2pi(SymbolicPhase())) continue;
      report.phases_equal = false;
      std::ostringstream os;
      os << "configurations " << report.rows.front().bits_in << " and " << report.rows[n].bits_in
         << " differ by " << diff.reduced_mod_2pi().str();
      report.detail = os.str();
      break;
    }
    if (report.phases_equal) report.common_phase = first.reduced_mod_2pi();
    return report;
  }
  // Identically equal expressions are equal under every assignment.
  report.phases_equal = true;
  for (std::size_t n = 1; n < report.rows.size() && report.phases_equal; ++n)
    report.phases_equal =
        report.rows[n].phase.equivalent_mod_2pi(report.rows.front().phase);
  if (report.phases_equal) {
    report.common_phase = report.rows.front().phase.reduced_mod_2pi();
    return report;
  }
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < report.rows.size(); ++j) {
      const SymbolicPhase diff = report.rows[j].phase - report.rows[i].phase;
      if (has_free_symbols(diff)) continue;
      if (diff.equivalent_mod_2pi(SymbolicPhase())) continue;
      std::ostringstream os;
      os << "configurations " << report.rows[i].bits_in << " and " << report.rows[j].bits_in
         << " differ by " << diff.reduced_mod_2pi().str()
         << " independently of any pulse-phase choice";
      report.detail = os.str();
      return report;
    }
  }
  report.detail = "free pulse phases remain; equalizability not decided";
  return report;
}

VerifyReport symbolic_verify(const GatePlan& plan, const ChainConfig& config) {
  return symbolic_verify(plan.qpulses, plan.ideal, config);
}

std::vector<TraceRow> trace_sequence(const std::vector<QPulse>& sequence, std::uint32_t initial,
                                     const ChainConfig& config) {
  std::vector<TraceRow> rows;
  std::uint32_t state = initial;
  SymbolicPhase running;
  for (const auto& qp : sequence) {
    const LedgerStep s = step(qp, state, config);
    if (s.flips) state ^= 1u << qp.qubit;
    running += s.phase;
    rows.push_back(TraceRow{qp.label(), state, s.phase, running});
  }
  return rows;
}

}  // namespace spinpulse
