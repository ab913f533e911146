#include "spinpulse/ledger.hpp"

#include <stdexcept>

namespace spinpulse {

namespace {

const Rational kHalf(1, 2);

SymbolicPhase sym_theta(bool partial) { return SymbolicPhase::sym(partial ? "theta_rho" : "theta"); }
SymbolicPhase sym_Theta(bool partial) { return SymbolicPhase::sym(partial ? "Theta_rho" : "Theta"); }
SymbolicPhase sym_gamma(bool partial) { return SymbolicPhase::sym(partial ? "gamma_rho" : "gamma"); }

// sign convention: +1 for target bit 0, -1 for target bit 1 (the (-1)^q of
// the pulse-action equations).
Rational sgn(int bit) { return bit == 0 ? Rational(1) : Rational(-1); }

SymbolicPhase kpi(int k, int count) { return SymbolicPhase::pi(Rational(k * count)); }

}  // namespace

std::string pulse_class_name(PulseClass cls) {
  switch (cls) {
    case PulseClass::P10: return "10";
    case PulseClass::P00: return "00";
    case PulseClass::P11: return "11";
    case PulseClass::E0: return "e0";
    case PulseClass::E1: return "e1";
  }
  throw std::logic_error("pulse_class_name: bad class");
}

PulseClass pulse_class_from_name(const std::string& name) {
  if (name == "10" || name == "01") return PulseClass::P10;
  if (name == "00") return PulseClass::P00;
  if (name == "11") return PulseClass::P11;
  if (name == "e0") return PulseClass::E0;
  if (name == "e1") return PulseClass::E1;
  throw std::invalid_argument("unknown pulse class: " + name);
}

std::string QPulse::label() const {
  std::string s = "Q" + std::to_string(qubit) + "^" + pulse_class_name(cls);
  if (is_partial()) s += "[rho]";
  s += "(" + phase.str() + ")";
  return s;
}

LedgerEntry ledger_phase(const QPulse& pulse, int target_bit, std::optional<int> left,
                         std::optional<int> right, int k) {
  const bool partial = pulse.is_partial();
  const bool edge_cls = pulse.cls == PulseClass::E0 || pulse.cls == PulseClass::E1;
  const Rational s = sgn(target_bit);
  LedgerEntry e;

  if (edge_cls) {
    if (left.has_value() == right.has_value())
      throw std::invalid_argument("ledger_phase: edge pulse needs exactly one neighbor bit");
    const int nb = left ? *left : *right;
    const int resonant_for = pulse.cls == PulseClass::E0 ? 0 : 1;
    if (nb == resonant_for) {
      e.resonant = true;
      e.stay = SymbolicPhase();  // partial rotations leave the surviving part unshifted
      e.go = SymbolicPhase::pi(kHalf) - s * pulse.phase;
      return e;
    }
    // Suppressed: detuning +Delta under E1, -Delta under E0.
    const Rational dir = pulse.cls == PulseClass::E0 ? Rational(-1) : Rational(1);
    e.stay = (dir * s) * (-sym_theta(partial)) + kpi(k, 1);
    return e;
  }

  if (!left || !right)
    throw std::invalid_argument("ledger_phase: interior pulse needs both neighbor bits");
  const int ones = *left + *right;

  switch (pulse.cls) {
    case PulseClass::P10:
      if (ones == 1) {
        e.resonant = true;
        e.go = SymbolicPhase::pi(kHalf) - s * pulse.phase;
        return e;
      }
      // 00 neighbors sit at +Delta, 11 at -Delta.
      e.stay = (ones == 0 ? -s : s) * sym_theta(partial) + kpi(k, 1);
      return e;
    case PulseClass::P00:
      if (ones == 0) {
        e.resonant = true;
        e.stay = -s * sym_gamma(partial) + kpi(k, 1);
        e.go = SymbolicPhase::pi(kHalf) - s * (pulse.phase - sym_gamma(partial)) + kpi(k, 1);
        return e;
      }
      if (ones == 1) {
        e.stay = SymbolicPhase::pi(Rational(1)) +
                 s * (kHalf * sym_theta(partial) + sym_Theta(partial));
        return e;
      }
      e.stay = s * (sym_theta(partial) + sym_gamma(partial)) + kpi(k, 2);
      return e;
    case PulseClass::P11:
      if (ones == 2) {
        e.resonant = true;
        e.stay = s * sym_gamma(partial) + kpi(k, 1);
        e.go = SymbolicPhase::pi(kHalf) - s * (pulse.phase + sym_gamma(partial)) + kpi(k, 1);
        return e;
      }
      if (ones == 1) {
        e.stay = SymbolicPhase::pi(Rational(1)) -
                 s * (kHalf * sym_theta(partial) + sym_Theta(partial));
        return e;
      }
      e.stay = -s * (sym_theta(partial) + sym_gamma(partial)) + kpi(k, 2);
      return e;
    default:
      throw std::invalid_argument("ledger_phase: edge class on interior qubit");
  }
}

SymbolTable ledger_symbols(const CompositeParams& full_params, const CompositeParams* rho_params) {
  SymbolTable t;
  t["theta"] = full_params.theta;
  t["Theta"] = full_params.Theta;
  t["gamma"] = full_params.gamma;
  const CompositeParams& r = rho_params ? *rho_params : full_params;
  t["theta_rho"] = r.theta;
  t["Theta_rho"] = r.Theta;
  t["gamma_rho"] = r.gamma;
  return t;
}

}  // namespace spinpulse
