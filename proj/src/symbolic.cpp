#include "spinpulse/symbolic.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace spinpulse {

double SymbolicPhase::evaluate(const SymbolTable& table) const {
  double v = pi_coeff().value() * std::numbers::pi;
  for (const auto& [name, coeff] : terms()) {
    auto it = table.find(name);
    if (it == table.end())
      throw std::invalid_argument("SymbolicPhase::evaluate: no value for symbol '" + name + "'");
    v += coeff.value() * it->second;
  }
  return v;
}

std::string SymbolicPhase::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& name) {
    if (c.is_zero()) return;
    Rational a = c;
    if (first) {
      if (a < Rational(0)) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < Rational(0) ? " - " : " + ");
      if (a < Rational(0)) a = -a;
    }
    if (a == Rational(1)) {
      os << name;
    } else if (a.is_integer()) {
      os << a.num << "*" << name;
    } else if (a.num == 1) {
      os << name << "/" << a.den;
    } else {
      os << a.num << "*" << name << "/" << a.den;
    }
  };
  emit(pi_coeff(), "pi");
  for (const auto& [name, coeff] : terms()) emit(coeff, name);
  if (first) os << "0";
  return os.str();
}

}  // namespace spinpulse
