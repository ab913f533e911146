#pragma once

#include <cmath>
#include <map>
#include <string>

#include "spinpulse/rational.hpp"

namespace spinpulse {

// Values used to evaluate a SymbolicPhase numerically.  The phase symbols
// (theta, Theta, gamma, their _rho variants, pulse-phase names like "phi")
// are looked up by name; pi is built in.
using SymbolTable = std::map<std::string, double>;

// An exact linear combination  c_pi * pi + sum_s c_s * s  over named phase
// symbols, with rational coefficients.  All protocol phase bookkeeping is
// done in this form; floating point enters only at evaluate() time.
class SymbolicPhase {
 public:
  SymbolicPhase() = default;

  static SymbolicPhase pi(Rational coeff) {
    SymbolicPhase p;
    p.pi_ = coeff;
    return p;
  }
  static SymbolicPhase sym(const std::string& name, Rational coeff = Rational(1)) {
    SymbolicPhase p;
    if (!coeff.is_zero()) p.terms_[name] = coeff;
    return p;
  }

  const Rational& pi_coeff() const { return pi_; }
  Rational coeff(const std::string& name) const {
    auto it = terms_.find(name);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const std::map<std::string, Rational>& terms() const { return terms_; }

  bool is_zero() const { return pi_.is_zero() && terms_.empty(); }

  SymbolicPhase& operator+=(const SymbolicPhase& o) {
    pi_ += o.pi_;
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  SymbolicPhase& operator-=(const SymbolicPhase& o) {
    pi_ -= o.pi_;
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }
  friend SymbolicPhase operator+(SymbolicPhase a, const SymbolicPhase& b) { return a += b; }
  friend SymbolicPhase operator-(SymbolicPhase a, const SymbolicPhase& b) { return a -= b; }
  friend SymbolicPhase operator-(const SymbolicPhase& a) {
    SymbolicPhase r;
    r.pi_ = -a.pi_;
    for (const auto& [k, v] : a.terms_) r.terms_[k] = -v;
    return r;
  }
  friend SymbolicPhase operator*(const Rational& c, const SymbolicPhase& a) {
    SymbolicPhase r;
    if (c.is_zero()) return r;
    r.pi_ = c * a.pi_;
    for (const auto& [k, v] : a.terms_) r.terms_[k] = c * v;
    return r;
  }

  friend bool operator==(const SymbolicPhase& a, const SymbolicPhase& b) {
    return a.pi_ == b.pi_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymbolicPhase& a, const SymbolicPhase& b) { return !(a == b); }

  // Equality as a physical phase: all symbol coefficients match exactly and
  // the pi parts differ by an even integer.
  bool equivalent_mod_2pi(const SymbolicPhase& o) const {
    if (terms_ != o.terms_) return false;
    const Rational d = pi_ - o.pi_;
    return d.is_integer() && d.num % 2 == 0;
  }

  // True when any symbol other than the geometry constants appears, i.e. the
  // phase still contains free pulse-phase parameters.
  bool has_symbols_other_than(const std::map<std::string, double>& known) const {
    for (const auto& [k, v] : terms_) {
      (void)v;
      if (known.find(k) == known.end()) return true;
    }
    return false;
  }

  double evaluate(const SymbolTable& table) const;

  // Canonical form with the pi coefficient reduced into (-1, 1].
  SymbolicPhase reduced_mod_2pi() const {
    SymbolicPhase r = *this;
    // subtract the even integer 2*floor((p/q + 1) / 2)
    const Rational p = r.pi_;
    const double v = p.value();
    std::int64_t twice = static_cast<std::int64_t>(std::floor((v + 1.0) / 2.0)) * 2;
    // fix up exact boundary: pi coeff exactly -1 should map to +1
    Rational cand = p - Rational(twice);
    if (cand < Rational(-1) || cand == Rational(-1)) cand += Rational(2);
    if (Rational(1) < cand) cand -= Rational(2);
    r.pi_ = cand;
    return r;
  }

  std::string str() const;

 private:
  void add_term(const std::string& k, const Rational& v) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!v.is_zero()) terms_[k] = v;
      return;
    }
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Rational pi_;
  std::map<std::string, Rational> terms_;
};

}  // namespace spinpulse
