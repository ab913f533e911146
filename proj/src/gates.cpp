#include "spinpulse/gates.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace spinpulse {

std::uint32_t IdealGate::apply_bits(std::uint32_t index) const {
  switch (kind) {
    case Kind::Identity:
      return index;
    case Kind::Not:
      return index ^ (1u << a);
    case Kind::CN:
    case Kind::LongRangeCN:
      if ((index >> a) & 1u) return index ^ (1u << b);
      return index;
    case Kind::Swap: {
      const std::uint32_t ba = (index >> a) & 1u;
      const std::uint32_t bb = (index >> b) & 1u;
      if (ba == bb) return index;
      return index ^ (1u << a) ^ (1u << b);
    }
    case Kind::Rotation:
      throw std::logic_error("apply_bits: rotation is not a basis permutation");
  }
  throw std::logic_error("apply_bits: bad kind");
}

std::string IdealGate::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Identity:
      os << "id";
      break;
    case Kind::Not:
      os << "not " << a;
      break;
    case Kind::CN:
    case Kind::LongRangeCN:
      os << "cn " << a << " " << b;
      break;
    case Kind::Swap:
      os << "swap " << a;
      break;
    case Kind::Rotation:
      os << "rot " << a << " " << rho << " " << phi;
      break;
  }
  return os.str();
}

IdealGate IdealGate::parse(const std::string& descriptor, int L) {
  std::istringstream is(descriptor);
  std::string name;
  if (!(is >> name)) throw std::invalid_argument("empty gate descriptor");
  auto read_qubit = [&]() {
    std::string tok;
    if (!(is >> tok)) throw std::invalid_argument("gate descriptor: missing qubit index");
    int q = tok == "end" ? L - 1 : std::stoi(tok);
    if (q < 0 || q >= L) throw std::invalid_argument("gate descriptor: qubit index out of range");
    return q;
  };
  IdealGate g;
  if (name == "not") {
    g = not_gate(read_qubit());
  } else if (name == "cn") {
    const int a = read_qubit();
    const int b = read_qubit();
    if (a == b) throw std::invalid_argument("cn: control and target must differ");
    g = std::abs(a - b) == 1 ? cn(a, b) : long_range_cn(a, b);
  } else if (name == "swap") {
    const int i = read_qubit();
    if (i + 1 >= L) throw std::invalid_argument("swap: qubit pair out of range");
    g = swap(i);
  } else if (name == "rot") {
    const int j = read_qubit();
    double rho, phi;
    if (!(is >> rho >> phi)) throw std::invalid_argument("rot: expected <j> <rho> <phi>");
    if (!(rho > 0.0) || rho > 1.0) throw std::invalid_argument("rot: rho must be in (0,1]");
    g = rotation(j, rho, phi);
  } else {
    throw std::invalid_argument("unknown gate: " + name);
  }
  std::string extra;
  if (is >> extra) throw std::invalid_argument("gate descriptor: trailing token '" + extra + "'");
  return g;
}

QuantumState ideal_apply(const IdealGate& gate, const QuantumState& state) {
  QuantumState out = state;
  const std::size_t dim = state.amplitudes.size();
  if (gate.is_permutation()) {
    for (std::size_t j = 0; j < dim; ++j)
      out.amplitudes[gate.apply_bits(static_cast<std::uint32_t>(j))] = state.amplitudes[j];
    return out;
  }
  const double c = std::cos(gate.rho * std::numbers::pi / 2.0);
  const double s = std::sin(gate.rho * std::numbers::pi / 2.0);
  const cplx up = cplx(0.0, 1.0) * std::polar(1.0, gate.phi) * s;
  const cplx down = cplx(0.0, 1.0) * std::polar(1.0, -gate.phi) * s;
  const std::uint32_t mask = 1u << gate.a;
  for (std::size_t j = 0; j < dim; ++j) {
    if (j & mask) continue;
    const std::size_t jn = j | mask;
    const cplx a0 = state.amplitudes[j];
    const cplx a1 = state.amplitudes[jn];
    out.amplitudes[j] = c * a0 + down * a1;
    out.amplitudes[jn] = c * a1 + up * a0;
  }
  return out;
}

}  // namespace spinpulse
