#include "spinpulse/chain.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinpulse {

void ChainConfig::validate(std::string* warning) const {
  if (L < 2) throw std::invalid_argument("ChainConfig: L must be >= 2");
  if (L > 14) throw std::invalid_argument("ChainConfig: L > 14 is not supported");
  if (!(J > 0)) throw std::invalid_argument("ChainConfig: J must be > 0");
  if (!(delta_omega > 0)) throw std::invalid_argument("ChainConfig: delta_omega must be > 0");
  if (k < 1) throw std::invalid_argument("ChainConfig: k must be a positive integer");
  if (warning && delta_omega < 100.0 * J)
    *warning += "delta_omega is not >> J; selective addressing will be poor\n";
}

ChainConfig ChainConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  ChainConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string key, eq, value;
    std::istringstream ls(line);
    if (!(ls >> key)) continue;
    if (!(ls >> eq >> value) || eq != "=")
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    if (key == "L")
      cfg.L = std::stoi(value);
    else if (key == "w")
      cfg.w = std::stod(value);
    else if (key == "delta_omega")
      cfg.delta_omega = std::stod(value);
    else if (key == "J")
      cfg.J = std::stod(value);
    else if (key == "k")
      cfg.k = std::stoi(value);
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

void ChainConfig::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config file: " + path);
  out.precision(17);
  out << "# spin chain configuration (frequencies in units of J)\n";
  out << "L = " << L << "\n";
  out << "w = " << w << "\n";
  out << "delta_omega = " << delta_omega << "\n";
  out << "J = " << J << "\n";
  out << "k = " << k << "\n";
}

double energy(const ChainConfig& config, BasisState state) {
  if (state.index >= (1u << config.L))
    throw std::invalid_argument("energy: basis state index out of range");
  double e = 0.0;
  double s_prev = 0.0;
  for (int i = 0; i < config.L; ++i) {
    const double s = state.bit(i) == 0 ? 0.5 : -0.5;
    e -= config.omega(i) * s;
    if (i > 0) e -= 2.0 * config.J * s_prev * s;
    s_prev = s;
  }
  return e;
}

double transition_frequency(const ChainConfig& config, int i, const NeighborContext& ctx) {
  if (i < 0 || i >= config.L) throw std::invalid_argument("transition_frequency: bad qubit index");
  if (ctx.edge != config.is_edge(i))
    throw std::invalid_argument(
        "transition_frequency: neighbor context does not match qubit position");
  if (ctx.edge) return config.omega(i) + (ctx.m == 0 ? config.J : -config.J);
  switch (ctx.ones()) {
    case 0:
      return config.omega(i) + 2.0 * config.J;
    case 1:
      return config.omega(i);
    default:
      return config.omega(i) - 2.0 * config.J;
  }
}

NeighborContext neighbor_context(const ChainConfig& config, int i, BasisState state) {
  if (i < 0 || i >= config.L) throw std::invalid_argument("neighbor_context: bad qubit index");
  if (i == 0) return NeighborContext::edge_ctx(state.bit(1));
  if (i == config.L - 1) return NeighborContext::edge_ctx(state.bit(config.L - 2));
  return NeighborContext::interior(state.bit(i - 1), state.bit(i + 1));
}

double exchange_constant_mhz(double r_nm, double epsilon, double a0_nm) {
  if (!(r_nm > 0) || !(a0_nm > 0) || !(epsilon > 0))
    throw std::invalid_argument("exchange_constant_mhz: inputs must be positive");
  // e^2 in Gaussian convention: 14.399645 eV*Angstrom; h = 4.135667696e-15 eV*s.
  constexpr double e2_ev_angstrom = 14.399645;
  constexpr double planck_ev_s = 4.135667696e-15;
  const double coulomb_ev = e2_ev_angstrom / (epsilon * a0_nm * 10.0);
  const double ratio = r_nm / a0_nm;
  const double energy_ev = 0.8 * coulomb_ev * std::pow(ratio, 2.5) * std::exp(-2.0 * ratio);
  return energy_ev / planck_ev_s / 1e6;
}

}  // namespace spinpulse
