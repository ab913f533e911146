#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace spinpulse {

// Static description of the homogeneous Ising chain.  All frequencies are in
// units of J, times in units of 1/J; J itself is the reference scale and is
// normally 1.
struct ChainConfig {
  int L = 2;                 // qubit count
  double w = 1e5;            // base Larmor angular frequency (qubit 0)
  double delta_omega = 1e4;  // Larmor gradient step per site
  double J = 1.0;            // Ising coupling
  int k = 2;                 // 2*pi*k suppression integer

  // Larmor frequency of site i: w + i*delta_omega (strictly linear gradient).
  double omega(int i) const { return w + static_cast<double>(i) * delta_omega; }

  bool is_edge(int i) const { return i == 0 || i == L - 1; }

  // Throws std::invalid_argument on hard violations; appends a note to
  // *warning when delta_omega is not >> J (advisory only).
  void validate(std::string* warning = nullptr) const;

  static ChainConfig load(const std::string& path);
  void save(const std::string& path) const;
};

// One basis state of the 2^L register.  Bit i of the index encodes qubit i
// (qubit 0 is the least significant bit).  Bit value 0 corresponds to the
// I_z eigenvalue +1/2.
struct BasisState {
  std::uint32_t index = 0;

  int bit(int i) const { return static_cast<int>((index >> i) & 1u); }
  BasisState flipped(int i) const { return BasisState{index ^ (1u << i)}; }
};

// Neighbor configuration of a qubit: both neighbor bits for an interior
// qubit, the single neighbor bit for an edge qubit.  nu_i^{10} == nu_i^{01},
// so only the multiset of neighbor bits matters.
struct NeighborContext {
  bool edge = false;
  int m = 0;  // one neighbor bit
  int n = 0;  // other neighbor bit (ignored for edge contexts)

  static NeighborContext interior(int m, int n) { return NeighborContext{false, m, n}; }
  static NeighborContext edge_ctx(int m) { return NeighborContext{true, m, 0}; }

  int ones() const { return edge ? m : m + n; }
};

// Diagonal energy of a basis state: E_p = -sum_k omega_k s_k - 2J sum s_k s_{k+1},
// with s_k = +1/2 for bit 0 and -1/2 for bit 1.
double energy(const ChainConfig& config, BasisState state);

// Exact energy gap for flipping qubit i inside the given neighbor
// configuration.  Interior: omega_i + 2J, omega_i, omega_i - 2J for 00, 10,
// 11 neighbors; edge: omega_i + J, omega_i - J.
double transition_frequency(const ChainConfig& config, int i, const NeighborContext& ctx);

// Neighbor context of qubit i inside a concrete basis state.
NeighborContext neighbor_context(const ChainConfig& config, int i, BasisState state);

// Exchange coupling for donor electrons at distance r:
//   J(r) = 0.8 (e^2 / (eps a0)) (r/a0)^{5/2} exp(-2 r/a0),
// returned as an ordinary frequency in MHz.  Inputs in nm.  Convenience
// helper for mapping the model onto hardware numbers; not used by the
// simulator itself.
double exchange_constant_mhz(double r_nm, double epsilon, double a0_nm);

}  // namespace spinpulse
