#include "spinpulse/experiments.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinpulse {

namespace {

constexpr double kIdealFloor = 1e-12;  // |ideal|^2 below this: relative error undefined

// SplitMix64: tiny, portable, bit-stable across platforms.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform_open(std::uint64_t& state) {
  // strictly inside (0,1)
  return (static_cast<double>(splitmix64(state) >> 11) + 0.5) * 0x1p-53;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void csv_header(std::ofstream& out) {
  out << "# units: frequencies in J, times in 1/J, phases in radians\n";
}

}  // namespace

QuantumState random_superposition(int L, std::uint64_t seed) {
  if (L < 2) throw std::invalid_argument("random_superposition: L must be >= 2");
  QuantumState s;
  s.amplitudes.resize(std::size_t(1) << L);
  // one mixing round decorrelates nearby seeds; small consecutive seeds
  // otherwise land on a lattice with a skewed low tail
  std::uint64_t state = seed;
  state = splitmix64(state);
  double sum = 0.0;
  for (auto& a : s.amplitudes) {
    const double u = uniform_open(state);
    a = cplx(u, 0.0);
    sum += u * u;
  }
  const double inv = 1.0 / std::sqrt(sum);
  for (auto& a : s.amplitudes) a *= inv;
  return s;
}

ErrorReport error_metrics(const QuantumState& simulated, const QuantumState& ideal_reference) {
  const std::size_t dim = simulated.amplitudes.size();
  if (dim != ideal_reference.amplitudes.size())
    throw std::invalid_argument("error_metrics: dimension mismatch");
  ErrorReport r;
  cplx weighted(0.0, 0.0);
  for (std::size_t j = 0; j < dim; ++j)
    weighted += std::conj(ideal_reference.amplitudes[j]) * simulated.amplitudes[j];
  const double phi_total = std::arg(weighted);

  double dev_min = 0.0, dev_max = 0.0;
  bool any = false;
  r.per_state_phase_dev.resize(dim, 0.0);
  r.ideal_probs.resize(dim, 0.0);
  r.sim_probs.resize(dim, 0.0);
  r.prob_errors.resize(dim, 0.0);
  r.relative_prob_errors.resize(dim, -1.0);
  for (std::size_t j = 0; j < dim; ++j) {
    const double p_ideal = std::norm(ideal_reference.amplitudes[j]);
    const double p_sim = std::norm(simulated.amplitudes[j]);
    r.ideal_probs[j] = p_ideal;
    r.sim_probs[j] = p_sim;
    r.prob_errors[j] = std::abs(p_ideal - p_sim);
    if (p_ideal > kIdealFloor) r.relative_prob_errors[j] = r.prob_errors[j] / p_ideal;
    double dev = 0.0;
    if (p_ideal > kIdealFloor) {
      dev = wrap_angle(std::arg(simulated.amplitudes[j]) -
                       std::arg(ideal_reference.amplitudes[j]) - phi_total);
      if (!any || dev < dev_min) dev_min = dev;
      if (!any || dev > dev_max) dev_max = dev;
      any = true;
    }
    r.per_state_phase_dev[j] = dev;
    r.max_phase_error = std::max(r.max_phase_error, std::abs(dev));
  }
  r.phase_spread = any ? dev_max - dev_min : 0.0;
  r.norm_drift = std::abs(simulated.norm() - 1.0);
  return r;
}

ErrorReport run_protocol_experiment(const ChainConfig& config, const IdealGate& gate,
                                    std::uint64_t seed) {
  config.validate();
  const GatePlan plan = compile_gate(gate, config);
  const PulseProgram program = lower(plan, config);

  const QuantumState initial = random_superposition(config.L, seed);
  QuantumState ideal = initial;

  Propagator prop(config);
  std::vector<double> series;
  std::size_t next_gate = 0;
  QuantumState final_state =
      simulate_program(prop, program, initial, [&](int gate_index, const QuantumState& st) {
        if (next_gate != static_cast<std::size_t>(gate_index))
          throw std::logic_error("run_protocol_experiment: gate boundary out of order");
        ideal = ideal_apply(plan.gates[gate_index].ideal, ideal);
        series.push_back(error_metrics(st, ideal).max_phase_error);
        ++next_gate;
      });

  ErrorReport r = error_metrics(final_state, ideal);
  r.L = config.L;
  r.delta_omega = config.delta_omega;
  r.k = config.k;
  r.seed = seed;
  r.gate = gate.str();
  r.phase_error_series = std::move(series);
  r.mu = rabi_for_pi_pulse(config.k, 2.0 * config.J, 1.0) / (2.0 * config.delta_omega);
  r.q_pulse_count = program.q_pulse_count;
  return r;
}

void SweepConfig::validate() const {
  if (L_values.empty() || delta_omega_values.empty() || k_values.empty() || seeds.empty())
    throw std::invalid_argument("sweep: empty grid axis");
  if (gate_descriptor.empty()) throw std::invalid_argument("sweep: no gate descriptor");
}

SweepResult sweep(const SweepConfig& cfg) {
  cfg.validate();
  SweepResult result;
  for (int L : cfg.L_values)
    for (double dw : cfg.delta_omega_values)
      for (int k : cfg.k_values)
        for (std::uint64_t seed : cfg.seeds) {
          ChainConfig c = cfg.base;
          c.L = L;
          c.delta_omega = dw;
          c.k = k;
          try {
            const IdealGate gate = IdealGate::parse(cfg.gate_descriptor, L);
            result.reports.push_back(run_protocol_experiment(c, gate, seed));
          } catch (const std::exception& e) {
            std::ostringstream os;
            os << "L=" << L << " delta_omega=" << dw << " k=" << k << " seed=" << seed << ": "
               << e.what();
            result.errors.push_back(os.str());
          }
        }
  return result;
}

void ErrorReport::save_text(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  out.precision(17);
  out << "# protocol error report (units: J = 1, phases in radians)\n";
  out << "gate = " << gate << "\n";
  out << "L = " << L << "\n";
  out << "delta_omega = " << delta_omega << "\n";
  out << "k = " << k << "\n";
  out << "seed = " << seed << "\n";
  out << "q_pulse_count = " << q_pulse_count << "\n";
  out << "mu = " << mu << "\n";
  out << "max_phase_error = " << max_phase_error << "\n";
  out << "phase_spread = " << phase_spread << "\n";
  out << "norm_drift = " << norm_drift << "\n";
}

void ErrorReport::save_json(const std::string& path) const {
  nlohmann::json j;
  j["units"] = "J = 1, phases in radians";
  j["gate"] = gate;
  j["L"] = L;
  j["delta_omega"] = delta_omega;
  j["k"] = k;
  j["seed"] = seed;
  j["q_pulse_count"] = q_pulse_count;
  j["mu"] = mu;
  j["max_phase_error"] = max_phase_error;
  j["phase_spread"] = phase_spread;
  j["norm_drift"] = norm_drift;
  j["per_state_phase_dev"] = per_state_phase_dev;
  j["prob_errors"] = prob_errors;
  j["relative_prob_errors"] = relative_prob_errors;
  j["phase_error_series"] = phase_error_series;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  out << j.dump(2) << "\n";
}

void ErrorReport::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report: " + path);
  csv_header(out);
  out << "L,delta_omega,k,seed,j,B2_j,Bp2_j,phase_dev,P_j,rel_P_j\n";
  for (std::size_t j = 0; j < per_state_phase_dev.size(); ++j)
    out << L << "," << delta_omega << "," << k << "," << seed << "," << j << ","
        << fmt17(ideal_probs[j]) << "," << fmt17(sim_probs[j]) << ","
        << fmt17(per_state_phase_dev[j]) << "," << fmt17(prob_errors[j]) << ","
        << fmt17(relative_prob_errors[j]) << "\n";
}

void SweepResult::save_states_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write csv: " + path);
  csv_header(out);
  out << "L,delta_omega,k,seed,j,B2_j,Bp2_j,phase_dev,P_j,rel_P_j\n";
  for (const auto& r : reports)
    for (std::size_t j = 0; j < r.per_state_phase_dev.size(); ++j)
      out << r.L << "," << r.delta_omega << "," << r.k << "," << r.seed << "," << j << ","
          << fmt17(r.ideal_probs[j]) << "," << fmt17(r.sim_probs[j]) << ","
          << fmt17(r.per_state_phase_dev[j]) << "," << fmt17(r.prob_errors[j]) << ","
          << fmt17(r.relative_prob_errors[j]) << "\n";
}

void SweepResult::save_summary_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write csv: " + path);
  csv_header(out);
  out << "L,delta_omega,k,seed,gate,max_phase_error,phase_spread,mu,q_pulse_count\n";
  for (const auto& r : reports)
    out << r.L << "," << r.delta_omega << "," << r.k << "," << r.seed << "," << r.gate << ","
        << fmt17(r.max_phase_error) << "," << fmt17(r.phase_spread) << "," << fmt17(r.mu) << ","
        << r.q_pulse_count << "\n";
}

void SweepResult::save_series_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write csv: " + path);
  csv_header(out);
  out << "L,delta_omega,k,seed,gate_index,max_phase_error\n";
  for (const auto& r : reports)
    for (std::size_t g = 0; g < r.phase_error_series.size(); ++g)
      out << r.L << "," << r.delta_omega << "," << r.k << "," << r.seed << "," << g << ","
          << fmt17(r.phase_error_series[g]) << "\n";
}

}  // namespace spinpulse
