#include "spinpulse/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "spinpulse/experiments.hpp"
#include "spinpulse/verify.hpp"

namespace spinpulse {

namespace {

struct CommonOpts {
  std::string config_path;
  std::string gate;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "text";
  std::optional<double> delta_omega;
  std::optional<int> k;
};

ChainConfig load_config(const CommonOpts& opts) {
  if (opts.config_path.empty()) throw CLI::ValidationError("--config is required");
  ChainConfig cfg = ChainConfig::load(opts.config_path);
  if (opts.delta_omega) cfg.delta_omega = *opts.delta_omega;
  if (opts.k) cfg.k = *opts.k;
  std::string warning;
  cfg.validate(&warning);
  if (!warning.empty()) std::cerr << "warning: " << warning;
  return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_gate) {
  cmd->add_option("--config", opts.config_path, "chain configuration file (key = value)");
  auto* g = cmd->add_option("--gate", opts.gate,
                            "gate descriptor: not <i> | cn <a> <b> | swap <i> | rot <j> <rho> <phi>");
  if (needs_gate) g->required();
  cmd->add_option("--seed", opts.seed, "random superposition seed");
  cmd->add_option("--out", opts.out, "output path");
  cmd->add_option("--format", opts.format, "output format: text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--delta-omega", opts.delta_omega, "override delta_omega from the config");
  cmd->add_option("--k", opts.k, "override the 2*pi*k integer from the config");
}

int cmd_compile(const CommonOpts& opts) {
  const ChainConfig cfg = load_config(opts);
  const IdealGate gate = IdealGate::parse(opts.gate, cfg.L);
  const GatePlan plan = compile_gate(gate, cfg);
  const PulseProgram prog = lower(plan, cfg);
  const std::string out = opts.out.empty() ? "program.txt" : opts.out;
  if (opts.format == "json")
    prog.save_json(out);
  else
    prog.save_text(out);
  std::cout << "compiled " << gate.str() << ": " << prog.q_pulse_count << " Q pulses, "
            << prog.pulses.size() << " physical pulses, duration " << prog.total_duration()
            << " (1/J) -> " << out << "\n";
  return kExitOk;
}

int cmd_simulate(const CommonOpts& opts) {
  const ChainConfig cfg = load_config(opts);
  const IdealGate gate = IdealGate::parse(opts.gate, cfg.L);
  const ErrorReport report = run_protocol_experiment(cfg, gate, opts.seed);
  if (!opts.out.empty()) {
    if (opts.format == "json")
      report.save_json(opts.out);
    else if (opts.format == "csv")
      report.save_csv(opts.out);
    else
      report.save_text(opts.out);
  }
  std::cout << "gate " << report.gate << " L=" << report.L << " delta_omega=" << report.delta_omega
            << " k=" << report.k << " seed=" << report.seed << ": max_phase_error="
            << report.max_phase_error << " phase_spread=" << report.phase_spread
            << " mu=" << report.mu << " q_pulses=" << report.q_pulse_count << "\n";
  return kExitOk;
}

int cmd_verify(const CommonOpts& opts) {
  const ChainConfig cfg = load_config(opts);
  const IdealGate gate = IdealGate::parse(opts.gate, cfg.L);
  const GatePlan plan = compile_gate(gate, cfg);
  if (!plan.ideal.is_permutation()) {
    std::cerr << "verify: rotations are checked numerically (see simulate), not symbolically\n";
    return kExitUsage;
  }
  const VerifyReport report = symbolic_verify(plan, cfg);
  const std::size_t n = report.rows.size();
  std::ostringstream line;
  if (report.pass()) {
    line << "all " << n << " configurations: phase = " << report.common_phase.str() << ", PASS";
  } else if (!report.permutation_ok) {
    line << "FAIL: compiled bit action does not match " << gate.str();
  } else {
    line << "FAIL: phases not equalized (" << report.detail << ")";
  }
  std::cout << line.str() << "\n";
  if (!opts.out.empty()) {
    std::ofstream out(opts.out);
    if (!out) throw std::runtime_error("cannot write report: " + opts.out);
    out << line.str() << "\n";
    for (const auto& row : report.rows)
      out << "config " << row.bits_in << " -> " << row.bits_out << " phase "
          << row.phase.reduced_mod_2pi().str() << "\n";
  }
  return report.pass() ? kExitOk : kExitVerifyFailed;
}

int cmd_inspect_params(const CommonOpts& opts, double rho) {
  const ChainConfig cfg = load_config(opts);
  const CompositeParams p = composite_params(cfg.k, rho, 2.0 * cfg.J);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!opts.out.empty()) {
    file.open(opts.out);
    if (!file) throw std::runtime_error("cannot write params: " + opts.out);
    os = &file;
  }
  os->precision(17);
  *os << "# composite pulse parameters (units of J; angles in radians)\n"
      << "k = " << p.k << "\n"
      << "rho = " << p.rho << "\n"
      << "delta = " << p.delta << "\n"
      << "theta = " << p.theta << "\n"
      << "alpha = " << p.alpha << "\n"
      << "f = " << p.f << "\n"
      << "g = " << p.g << "\n"
      << "Theta = " << p.Theta << "\n"
      << "beta = " << p.beta << "\n"
      << "beta_star = " << p.beta_star << "\n"
      << "gamma = " << p.gamma << "\n"
      << "omega_single = " << p.omega_single << "\n"
      << "omega_main = " << p.omega_main << "\n"
      << "omega_corr = " << p.omega_corr << "\n"
      << "tau_corr = " << p.tau_corr << "\n";
  return kExitOk;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, sep)) out.push_back(tok);
  return out;
}

int cmd_sweep(const CommonOpts& opts, const std::string& grid) {
  const ChainConfig base = load_config(opts);
  SweepConfig sc;
  sc.base = base;
  sc.L_values = {base.L};
  sc.delta_omega_values = {base.delta_omega};
  sc.k_values = {base.k};
  sc.seeds = {opts.seed};
  sc.gate_descriptor = opts.gate;
  for (const auto& axis : split(grid, ';')) {
    if (axis.empty()) continue;
    const auto eq = axis.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--grid: expected name=v1,v2,...; got '" + axis + "'");
    const std::string name = axis.substr(0, eq);
    const auto values = split(axis.substr(eq + 1), ',');
    if (values.empty()) throw CLI::ValidationError("--grid: empty axis '" + name + "'");
    if (name == "L") {
      sc.L_values.clear();
      for (const auto& v : values) sc.L_values.push_back(std::stoi(v));
    } else if (name == "delta_omega") {
      sc.delta_omega_values.clear();
      for (const auto& v : values) sc.delta_omega_values.push_back(std::stod(v));
    } else if (name == "k") {
      sc.k_values.clear();
      for (const auto& v : values) sc.k_values.push_back(std::stoi(v));
    } else if (name == "seed") {
      sc.seeds.clear();
      for (const auto& v : values) sc.seeds.push_back(std::stoull(v));
    } else {
      throw CLI::ValidationError("--grid: unknown axis '" + name + "'");
    }
  }
  const SweepResult result = sweep(sc);
  for (const auto& e : result.errors) std::cerr << "sweep point failed: " << e << "\n";
  const std::string stem = opts.out.empty() ? "sweep" : opts.out;
  result.save_states_csv(stem + "_states.csv");
  result.save_summary_csv(stem + "_summary.csv");
  result.save_series_csv(stem + "_series.csv");
  std::cout << "sweep: " << result.reports.size() << " points -> " << stem << "_states.csv, "
            << stem << "_summary.csv, " << stem << "_series.csv\n";
  if (result.reports.empty()) {
    std::cerr << "sweep: no grid point succeeded\n";
    return kExitIoError;
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"gate-to-pulse compiler and exact simulator for an Ising spin chain"};
  app.require_subcommand(1);

  CommonOpts opts;
  double rho = 1.0;
  std::string grid;

  auto* compile = app.add_subcommand("compile", "lower a gate to a pulse program file");
  add_common(compile, opts, true);
  auto* simulate = app.add_subcommand("simulate", "run a gate on a seeded random superposition");
  add_common(simulate, opts, true);
  auto* swp = app.add_subcommand("sweep", "run a gate over a parameter grid, emit CSVs");
  add_common(swp, opts, true);
  swp->add_option("--grid", grid, "grid spec: L=4,5;delta_omega=1e4,2e4;k=2;seed=1,2");
  auto* verify = app.add_subcommand("verify", "check phase equalization symbolically");
  add_common(verify, opts, true);
  auto* inspect = app.add_subcommand("inspect-params", "print composite pulse parameters");
  add_common(inspect, opts, false);
  inspect->add_option("--rho", rho, "rotation fraction in (0,1]");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compile->parsed()) return cmd_compile(opts);
    if (simulate->parsed()) return cmd_simulate(opts);
    if (swp->parsed()) return cmd_sweep(opts, grid);
    if (verify->parsed()) return cmd_verify(opts);
    if (inspect->parsed()) return cmd_inspect_params(opts, rho);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitUsage;
}

int dispatch(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args);
}

}  // namespace spinpulse
