#include "spinpulse/compiler.hpp"

#include <numbers>
#include <stdexcept>

namespace spinpulse {

namespace {

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

SymbolicPhase th() { return SymbolicPhase::sym("theta"); }
SymbolicPhase Th() { return SymbolicPhase::sym("Theta"); }
SymbolicPhase ga() { return SymbolicPhase::sym("gamma"); }
SymbolicPhase thr(bool partial) { return SymbolicPhase::sym(partial ? "theta_rho" : "theta"); }
SymbolicPhase gar(bool partial) { return SymbolicPhase::sym(partial ? "gamma_rho" : "gamma"); }
SymbolicPhase pi(Rational r) { return SymbolicPhase::pi(r); }
SymbolicPhase phi_sym() { return SymbolicPhase::sym("phi", Rational(-1)); }

QPulse q(int qubit, PulseClass cls, SymbolicPhase phase, double rho = 1.0) {
  return QPulse{qubit, cls, rho, std::move(phase)};
}

void require_in_range(const ChainConfig& cfg, int i, const char* what) {
  if (i < 0 || i >= cfg.L)
    throw std::invalid_argument(std::string(what) + ": qubit index out of range");
}

GatePlan single_gate_plan(std::vector<QPulse> qpulses, const IdealGate& ideal,
                          SymbolicPhase overall) {
  GatePlan plan;
  plan.gates.push_back(
      ElementaryGate{ideal, 0, static_cast<int>(qpulses.size()), overall});
  plan.qpulses = std::move(qpulses);
  plan.ideal = ideal;
  plan.overall_phase = std::move(overall);
  return plan;
}

void append_plan(GatePlan& into, const GatePlan& piece) {
  const int base = static_cast<int>(into.qpulses.size());
  for (const auto& qp : piece.qpulses) into.qpulses.push_back(qp);
  for (const auto& g : piece.gates) {
    ElementaryGate shifted = g;
    shifted.first_qpulse += base;
    into.gates.push_back(shifted);
  }
  into.overall_phase += piece.overall_phase;
}

}  // namespace

GatePlan compile_not(int i, const ChainConfig& config) {
  require_in_range(config, i, "compile_not");
  std::vector<QPulse> seq;
  if (config.is_edge(i)) {
    seq.push_back(q(i, PulseClass::E0, th()));
    seq.push_back(q(i, PulseClass::E1, th()));
  } else {
    seq.push_back(q(i, PulseClass::P00, Rational(2) * (ga() + th())));
    seq.push_back(q(i, PulseClass::P10, th() + Rational(2) * Th()));
    seq.push_back(q(i, PulseClass::P11, Rational(2) * th()));
  }
  return single_gate_plan(std::move(seq), IdealGate::not_gate(i), pi(kHalf));
}

GatePlan compile_cn(int a, int b, const ChainConfig& config) {
  require_in_range(config, a, "compile_cn");
  require_in_range(config, b, "compile_cn");
  if (std::abs(a - b) != 1)
    throw std::invalid_argument("compile_cn: control and target must be adjacent");
  const bool a_edge = config.is_edge(a);
  const bool b_edge = config.is_edge(b);
  if (a_edge && b_edge)
    throw std::invalid_argument("compile_cn: no protocol with both qubits on the edge (L=2)");

  std::vector<QPulse> seq;
  if (!a_edge && !b_edge) {
    // 12-pulse interior sequence; phases solve the 16-configuration phase
    // equalization with the two free phases set to zero.
    const SymbolicPhase p1 = -(Rational(5) * th()) - Rational(2) * ga();
    const SymbolicPhase p2 = Rational(5, 2) * th() - Th() + ga();
    const SymbolicPhase p3 = pi(Rational(3, 4)) + Rational(2) * th() - Rational(4) * Th() + Rational(2) * ga();
    const SymbolicPhase p4 = pi(Rational(3, 4));
    const SymbolicPhase p5 = pi(Rational(3, 4));
    const SymbolicPhase p6 = -(Rational(2) * Th());
    const SymbolicPhase p7 = -(Rational(5, 2) * th()) + Th() - ga();
    const SymbolicPhase p8 = Rational(2) * th() - Rational(4) * Th() + Rational(2) * ga();
    seq = {q(b, PulseClass::P11, p1), q(b, PulseClass::P10, p2), q(b, PulseClass::P10, {}),
           q(a, PulseClass::P00, p3), q(a, PulseClass::P10, p4), q(a, PulseClass::P11, p5),
           q(b, PulseClass::P00, p6), q(b, PulseClass::P10, p7), q(b, PulseClass::P10, {}),
           q(a, PulseClass::P00, p8), q(a, PulseClass::P10, {}), q(a, PulseClass::P11, {})};
    return single_gate_plan(std::move(seq), IdealGate::cn(a, b), pi(kQuarter));
  }
  if (b_edge) {
    // 9-pulse variant with the edge target.
    seq = {q(b, PulseClass::E1, -(Rational(2) * th())),
           q(b, PulseClass::E0, -th()),
           q(b, PulseClass::E0, {}),
           q(a, PulseClass::P00, pi(kQuarter)),
           q(a, PulseClass::P10, pi(kQuarter)),
           q(a, PulseClass::P11, pi(kQuarter)),
           q(a, PulseClass::P00, {}),
           q(a, PulseClass::P10, {}),
           q(a, PulseClass::P11, {})};
    return single_gate_plan(std::move(seq), IdealGate::cn(a, b), pi(-kQuarter));
  }
  // 10-pulse variant with the edge control.
  seq = {q(b, PulseClass::P11, -(Rational(2) * Th())),
         q(b, PulseClass::P10, Rational(5) * th() - Rational(2) * Th() + Rational(2) * ga()),
         q(b, PulseClass::P10, {}),
         q(a, PulseClass::E0, pi(Rational(3, 4)) - Rational(5, 2) * th() + Th() - ga()),
         q(a, PulseClass::E1, pi(Rational(3, 4)) + Rational(5, 2) * th() - Th() + ga()),
         q(b, PulseClass::P00, -(Rational(6) * th()) + Rational(2) * Th() - Rational(2) * ga()),
         q(b, PulseClass::P10, {}),
         q(b, PulseClass::P10, {}),
         q(a, PulseClass::E0, {}),
         q(a, PulseClass::E1, {})};
  return single_gate_plan(std::move(seq), IdealGate::cn(a, b), pi(kQuarter));
}

GatePlan compile_swap(int i, const ChainConfig& config) {
  require_in_range(config, i, "compile_swap");
  require_in_range(config, i + 1, "compile_swap");
  GatePlan plan;
  plan.ideal = IdealGate::swap(i);
  append_plan(plan, compile_cn(i, i + 1, config));
  append_plan(plan, compile_cn(i + 1, i, config));
  append_plan(plan, compile_cn(i, i + 1, config));
  return plan;
}

GatePlan compile_rotation(int j, double rho, double phi, const ChainConfig& config) {
  require_in_range(config, j, "compile_rotation");
  if (!(rho > 0.0) || rho > 1.0) throw std::invalid_argument("compile_rotation: rho in (0,1]");
  const bool partial = rho != 1.0;
  // A physical pulse with phase p transfers amplitude with e^{-i p}, so the
  // sequence is driven with -phi to realize the +phi rotation map.
  std::vector<QPulse> seq;
  if (!config.is_edge(j)) {
    const SymbolicPhase two_shift =
        Rational(2) * (ga() + Rational(2) * th() + gar(partial) + thr(partial));
    seq = {q(j, PulseClass::P10, {}),
           q(j, PulseClass::P10, {}),
           q(j, PulseClass::P11, Rational(4) * th() + phi_sym(), rho),
           q(j, PulseClass::P11, {}),
           q(j, PulseClass::P11, -two_shift),
           q(j, PulseClass::P00,
             -(Rational(4) * ga()) - Rational(8) * th() - Rational(2) * gar(partial) -
                 Rational(2) * thr(partial) + phi_sym(),
             rho),
           q(j, PulseClass::P00, {}),
           q(j, PulseClass::P00, two_shift),
           q(j, PulseClass::P10, phi_sym(), rho)};
  } else {
    seq = {q(j, PulseClass::E0, {}),
           q(j, PulseClass::E1, {}),
           q(j, PulseClass::E0, thr(partial)),
           q(j, PulseClass::E1, -thr(partial)),
           q(j, PulseClass::E0, phi_sym() + Rational(2) * thr(partial), rho),
           q(j, PulseClass::E1, phi_sym(), rho)};
  }
  GatePlan plan =
      single_gate_plan(std::move(seq), IdealGate::rotation(j, rho, phi), pi(Rational(1)));
  plan.extra_symbols["phi"] = phi;
  return plan;
}

GatePlan compile_long_range_cn(int a, int b, const ChainConfig& config) {
  if (config.L < 3) throw std::invalid_argument("compile_long_range_cn: needs L >= 3");
  if (a != 0 || b != config.L - 1)
    throw std::invalid_argument("compile_long_range_cn: implemented for cn 0 L-1");
  GatePlan plan;
  plan.ideal = IdealGate::long_range_cn(a, b);
  const int L = config.L;
  for (int i = 0; i <= L - 3; ++i) append_plan(plan, compile_swap(i, config));
  append_plan(plan, compile_cn(L - 2, L - 1, config));
  for (int i = L - 3; i >= 0; --i) append_plan(plan, compile_swap(i, config));
  return plan;
}

GatePlan compile_gate(const IdealGate& gate, const ChainConfig& config) {
  switch (gate.kind) {
    case IdealGate::Kind::Not:
      return compile_not(gate.a, config);
    case IdealGate::Kind::CN:
      return compile_cn(gate.a, gate.b, config);
    case IdealGate::Kind::Swap:
      return compile_swap(gate.a, config);
    case IdealGate::Kind::Rotation:
      return compile_rotation(gate.a, gate.rho, gate.phi, config);
    case IdealGate::Kind::LongRangeCN:
      return compile_long_range_cn(gate.a, gate.b, config);
    case IdealGate::Kind::Identity:
      return GatePlan{};
  }
  throw std::logic_error("compile_gate: bad kind");
}

SymbolTable protocol_symbols(const ChainConfig& config, double rho) {
  const double delta = 2.0 * config.J;
  const CompositeParams full = composite_params(config.k, 1.0, delta);
  if (rho == 1.0) return ledger_symbols(full);
  const CompositeParams part = composite_params(config.k, rho, delta);
  return ledger_symbols(full, &part);
}

namespace {

// Physical pulses of one Q pulse, starting at t.  Advances t.
void emit_q_pulse(const QPulse& qp, double phi_value, const ChainConfig& config,
                  const CompositeParams& params, double& t, std::vector<PulseSpec>& pulses,
                  std::vector<std::string>& roles) {
  const double rot = qp.rho * std::numbers::pi;
  PulseSpec main;
  main.phi = wrap_angle(phi_value);
  main.t0 = t;
  switch (qp.cls) {
    case PulseClass::P10:
      main.nu = transition_frequency(config, qp.qubit, NeighborContext::interior(1, 0));
      main.omega_rabi = params.omega_single;
      break;
    case PulseClass::P00:
      main.nu = transition_frequency(config, qp.qubit, NeighborContext::interior(0, 0));
      main.omega_rabi = params.omega_main;
      break;
    case PulseClass::P11:
      main.nu = transition_frequency(config, qp.qubit, NeighborContext::interior(1, 1));
      main.omega_rabi = params.omega_main;
      break;
    case PulseClass::E0:
      main.nu = transition_frequency(config, qp.qubit, NeighborContext::edge_ctx(0));
      main.omega_rabi = params.omega_single;
      break;
    case PulseClass::E1:
      main.nu = transition_frequency(config, qp.qubit, NeighborContext::edge_ctx(1));
      main.omega_rabi = params.omega_single;
      break;
  }
  main.tau = rot / main.omega_rabi;
  pulses.push_back(main);
  roles.push_back("main");
  t += main.tau;
  if (qp.is_composite()) {
    const auto kind =
        qp.cls == PulseClass::P11 ? CorrectionKind::after11 : CorrectionKind::after00;
    PulseSpec corr = correcting_pulse_spec(kind, main.phi, t, qp.qubit, config, params);
    pulses.push_back(corr);
    roles.push_back("corr");
    t += corr.tau;
  }
}

}  // namespace

PulseProgram compile_q_pulse(int i, PulseClass cls, double phi, double rho, double t_start,
                             const ChainConfig& config) {
  require_in_range(config, i, "compile_q_pulse");
  const bool edge_cls = cls == PulseClass::E0 || cls == PulseClass::E1;
  if (edge_cls != config.is_edge(i))
    throw std::invalid_argument("compile_q_pulse: pulse class does not match qubit position");
  const CompositeParams params = composite_params(config.k, rho, 2.0 * config.J);

  PulseProgram prog;
  std::vector<PulseSpec> pulses;
  std::vector<std::string> roles;
  double t = t_start;
  QPulse qp{i, cls, rho, SymbolicPhase()};
  emit_q_pulse(qp, phi, config, params, t, pulses, roles);
  prog.pulses = std::move(pulses);
  prog.q_pulse_count = 1;
  for (std::size_t n = 0; n < prog.pulses.size(); ++n) {
    PulseAnnotation a;
    a.gate_index = 0;
    a.gate = "q " + std::to_string(i) + " " + pulse_class_name(cls);
    a.qubit = i;
    a.q_class = pulse_class_name(cls);
    a.rho = rho;
    a.role = roles[n];
    a.gate_end = n + 1 == prog.pulses.size();
    prog.annotations.push_back(a);
  }
  return prog;
}

PulseProgram lower(const GatePlan& plan, const ChainConfig& config, double t_start) {
  config.validate();
  const double delta = 2.0 * config.J;
  const CompositeParams full = composite_params(config.k, 1.0, delta);

  SymbolTable symbols = ledger_symbols(full);
  // Cache per-rho parameters; protocols use at most one partial rho.
  std::map<double, CompositeParams> by_rho{{1.0, full}};
  for (const auto& qp : plan.qpulses) {
    if (!by_rho.count(qp.rho)) {
      by_rho.emplace(qp.rho, composite_params(config.k, qp.rho, delta));
      const CompositeParams& part = by_rho.at(qp.rho);
      symbols["theta_rho"] = part.theta;
      symbols["Theta_rho"] = part.Theta;
      symbols["gamma_rho"] = part.gamma;
    }
  }
  for (const auto& [name, value] : plan.extra_symbols) symbols[name] = value;

  PulseProgram prog;
  prog.q_pulse_count = static_cast<int>(plan.qpulses.size());
  double t = t_start;
  for (std::size_t gi = 0; gi < plan.gates.size(); ++gi) {
    const auto& gate = plan.gates[gi];
    for (int n = 0; n < gate.qpulse_count; ++n) {
      const QPulse& qp = plan.qpulses[gate.first_qpulse + n];
      std::vector<PulseSpec> pulses;
      std::vector<std::string> roles;
      emit_q_pulse(qp, qp.phase.evaluate(symbols), config, by_rho.at(qp.rho), t, pulses, roles);
      for (std::size_t m = 0; m < pulses.size(); ++m) {
        prog.pulses.push_back(pulses[m]);
        PulseAnnotation a;
        a.gate_index = static_cast<int>(gi);
        a.gate = gate.ideal.str();
        a.qubit = qp.qubit;
        a.q_class = pulse_class_name(qp.cls);
        a.rho = qp.rho;
        a.role = roles[m];
        a.gate_end = n + 1 == gate.qpulse_count && m + 1 == pulses.size();
        prog.annotations.push_back(a);
      }
    }
  }
  prog.validate();
  return prog;
}

}  // namespace spinpulse
