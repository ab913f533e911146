#include <doctest.h>

#include "spinpulse/verify.hpp"

using namespace spinpulse;

namespace {

ChainConfig cfg(int L = 4, int k = 2) {
  ChainConfig c;
  c.L = L;
  c.w = 1e5;
  c.delta_omega = 1e4;
  c.J = 1.0;
  c.k = k;
  return c;
}

SymbolicPhase th() { return SymbolicPhase::sym("theta"); }
SymbolicPhase Th() { return SymbolicPhase::sym("Theta"); }
SymbolicPhase ga() { return SymbolicPhase::sym("gamma"); }
SymbolicPhase sp_pi(Rational r) { return SymbolicPhase::pi(r); }

}  // namespace

TEST_CASE("not protocols equalize every configuration to pi/2") {
  const ChainConfig c = cfg();
  for (int i : {0, 1, 2, 3}) {
    const GatePlan plan = compile_not(i, c);
    const VerifyReport report = symbolic_verify(plan, c);
    CAPTURE(i);
    CHECK(report.permutation_ok);
    CHECK(report.phases_equal);
    CHECK(report.common_phase.equivalent_mod_2pi(sp_pi(Rational(1, 2))));
  }
}

TEST_CASE("applying the not plan twice gives the identity with phase pi") {
  const ChainConfig c = cfg();
  GatePlan doubled = compile_not(1, c);
  const GatePlan once = compile_not(1, c);
  doubled.qpulses.insert(doubled.qpulses.end(), once.qpulses.begin(), once.qpulses.end());
  const VerifyReport report = symbolic_verify(doubled.qpulses, IdealGate::identity(), c);
  CHECK(report.permutation_ok);
  CHECK(report.phases_equal);
  CHECK(report.common_phase.equivalent_mod_2pi(sp_pi(Rational(1))));
}

TEST_CASE("cn protocols equalize to the documented overall phases at every placement") {
  const ChainConfig c = cfg();
  struct Case {
    int a, b;
    Rational phase;
  };
  for (const auto& [a, b, phase] :
       {Case{1, 2, Rational(1, 4)}, Case{2, 1, Rational(1, 4)}, Case{1, 0, Rational(-1, 4)},
        Case{2, 3, Rational(-1, 4)}, Case{0, 1, Rational(1, 4)}, Case{3, 2, Rational(1, 4)}}) {
    const GatePlan plan = compile_cn(a, b, c);
    const VerifyReport report = symbolic_verify(plan, c);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(report.permutation_ok);
    CHECK(report.phases_equal);
    CHECK(report.rows.size() == (plan.qpulses.size() == 12 ? 16 : 8));
    CHECK(report.common_phase.equivalent_mod_2pi(sp_pi(phase)));
  }
}

TEST_CASE("interior cn at odd k does not equalize (suppression sign survives)") {
  const ChainConfig c = cfg(4, 1);
  const GatePlan plan = compile_cn(1, 2, c);
  const VerifyReport report = symbolic_verify(plan, c);
  CHECK(report.permutation_ok);
  CHECK_FALSE(report.phases_equal);
}

TEST_CASE("the eight-pulse cn candidate cannot be phase-corrected") {
  // CN_{a,b} attempt without the bracketed extra pulses; its phases stay free
  // symbols and two no-flip configurations differ by a phase no assignment
  // can remove.
  const ChainConfig c = cfg();
  const int a = 1, b = 2;
  auto phi = [](int n) { return SymbolicPhase::sym("phi" + std::to_string(n)); };
  const std::vector<QPulse> seq = {
      {b, PulseClass::P11, 1.0, phi(1)}, {a, PulseClass::P00, 1.0, phi(2)},
      {a, PulseClass::P10, 1.0, phi(3)}, {a, PulseClass::P11, 1.0, phi(4)},
      {b, PulseClass::P00, 1.0, phi(5)}, {a, PulseClass::P00, 1.0, phi(6)},
      {a, PulseClass::P10, 1.0, phi(7)}, {a, PulseClass::P11, 1.0, phi(8)},
  };
  const VerifyReport report = symbolic_verify(seq, IdealGate::cn(a, b), c);
  CHECK(report.permutation_ok);
  CHECK_FALSE(report.phases_equal);
  CHECK(report.detail.find("independently of any pulse-phase choice") != std::string::npos);
}

TEST_CASE("trace of the twelve-pulse cn reproduces the running phase table") {
  // CN_{a,b} with a = i+1 = 2, b = i = 1 on L = 4; initial configuration
  // |0_{i+2} 1_{i+1} 0_i 0_{i-1}> = bits q3=0,q2=1,q1=0,q0=0.
  const ChainConfig c = cfg();
  const GatePlan plan = compile_cn(2, 1, c);
  const auto rows = trace_sequence(plan.qpulses, 0b0100u, c);
  REQUIRE(rows.size() == 12);

  const SymbolicPhase running_expected[12] = {
      sp_pi(1) - Rational(1, 2) * th() - Th(),
      sp_pi(Rational(3, 2)) - Rational(3) * th() - ga(),
      -(Rational(3) * th()) - ga(),
      sp_pi(Rational(5, 4)) - th() - Rational(4) * Th(),
      sp_pi(Rational(5, 4)) - Rational(2) * th() - Rational(4) * Th(),
      sp_pi(Rational(5, 4)) - Rational(3) * th() - Rational(4) * Th() - ga(),
      sp_pi(Rational(7, 4)) - Rational(3) * th() - Rational(2) * Th(),
      sp_pi(Rational(7, 4)) - Rational(2) * th() - Rational(2) * Th(),
      sp_pi(Rational(7, 4)) - th() - Rational(2) * Th(),
      sp_pi(Rational(3, 4)) - Rational(1, 2) * th() - Th(),
      sp_pi(Rational(5, 4)) - Rational(1, 2) * th() - Th(),
      sp_pi(Rational(1, 4)),
  };
  const std::uint32_t state_expected[12] = {
      0b0100, 0b0110, 0b0100, 0b0000, 0b0000, 0b0000,
      0b0010, 0b0010, 0b0010, 0b0010, 0b0110, 0b0110,
  };
  for (int n = 0; n < 12; ++n) {
    CAPTURE(n);
    CHECK(rows[n].running.equivalent_mod_2pi(running_expected[n]));
    CHECK(rows[n].state_after == state_expected[n]);
  }
}

TEST_CASE("long-range cn plan verifies symbolically end to end") {
  const ChainConfig c = cfg(4);
  const GatePlan plan = compile_long_range_cn(0, 3, c);
  const VerifyReport report = symbolic_verify(plan, c);
  CHECK(report.permutation_ok);
  CHECK(report.phases_equal);
  CHECK(report.rows.size() == 16);
}

TEST_CASE("verifier flags a wrong ideal as a permutation mismatch") {
  const ChainConfig c = cfg();
  const GatePlan plan = compile_not(1, c);
  const VerifyReport report = symbolic_verify(plan.qpulses, IdealGate::not_gate(2), c);
  CHECK_FALSE(report.permutation_ok);
}

TEST_CASE("verifier rejects partial rotations and non-permutation ideals") {
  const ChainConfig c = cfg();
  const GatePlan rot = compile_rotation(1, 0.5, 0.0, c);
  CHECK_THROWS_AS(symbolic_verify(rot.qpulses, IdealGate::not_gate(1), c),
                  std::invalid_argument);
  const GatePlan plan = compile_not(1, c);
  CHECK_THROWS_AS(symbolic_verify(plan.qpulses, IdealGate::rotation(1, 0.5, 0.0), c),
                  std::invalid_argument);
}

TEST_CASE("rotation sequence at rho = 1, phi = 0 verifies as a flip with common phase") {
  const ChainConfig c = cfg(3);
  for (int j : {0, 1}) {
    GatePlan plan = compile_rotation(j, 1.0, 0.0, c);
    // substitute the rotation argument phi = 0 to get a fixed-phase sequence
    for (auto& qp : plan.qpulses)
      qp.phase -= SymbolicPhase::sym("phi", qp.phase.coeff("phi"));
    const VerifyReport report = symbolic_verify(plan.qpulses, IdealGate::not_gate(j), c);
    CAPTURE(j);
    CHECK(report.permutation_ok);
    CHECK(report.phases_equal);
    // U(0) at rho = 1 sends |q> to i|flip q>: common phase 3*pi/2 relative
    // to the bare Not permutation
    CHECK(report.common_phase.equivalent_mod_2pi(sp_pi(Rational(3, 2))));
  }
}

TEST_CASE("verifier rows match the exact dynamics for an arbitrary sequence") {
  // The eight-pulse CN candidate with arbitrary concrete phases: every
  // configuration's symbolic phase, evaluated numerically, must match the
  // full simulation.  This pins the flip-row direction convention: the
  // transferred amplitude carries e^{-i phi_pulse} from the lower state and
  // e^{+i phi_pulse} from the upper one.
  ChainConfig c;
  c.L = 4;
  c.w = 1e6;
  c.delta_omega = 1e5;
  c.J = 1.0;
  c.k = 2;
  const double ph[9] = {0, 0.11, 0.23, 0.31, 0.43, 0.53, 0.61, 0.73, 0.83};
  auto phi = [](int n) { return SymbolicPhase::sym("phi" + std::to_string(n)); };
  const int a = 1, b = 2;
  const std::vector<QPulse> seq = {
      {b, PulseClass::P11, 1.0, phi(1)}, {a, PulseClass::P00, 1.0, phi(2)},
      {a, PulseClass::P10, 1.0, phi(3)}, {a, PulseClass::P11, 1.0, phi(4)},
      {b, PulseClass::P00, 1.0, phi(5)}, {a, PulseClass::P00, 1.0, phi(6)},
      {a, PulseClass::P10, 1.0, phi(7)}, {a, PulseClass::P11, 1.0, phi(8)},
  };
  const VerifyReport report = symbolic_verify(seq, IdealGate::cn(a, b), c);
  REQUIRE(report.permutation_ok);
  REQUIRE(report.relevant_qubits.size() == 4);

  SymbolTable table = protocol_symbols(c);
  for (int n = 1; n <= 8; ++n) table["phi" + std::to_string(n)] = ph[n];

  Propagator prop(c);
  for (const auto& row : report.rows) {
    // rows are packed over the sorted relevant qubits {0,1,2,3}
    QuantumState st = QuantumState::basis(4, row.bits_in);
    double t = 0.0;
    for (const auto& qp : seq) {
      const PulseProgram prog =
          compile_q_pulse(qp.qubit, qp.cls, qp.phase.evaluate(table), 1.0, t, c);
      for (const auto& p : prog.pulses) st = prop.apply(st, p);
      t = st.time;
    }
    CAPTURE(row.bits_in);
    CHECK(std::norm(st.amplitudes[row.bits_out]) > 1.0 - 1e-6);
    const double predicted = row.phase.evaluate(table);
    // non-resonant phase slop accumulates per pulse (~2e-5 rad each here)
    CHECK(std::abs(wrap_angle(std::arg(st.amplitudes[row.bits_out]) - predicted)) < 1e-3);
  }
}
