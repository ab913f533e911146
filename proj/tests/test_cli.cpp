#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "spinpulse/cli.hpp"
#include "spinpulse/experiments.hpp"

using namespace spinpulse;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("spinpulse_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write_config(const TempDir& dir, int L) {
  ChainConfig c;
  c.L = L;
  c.w = 1e5;
  c.delta_omega = 1e4;
  c.J = 1.0;
  c.k = 2;
  const std::string p = dir.file("chain.cfg");
  c.save(p);
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("compile subcommand writes a loadable program") {
  TempDir dir;
  const std::string cfg = write_config(dir, 4);
  const std::string out = dir.file("prog.txt");
  CHECK(dispatch({"compile", "--gate", "not 0", "--config", cfg, "--out", out}) == kExitOk);
  const PulseProgram prog = PulseProgram::load(out);
  CHECK(prog.pulses.size() == 2);  // edge Not: two single pulses
  CHECK(prog.q_pulse_count == 2);

  const std::string jout = dir.file("prog.json");
  CHECK(dispatch({"compile", "--gate", "cn 1 2", "--config", cfg, "--out", jout, "--format",
                  "json"}) == kExitOk);
  CHECK(PulseProgram::load(jout).q_pulse_count == 12);
}

TEST_CASE("a compiled program file re-simulates bit-identically") {
  TempDir dir;
  ChainConfig c;
  c.L = 4;
  c.w = 1e5;
  c.delta_omega = 1e4;
  c.J = 1.0;
  c.k = 2;
  const std::string cfgp = write_config(dir, 4);
  const std::string out = dir.file("prog.txt");
  REQUIRE(dispatch({"compile", "--gate", "cn 1 2", "--config", cfgp, "--out", out}) == kExitOk);

  const PulseProgram from_file = PulseProgram::load(out);
  const PulseProgram in_memory = lower(compile_cn(1, 2, c), c);
  const QuantumState init = random_superposition(4, 11);
  Propagator p1(c), p2(c);
  const QuantumState a = simulate_program(p1, from_file, init);
  const QuantumState b = simulate_program(p2, in_memory, init);
  for (std::size_t j = 0; j < a.amplitudes.size(); ++j)
    CHECK(a.amplitudes[j] == b.amplitudes[j]);
}

TEST_CASE("simulate subcommand writes a report and prints the summary") {
  TempDir dir;
  const std::string cfg = write_config(dir, 4);
  const std::string out = dir.file("report.json");
  CHECK(dispatch({"simulate", "--gate", "cn 0 3", "--config", cfg, "--seed", "1", "--out", out,
                  "--format", "json"}) == kExitOk);
  const std::string content = slurp(out);
  CHECK(content.find("max_phase_error") != std::string::npos);
}

TEST_CASE("verify subcommand: pass and failure exit codes") {
  TempDir dir;
  const std::string cfg = write_config(dir, 4);
  CHECK(dispatch({"verify", "--gate", "cn 1 2", "--config", cfg}) == kExitOk);
  CHECK(dispatch({"verify", "--gate", "not 2", "--config", cfg}) == kExitOk);
  // odd k breaks the interior CN equalization: distinct verification exit code
  CHECK(dispatch({"verify", "--gate", "cn 1 2", "--config", cfg, "--k", "3"}) ==
        kExitVerifyFailed);
}

TEST_CASE("inspect-params dumps the composite parameter block") {
  TempDir dir;
  const std::string cfg = write_config(dir, 4);
  const std::string out = dir.file("params.txt");
  CHECK(dispatch({"inspect-params", "--config", cfg, "--rho", "0.5", "--out", out}) == kExitOk);
  const std::string content = slurp(out);
  CHECK(content.find("omega_corr") != std::string::npos);
  CHECK(content.find("rho = 0.5") != std::string::npos);
}

TEST_CASE("sweep subcommand emits the three CSV files") {
  TempDir dir;
  const std::string cfg = write_config(dir, 3);
  const std::string stem = dir.file("sweep");
  CHECK(dispatch({"sweep", "--gate", "cn 0 end", "--config", cfg, "--grid", "L=3,4;seed=1",
                  "--out", stem}) == kExitOk);
  for (const char* suffix : {"_states.csv", "_summary.csv", "_series.csv"}) {
    const std::string content = slurp(stem + suffix);
    CHECK(content.find("units") != std::string::npos);
    CHECK(content.find("L,delta_omega,k,seed") != std::string::npos);
  }
}

TEST_CASE("bad usage and missing files map to distinct exit codes") {
  TempDir dir;
  const std::string cfg = write_config(dir, 4);
  CHECK(dispatch({"simulate", "--gate", "warp 3", "--config", cfg}) == kExitUsage);
  CHECK(dispatch({"simulate", "--gate", "cn 0 9", "--config", cfg}) == kExitUsage);
  CHECK(dispatch({"simulate", "--gate", "not 0", "--config", dir.file("missing.cfg")}) ==
        kExitIoError);
  CHECK(dispatch({"frobnicate"}) == kExitUsage);
  CHECK(dispatch({"compile", "--config", cfg}) == kExitUsage);  // --gate required
}

TEST_CASE("deterministic outputs for identical invocations") {
  TempDir dir;
  const std::string cfg = write_config(dir, 3);
  const std::string out1 = dir.file("r1.json");
  const std::string out2 = dir.file("r2.json");
  REQUIRE(dispatch({"simulate", "--gate", "swap 0", "--config", cfg, "--seed", "5", "--out",
                    out1, "--format", "json"}) == kExitOk);
  REQUIRE(dispatch({"simulate", "--gate", "swap 0", "--config", cfg, "--seed", "5", "--out",
                    out2, "--format", "json"}) == kExitOk);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("rotation gates run through simulate") {
  TempDir dir;
  const std::string cfg = write_config(dir, 4);
  const std::string out = dir.file("rot.txt");
  CHECK(dispatch({"simulate", "--gate", "rot 2 0.5 0.3", "--config", cfg, "--seed", "7",
                  "--out", out}) == kExitOk);
  const std::string content = slurp(out);
  CHECK(content.find("gate = rot 2 0.5 0.3") != std::string::npos);
  CHECK(dispatch({"simulate", "--gate", "rot 2 1.5 0.0", "--config", cfg}) == kExitUsage);
}
