#include "spinpulse/dynamics.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace spinpulse {

namespace {

constexpr double kNormTolerance = 1e-6;
constexpr double kPhaseFloor = 1e-12;  // |b_j|^2 below this: phase undefined

// Rotating-frame diagonal h_p = -sum_k (omega_k - nu) s_k - 2J sum s_k s_{k+1}.
// Equals E_p + nu*N_p; the frame factors use the same values so that a pulse
// with zero drive cancels exactly.
Eigen::VectorXd rotating_diagonal(const ChainConfig& cfg, double nu) {
  const int dim = 1 << cfg.L;
  Eigen::VectorXd h(dim);
  for (int p = 0; p < dim; ++p) {
    double e = 0.0;
    double s_prev = 0.0;
    for (int i = 0; i < cfg.L; ++i) {
      const double s = ((p >> i) & 1) == 0 ? 0.5 : -0.5;
      e -= (cfg.omega(i) - nu) * s;
      if (i > 0) e -= 2.0 * cfg.J * s_prev * s;
      s_prev = s;
    }
    h(p) = e;
  }
  return h;
}

struct Decomposition {
  Eigen::MatrixXd vectors;     // orthonormal eigenvectors of H_rot(phi = 0)
  Eigen::VectorXd eigenvalues;
  Eigen::VectorXd hdiag;       // rotating-frame diagonal, for the frame factors
};

// H_rot at phi = 0 is real symmetric: diagonal h_p, off-diagonal -Omega/2
// between single-bit-flip partners.  The pulse phase is restored afterwards
// by conjugation with diag(e^{i phi N_p}).
Decomposition decompose(const ChainConfig& cfg, double nu, double omega_rabi) {
  const int dim = 1 << cfg.L;
  Decomposition d;
  d.hdiag = rotating_diagonal(cfg, nu);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  h.diagonal() = d.hdiag;
  const double v = -0.5 * omega_rabi;
  for (int p = 0; p < dim; ++p) {
    for (int i = 0; i < cfg.L; ++i) {
      if (((p >> i) & 1) == 0) {
        const int q = p | (1 << i);
        h(q, p) = v;
        h(p, q) = v;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("apply_pulse: eigendecomposition failed");
  d.vectors = solver.eigenvectors();
  d.eigenvalues = solver.eigenvalues();
  return d;
}

QuantumState evolve(const ChainConfig& cfg, const Decomposition& d, const QuantumState& state,
                    const PulseSpec& pulse) {
  const int dim = 1 << cfg.L;
  if (static_cast<int>(state.amplitudes.size()) != dim)
    throw std::invalid_argument("apply_pulse: state dimension does not match config");
  const double n = state.norm();
  if (std::abs(n - 1.0) > kNormTolerance)
    throw std::invalid_argument("apply_pulse: state is not normalized");
  if (std::abs(state.time - pulse.t0) > 1e-9 * std::max(1.0, std::abs(pulse.t0)))
    throw std::invalid_argument("apply_pulse: state.time does not match pulse.t0");

  // N_p = sum_k s_k; enters both the rotating-frame factor and the
  // phi-conjugation that restores the pulse phase.
  Eigen::VectorXcd pre(dim), post(dim);
  for (int p = 0; p < dim; ++p) {
    const double n_p = 0.5 * (cfg.L - 2 * std::popcount(static_cast<unsigned>(p)));
    const double u = d.hdiag(p) * pulse.t0 + pulse.phi * n_p;
    const cplx zu = std::polar(1.0, u);
    pre(p) = std::conj(zu);
    post(p) = zu * std::polar(1.0, d.hdiag(p) * pulse.tau);
  }

  Eigen::Map<const Eigen::VectorXcd> c0(state.amplitudes.data(), dim);
  Eigen::VectorXcd x = pre.cwiseProduct(c0);
  Eigen::VectorXcd y = d.vectors.transpose() * x;
  for (int p = 0; p < dim; ++p) y(p) *= std::polar(1.0, -d.eigenvalues(p) * pulse.tau);
  x = d.vectors * y;

  QuantumState out;
  out.amplitudes.resize(dim);
  out.time = pulse.t0 + pulse.tau;
  for (int p = 0; p < dim; ++p) out.amplitudes[p] = post(p) * x(p);
  return out;
}

}  // namespace

void PulseSpec::validate() const {
  if (!(omega_rabi >= 0)) throw std::invalid_argument("PulseSpec: omega_rabi must be >= 0");
  if (!(tau >= 0)) throw std::invalid_argument("PulseSpec: tau must be >= 0");
  if (!(t0 >= 0)) throw std::invalid_argument("PulseSpec: t0 must be >= 0");
}

QuantumState QuantumState::basis(int L, std::uint32_t index, double time) {
  if (L < 1 || L > 14) throw std::invalid_argument("QuantumState::basis: bad qubit count");
  if (index >= (1u << L)) throw std::invalid_argument("QuantumState::basis: index out of range");
  QuantumState s;
  s.amplitudes.assign(std::size_t(1) << L, cplx(0.0, 0.0));
  s.amplitudes[index] = cplx(1.0, 0.0);
  s.time = time;
  return s;
}

int QuantumState::num_qubits() const {
  const auto dim = amplitudes.size();
  int L = 0;
  while ((std::size_t(1) << L) < dim) ++L;
  if ((std::size_t(1) << L) != dim)
    throw std::logic_error("QuantumState: dimension is not a power of two");
  return L;
}

double QuantumState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

void QuantumState::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write state file: " + path);
  out.precision(17);
  out << "# quantum state: index re im (interaction picture, t = " << time << ")\n";
  for (std::size_t j = 0; j < amplitudes.size(); ++j)
    out << j << " " << amplitudes[j].real() << " " << amplitudes[j].imag() << "\n";
}

QuantumState QuantumState::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open state file: " + path);
  QuantumState s;
  std::vector<std::pair<std::size_t, cplx>> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::size_t j;
    double re, im;
    if (std::sscanf(line.c_str(), "%zu %lf %lf", &j, &re, &im) != 3)
      throw std::runtime_error("bad state record: " + line);
    records.emplace_back(j, cplx(re, im));
  }
  std::size_t dim = 1;
  while (dim < records.size()) dim <<= 1;
  if (dim != records.size()) throw std::runtime_error("state file is not a full register");
  s.amplitudes.assign(dim, cplx(0.0, 0.0));
  for (const auto& [j, a] : records) s.amplitudes.at(j) = a;
  return s;
}

std::pair<cplx, cplx> two_level_evolution(double delta, double omega_rabi, double phi, double tau,
                                          double t0, cplx c_lower, cplx c_upper) {
  const double lambda = std::hypot(delta, omega_rabi);
  if (lambda == 0.0) return {c_lower, c_upper};
  const double half = 0.5 * lambda * tau;
  const double ch = std::cos(half);
  const double sh = std::sin(half);
  const cplx i(0.0, 1.0);

  const cplx stay_lower = (ch + i * (delta / lambda) * sh) * std::polar(1.0, -0.5 * tau * delta);
  const cplx stay_upper = (ch - i * (delta / lambda) * sh) * std::polar(1.0, 0.5 * tau * delta);
  const cplx go_up = i * (omega_rabi / lambda) * sh *
                     std::polar(1.0, t0 * delta + 0.5 * tau * delta - phi);
  const cplx go_down = i * (omega_rabi / lambda) * sh *
                       std::polar(1.0, -t0 * delta - 0.5 * tau * delta + phi);

  return {stay_lower * c_lower + go_down * c_upper, stay_upper * c_upper + go_up * c_lower};
}

QuantumState apply_pulse(const QuantumState& state, const ChainConfig& config,
                         const PulseSpec& pulse) {
  pulse.validate();
  const Decomposition d = decompose(config, pulse.nu, pulse.omega_rabi);
  return evolve(config, d, state, pulse);
}

double wrap_angle(double x) {
  x = std::remainder(x, 2.0 * std::numbers::pi);
  if (x <= -std::numbers::pi) x += 2.0 * std::numbers::pi;
  return x;
}

StateComparison compare_states(const QuantumState& a, const QuantumState& b) {
  if (a.amplitudes.size() != b.amplitudes.size())
    throw std::invalid_argument("compare_states: dimension mismatch");
  StateComparison r;
  cplx overlap(0.0, 0.0);
  for (std::size_t j = 0; j < a.amplitudes.size(); ++j)
    overlap += std::conj(b.amplitudes[j]) * a.amplitudes[j];
  r.fidelity = std::norm(overlap);
  r.global_phase = std::arg(overlap);
  for (std::size_t j = 0; j < a.amplitudes.size(); ++j) {
    const double pa = std::norm(a.amplitudes[j]);
    const double pb = std::norm(b.amplitudes[j]);
    r.max_prob_dev = std::max(r.max_prob_dev, std::abs(pa - pb));
    if (pb > kPhaseFloor) {
      const double dev = wrap_angle(std::arg(a.amplitudes[j]) - std::arg(b.amplitudes[j]) -
                                    r.global_phase);
      r.max_phase_dev = std::max(r.max_phase_dev, std::abs(dev));
    }
  }
  return r;
}

struct Propagator::Impl {
  std::map<std::pair<double, double>, Decomposition> cache;
};

Propagator::Propagator(const ChainConfig& config) : config_(config), impl_(new Impl) {
  config_.validate();
}
Propagator::~Propagator() = default;
Propagator::Propagator(Propagator&&) noexcept = default;
Propagator& Propagator::operator=(Propagator&&) noexcept = default;

QuantumState Propagator::apply(const QuantumState& state, const PulseSpec& pulse) {
  pulse.validate();
  const std::pair<double, double> key{pulse.nu, pulse.omega_rabi};
  auto it = impl_->cache.find(key);
  if (it == impl_->cache.end())
    it = impl_->cache.emplace(key, decompose(config_, pulse.nu, pulse.omega_rabi)).first;
  return evolve(config_, it->second, state, pulse);
}

}  // namespace spinpulse
