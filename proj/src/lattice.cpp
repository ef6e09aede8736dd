// Copyright 2026 The RIQS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "riqs/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "riqs/errors.hpp"
#include "riqs/qubit_ops.hpp"

namespace riqs::lattice {
namespace {

using hilbert::Complex;
using hilbert::CVector;
using hilbert::SpinAxis;
namespace qubits = hilbert::qubits;

std::vector<int> all_qubits(int n) {
  std::vector<int> q(static_cast<std::size_t>(n));
  std::iota(q.begin(), q.end(), 0);
  return q;
}

void check_register(const StateVector& psi, const LatticeConfig& cfg) {
  if (psi.num_subsystems() != cfg.n_atoms() || psi.size() != (std::size_t{1} << cfg.n_atoms())) {
    throw ValidationError("state does not live on the occupied-site qubit register");
  }
}

// Multiply by e^{i phi} every amplitude with bit k = 1 and bit l = 0.
void phase_bonds(CVector& amps, int n, std::span<const std::pair<int, int>> bonds, double phi) {
  if (bonds.empty() || phi == 0.0) return;
  const auto size = static_cast<std::size_t>(amps.size());
  // Count how many bonds fire on each basis state; phases add up.
  std::vector<std::pair<std::size_t, std::size_t>> masks;
  masks.reserve(bonds.size());
  for (auto [k, l] : bonds) masks.emplace_back(qubits::mask(n, k), qubits::mask(n, l));
  std::vector<Complex> powers{Complex(1.0)};
  for (std::size_t i = 1; i <= masks.size(); ++i) powers.push_back(std::polar(1.0, phi * static_cast<double>(i)));
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t fired = 0;
    for (auto [mk, ml] : masks) fired += ((i & mk) != 0 && (i & ml) == 0) ? 1 : 0;
    if (fired) amps(static_cast<Eigen::Index>(i)) *= powers[fired];
  }
}

}  // namespace

// LatticeConfig -----------------------------------------------------------

LatticeConfig LatticeConfig::filled(int n_sites, Boundary boundary) {
  LatticeConfig cfg;
  cfg.n_sites = n_sites;
  cfg.boundary = boundary;
  cfg.occupations.assign(static_cast<std::size_t>(std::max(n_sites, 0)), 1);
  cfg.validate();
  return cfg;
}

void LatticeConfig::validate() const {
  if (n_sites < 1) throw ValidationError("lattice needs at least one site");
  if (occupations.size() != static_cast<std::size_t>(n_sites)) {
    throw ValidationError("occupation list length must equal n_sites");
  }
  for (auto h : occupations) {
    if (h > 1) throw ValidationError("occupations must be 0 or 1");
  }
  if (n_atoms() < 1) throw ValidationError("lattice holds no atoms");
  if (n_atoms() > 24) throw ValidationError("more than 24 atoms exceeds the state-vector budget");
  if (boundary == Boundary::periodic && n_sites < 3) throw ValidationError("a periodic lattice needs >= 3 sites");
}

int LatticeConfig::n_atoms() const {
  return static_cast<int>(std::count(occupations.begin(), occupations.end(), std::uint8_t{1}));
}

std::vector<int> LatticeConfig::atom_sites() const {
  std::vector<int> s;
  for (int k = 0; k < n_sites; ++k) {
    if (occupations[static_cast<std::size_t>(k)]) s.push_back(k);
  }
  return s;
}

int LatticeConfig::qubit_of(int site) const {
  if (site < 0 || site >= n_sites || !occupations[static_cast<std::size_t>(site)]) return -1;
  return static_cast<int>(std::count(occupations.begin(), occupations.begin() + site, std::uint8_t{1}));
}

int LatticeConfig::neighbor(int site, int direction) const {
  const int l = site + direction;
  if (boundary == Boundary::periodic) return ((l % n_sites) + n_sites) % n_sites;
  return (l < 0 || l >= n_sites) ? -1 : l;
}

std::vector<std::pair<int, int>> LatticeConfig::bonds(int direction) const {
  if (direction != 1 && direction != -1) throw ValidationError("displacement direction must be +1 or -1");
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < n_sites; ++k) {
    const int qk = qubit_of(k);
    const int ql = qubit_of(neighbor(k, direction));
    if (qk >= 0 && ql >= 0) out.emplace_back(qk, ql);
  }
  return out;
}

// Gates -------------------------------------------------------------------

StateVector all_down(const LatticeConfig& cfg) {
  cfg.validate();
  return StateVector::basis(std::vector<int>(static_cast<std::size_t>(cfg.n_atoms()), 2), 0);
}

StateVector displacement_gate(StateVector psi, const LatticeConfig& cfg, int direction, double phi) {
  cfg.validate();
  check_register(psi, cfg);
  const auto bonds = cfg.bonds(direction);
  phase_bonds(psi.data(), cfg.n_atoms(), bonds, phi);
  return psi;
}

StateVector global_pulse(StateVector psi, SpinAxis axis, double angle) {
  if (angle == 0.0) return psi;
  const int n = qubits::register_size(psi.amps());
  const auto q = all_qubits(n);
  qubits::apply_gate(psi.data(), q, qubits::spin_rotation(axis, angle));
  return psi;
}

StateVector hzz_step(StateVector psi, const LatticeConfig& cfg, double phi) {
  if (cfg.scheme == DisplacementScheme::forward) return displacement_gate(std::move(psi), cfg, +1, phi);
  psi = displacement_gate(std::move(psi), cfg, +1, phi / 2);
  return displacement_gate(std::move(psi), cfg, -1, phi / 2);
}

StateVector hxx_step(StateVector psi, const LatticeConfig& cfg, double phi) {
  // exp(-i pi/2 j_y) j_z exp(+i pi/2 j_y) = j_x
  constexpr double kQuarter = std::numbers::pi / 2;
  psi = global_pulse(std::move(psi), SpinAxis::y, -kQuarter);
  psi = hzz_step(std::move(psi), cfg, phi);
  return global_pulse(std::move(psi), SpinAxis::y, kQuarter);
}

StateVector hyy_step(StateVector psi, const LatticeConfig& cfg, double phi) {
  // exp(+i pi/2 j_x) j_z exp(-i pi/2 j_x) = j_y
  constexpr double kQuarter = std::numbers::pi / 2;
  psi = global_pulse(std::move(psi), SpinAxis::x, kQuarter);
  psi = hzz_step(std::move(psi), cfg, phi);
  return global_pulse(std::move(psi), SpinAxis::x, -kQuarter);
}

std::vector<double> residual_linear_field(const LatticeConfig& cfg) {
  cfg.validate();
  std::vector<double> c(static_cast<std::size_t>(cfg.n_atoms()), 0.0);
  if (cfg.scheme == DisplacementScheme::symmetric) return c;
  for (auto [k, l] : cfg.bonds(+1)) {
    c[static_cast<std::size_t>(k)] -= 0.5;
    c[static_cast<std::size_t>(l)] += 0.5;
  }
  return c;
}

StateVector trotter_evolve(StateVector psi, const LatticeConfig& cfg, const HeisenbergCouplings& c, double t_final,
                           int n_steps) {
  if (n_steps < 1) throw ValidationError("Trotter evolution needs n_steps >= 1");
  cfg.validate();
  check_register(psi, cfg);
  const double dt = t_final / n_steps;
  for (int s = 0; s < n_steps; ++s) {
    if (c.chi != 0.0) psi = hzz_step(std::move(psi), cfg, c.chi * dt);
    if (c.eta_c != 0.0) psi = hxx_step(std::move(psi), cfg, c.eta_c * dt);
    if (c.lambda_c != 0.0) psi = hyy_step(std::move(psi), cfg, c.lambda_c * dt);
  }
  return psi;
}

TimeSeries spin_wave_sim(const SpinWaveSetup& setup, std::span<const double> times) {
  if (setup.n_atoms < 1) throw ValidationError("spin wave needs at least one atom");
  if (setup.flip_index < 0 || setup.flip_index >= setup.n_atoms) throw ValidationError("flip_index out of range");
  if (setup.steps_per_interval < 1) throw ValidationError("steps_per_interval must be >= 1");
  if (times.empty()) throw ValidationError("empty time grid");
  if (times.front() < 0.0) throw ValidationError("time grid must start at t >= 0");

  LatticeConfig cfg = LatticeConfig::filled(setup.n_atoms, setup.boundary);
  cfg.scheme = setup.scheme;
  const int n = setup.n_atoms;
  StateVector psi = StateVector::basis(std::vector<int>(static_cast<std::size_t>(n), 2),
                                       qubits::mask(n, setup.flip_index));

  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) labels.push_back("jz_" + std::to_string(k));
  TimeSeries ts(std::move(labels));

  double now = 0.0;
  for (double t : times) {
    if (t < now) throw ValidationError("time grid must be increasing");
    if (t > now) {
      psi = trotter_evolve(std::move(psi), cfg, setup.couplings, t - now, setup.steps_per_interval);
      now = t;
    }
    ts.append(t, qubits::local_sz(psi.amps()));
  }
  const auto field = residual_linear_field(cfg);
  const bool edge_terms = std::any_of(field.begin(), field.end(), [](double c) { return c != 0.0; });
  ts.metadata()["boundary"] = setup.boundary == Boundary::open ? "open" : "periodic";
  ts.metadata()["scheme"] = setup.scheme == DisplacementScheme::forward ? "forward" : "symmetric";
  ts.metadata()["edge_linear_terms"] = edge_terms ? "present" : "none";
  return ts;
}

// Disorder ----------------------------------------------------------------

double SeededRng::uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

std::uint64_t SeededRng::below(std::uint64_t n) {
  if (n == 0) throw ValidationError("below(0) is empty");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return x % n;
}

LatticeConfig sample_occupations(double p, int n_atoms, std::uint64_t seed) {
  if (!(p > 0.0) || p > 1.0) throw ValidationError("filling probability must be in (0, 1]");
  if (n_atoms < 1) throw ValidationError("need at least one atom");
  SeededRng rng(seed);
  LatticeConfig cfg;
  cfg.seed = seed;
  int placed = 0;
  while (placed < n_atoms) {
    const bool filled = rng.uniform() < p;
    cfg.occupations.push_back(filled ? 1 : 0);
    placed += filled ? 1 : 0;
  }
  cfg.n_sites = static_cast<int>(cfg.occupations.size());
  cfg.validate();
  return cfg;
}

StateVector thermal_pump(const StateVector& psi, const LatticeConfig& cfg, double fraction, std::uint64_t seed) {
  cfg.validate();
  check_register(psi, cfg);
  if (!(fraction >= 0.0 && fraction <= 1.0)) throw ValidationError("pump fraction must be in [0, 1]");
  Eigen::Index where = 0;
  const double peak = psi.amps().cwiseAbs2().maxCoeff(&where);
  if (peak < 1.0 - 1e-9) throw ValidationError("thermal pumping is defined only on z-basis product states");

  const int n = cfg.n_atoms();
  const int count = static_cast<int>(std::lround(fraction * n));
  std::vector<int> order = all_qubits(n);
  SeededRng rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
    std::swap(order[static_cast<std::size_t>(i)], order[j]);
  }
  auto index = static_cast<std::size_t>(where);
  for (int i = 0; i < count; ++i) index |= qubits::mask(n, order[static_cast<std::size_t>(i)]);
  return StateVector::basis(psi.dims(), index);
}

// Random structures -------------------------------------------------------

CouplingMap::CouplingMap(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw ValidationError("coupling map must be square");
  const Eigen::Index n = entries_.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (entries_(k, k) != 0.0) throw ValidationError("coupling map must have a zero diagonal");
    for (Eigen::Index l = k + 1; l < n; ++l) {
      const double a = entries_(k, l);
      const double b = entries_(l, k);
      if (std::abs(a - b) > 1e-15 * std::max(1.0, std::max(std::abs(a), std::abs(b)))) {
        throw ValidationError("coupling map must be symmetric");
      }
    }
  }
}

int CouplingMap::coupled_pairs() const {
  int count = 0;
  for (Eigen::Index k = 0; k < entries_.rows(); ++k) {
    for (Eigen::Index l = k + 1; l < entries_.cols(); ++l) count += entries_(k, l) != 0.0 ? 1 : 0;
  }
  return count;
}

std::vector<double> ising_x_energies(const LatticeConfig& cfg, const CouplingMap& map) {
  cfg.validate();
  if (map.n_sites() != cfg.n_sites) throw ValidationError("coupling map size differs from the lattice");
  const auto sites = cfg.atom_sites();
  const int n = cfg.n_atoms();
  struct Pair {
    std::size_t mk, ml;
    double weight;  // both orderings (k,l) and (l,k)
  };
  std::vector<Pair> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double chi = map(sites[static_cast<std::size_t>(a)], sites[static_cast<std::size_t>(b)]);
      if (chi != 0.0) pairs.push_back({qubits::mask(n, a), qubits::mask(n, b), 2.0 * chi});
    }
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> e(size, 0.0);
  for (std::size_t i = 0; i < size; ++i) {
    double acc = 0.0;
    for (const auto& pr : pairs) {
      // m = +1/2 for x-bit 0, -1/2 for x-bit 1
      const bool same = ((i & pr.mk) != 0) == ((i & pr.ml) != 0);
      acc += same ? 0.25 * pr.weight : -0.25 * pr.weight;
    }
    e[i] = acc;
  }
  return e;
}

void to_x_basis(CVector& amps) {
  const int n = qubits::register_size(amps);
  qubits::Gate h;
  h << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2;
  const auto q = all_qubits(n);
  qubits::apply_gate(amps, q, h);
}

StateVector random_structure_evolve(StateVector psi, const LatticeConfig& cfg, const CouplingMap& map, double t) {
  check_register(psi, cfg);
  const auto energies = ising_x_energies(cfg, map);
  to_x_basis(psi.data());
  psi = hilbert::evolve_diagonal(energies, std::move(psi), t);
  to_x_basis(psi.data());
  return psi;
}

}  // namespace riqs::lattice
