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

#include "riqs/squeeze.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <thread>

#include <boost/math/tools/minima.hpp>

#include "riqs/errors.hpp"
#include "riqs/qubit_ops.hpp"

namespace riqs::squeeze {
namespace {

using hilbert::Complex;
using hilbert::CVector;
using hilbert::SpinAxis;
namespace qubits = hilbert::qubits;

constexpr int kThetaSeeds = 49;
constexpr double kUndefined = std::numeric_limits<double>::infinity();

int brent_bits(double tol) {
  const int bits = static_cast<int>(std::ceil(1.0 - std::log2(tol)));
  return std::clamp(bits, 8, std::numeric_limits<double>::digits / 2);
}

std::vector<int> register_qubits(const CVector& amps) {
  std::vector<int> q(static_cast<std::size_t>(qubits::register_size(amps)));
  std::iota(q.begin(), q.end(), 0);
  return q;
}

double wrap_theta(double theta) {
  // into [-pi/2, pi/2)
  const double pi = std::numbers::pi;
  double w = std::fmod(theta + pi / 2, pi);
  if (w < 0) w += pi;
  return w - pi / 2;
}

// Adds x to (sum, carry) with Neumaier compensation.
void compensated_add(double& sum, double& carry, double x) {
  const double t = sum + x;
  carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
  sum = t;
}

}  // namespace

// Moments -----------------------------------------------------------------

double SpinMoments::variance(double theta) const {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return c * c * var_x + s * s * var_y + 2.0 * c * s * cov_xy;
}

bool SpinMoments::xi_defined() const {
  const double n = static_cast<double>(n_atoms);
  return mean.z() * mean.z() >= 1e-12 * n * n;
}

double SpinMoments::xi_squared(double theta) const {
  if (!xi_defined()) throw NumericalError("squeezing parameter undefined: mean spin <J_z> vanishes");
  return static_cast<double>(n_atoms) * variance(theta) / (mean.z() * mean.z());
}

SpinMoments moments(const StateVector& psi) {
  const CVector& a = psi.amps();
  const auto q = register_qubits(a);
  const CVector jx = qubits::apply_spin_sum(a, SpinAxis::x, q);
  const CVector jy = qubits::apply_spin_sum(a, SpinAxis::y, q);
  const auto sz = qubits::local_sz(a);

  SpinMoments m;
  m.n_atoms = static_cast<int>(q.size());
  m.mean.x() = a.dot(jx).real();
  m.mean.y() = a.dot(jy).real();
  m.mean.z() = std::accumulate(sz.begin(), sz.end(), 0.0);
  m.var_x = jx.squaredNorm() - m.mean.x() * m.mean.x();
  m.var_y = jy.squaredNorm() - m.mean.y() * m.mean.y();
  m.cov_xy = jx.dot(jy).real() - m.mean.x() * m.mean.y();
  return m;
}

StateVector ising_x_evolve(const LatticeConfig& cfg, const CouplingMap& map, double t) {
  return lattice::random_structure_evolve(lattice::all_down(cfg), cfg, map, t);
}

Eigen::Vector3d mean_spin(const StateVector& psi) { return moments(psi).mean; }

double variance_theta(const StateVector& psi, double theta) { return moments(psi).variance(theta); }

double xi_squared(const StateVector& psi, double theta) { return moments(psi).xi_squared(theta); }

// Coupling maps -------------------------------------------------------------

CouplingMap neighbor_coupling_map(const LatticeConfig& cfg, int n_neighbors, Boundary boundary, double chi) {
  cfg.validate();
  if (n_neighbors < 1) throw ValidationError("n_neighbors must be >= 1");
  if (n_neighbors >= cfg.n_sites) throw ValidationError("n_neighbors exceeds the lattice extent");
  const int n = cfg.n_sites;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    if (!cfg.occupations[static_cast<std::size_t>(k)]) continue;
    for (int l = k + 1; l < n; ++l) {
      if (!cfg.occupations[static_cast<std::size_t>(l)]) continue;
      int d = l - k;
      if (boundary == Boundary::periodic) d = std::min(d, n - d);
      if (d <= n_neighbors) m(k, l) = m(l, k) = chi;
    }
  }
  return CouplingMap(std::move(m));
}

CouplingMap neighbor_coupling_map(const LatticeConfig& cfg, int n_neighbors, double chi) {
  return neighbor_coupling_map(cfg, n_neighbors, cfg.boundary, chi);
}

// Component dynamics ----------------------------------------------------

IsingXDynamics::IsingXDynamics(const LatticeConfig& cfg, const CouplingMap& map) {
  cfg.validate();
  if (map.n_sites() != cfg.n_sites) throw ValidationError("coupling map size differs from the lattice");
  const auto sites = cfg.atom_sites();
  n_atoms_ = static_cast<int>(sites.size());

  std::vector<int> parent(sites.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  };
  for (int a = 0; a < n_atoms_; ++a) {
    for (int b = a + 1; b < n_atoms_; ++b) {
      if (map(sites[static_cast<std::size_t>(a)], sites[static_cast<std::size_t>(b)]) != 0.0) {
        parent[static_cast<std::size_t>(find(a))] = find(b);
      }
    }
  }

  std::vector<std::vector<int>> groups(sites.size());
  for (int a = 0; a < n_atoms_; ++a) groups[static_cast<std::size_t>(find(a))].push_back(a);

  for (const auto& g : groups) {
    if (g.empty()) continue;
    // Sub-lattice holding only this component's atoms at their original
    // sites, so map indices stay valid.
    LatticeConfig sub = cfg;
    std::fill(sub.occupations.begin(), sub.occupations.end(), std::uint8_t{0});
    for (int a : g) sub.occupations[static_cast<std::size_t>(sites[static_cast<std::size_t>(a)])] = 1;
    Component c;
    c.size = static_cast<int>(g.size());
    c.energies = lattice::ising_x_energies(sub, map);
    c.initial_x = lattice::all_down(sub).amps();
    lattice::to_x_basis(c.initial_x);
    components_.push_back(std::move(c));
  }
}

SpinMoments IsingXDynamics::moments_at(double t) const {
  SpinMoments total;
  total.n_atoms = n_atoms_;
  for (const auto& c : components_) {
    const std::vector<int> dims(static_cast<std::size_t>(c.size), 2);
    CVector a;
    if (t == 0.0) {
      // Skip the basis round trip so the coherent state stays exact.
      a = CVector::Zero(c.initial_x.size());
      a(0) = 1.0;
    } else {
      a = c.initial_x;
      for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double ph = -c.energies[static_cast<std::size_t>(i)] * t;
        a(i) *= Complex(std::cos(ph), std::sin(ph));
      }
      lattice::to_x_basis(a);
    }
    const SpinMoments m = moments(StateVector(dims, std::move(a)));
    total.mean += m.mean;
    total.var_x += m.var_x;
    total.var_y += m.var_y;
    total.cov_xy += m.cov_xy;
  }
  return total;
}

// Optimization ------------------------------------------------------------

ThetaMinimum minimize_theta(const SpinMoments& m, double tol) {
  if (!(tol > 0.0)) throw ValidationError("theta tolerance must be positive");
  const double pi = std::numbers::pi;
  const double step = pi / kThetaSeeds;
  int best = 0;
  double lo = kUndefined;
  double hi = -kUndefined;
  for (int i = 0; i < kThetaSeeds; ++i) {
    const double v = m.variance(-pi / 2 + i * step);
    if (v < lo) {
      lo = v;
      best = i;
    }
    hi = std::max(hi, v);
  }
  if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi))) return {-pi / 4, m.variance(-pi / 4)};

  const double center = -pi / 2 + best * step;
  auto f = [&](double th) { return m.variance(th); };
  const auto [theta, value] = boost::math::tools::brent_find_minima(f, center - step, center + step, brent_bits(tol));
  if (value <= lo) return {wrap_theta(theta), value};
  return {wrap_theta(center), lo};
}

SqueezingResult minimize_xi(const LatticeConfig& cfg, const CouplingMap& map, std::span<const double> times,
                            double theta_tol) {
  MinimizeOptions o;
  o.theta_tol = theta_tol;
  return minimize_xi(cfg, map, times, o);
}

SqueezingResult minimize_xi(const LatticeConfig& cfg, const CouplingMap& map, std::span<const double> times,
                            const MinimizeOptions& options) {
  if (times.empty()) throw ValidationError("squeezing time grid is empty");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw ValidationError("squeezing time grid must be strictly increasing");
  }
  const IsingXDynamics dyn(cfg, map);
  const double n = static_cast<double>(dyn.n_atoms());

  struct Point {
    double xi2 = kUndefined;
    ThetaMinimum theta;
    SpinMoments m;
  };
  auto evaluate = [&](double t) {
    Point p;
    p.m = dyn.moments_at(t);
    p.theta = minimize_theta(p.m, options.theta_tol);
    if (p.m.xi_defined()) p.xi2 = n * p.theta.variance / (p.m.mean.z() * p.m.mean.z());
    return p;
  };

  SqueezingResult r;
  r.variance_curve = TimeSeries({"variance_min", "theta_min", "xi2", "jz"});
  std::size_t best = times.size();
  Point best_point;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const Point p = evaluate(times[i]);
    const double xi = std::isfinite(p.xi2) ? p.xi2 : std::numeric_limits<double>::quiet_NaN();
    r.variance_curve.append(times[i], {p.theta.variance, p.theta.theta, xi, p.m.mean.z()});
    if (std::isfinite(p.xi2) && (best == times.size() || p.xi2 < best_point.xi2)) {
      best = i;
      best_point = p;
    }
  }
  if (best == times.size()) throw NumericalError("squeezing parameter undefined at every grid time");

  double t_best = times[best];
  if (options.refine_time && times.size() > 1) {
    const double lo = times[best == 0 ? 0 : best - 1];
    const double hi = times[std::min(best + 1, times.size() - 1)];
    auto f = [&](double t) {
      const double v = evaluate(t).xi2;
      return std::isfinite(v) ? v : std::numeric_limits<double>::max();
    };
    const auto [t_ref, v_ref] = boost::math::tools::brent_find_minima(f, lo, hi, brent_bits(options.t_tol));
    if (v_ref < best_point.xi2) {
      t_best = t_ref;
      best_point = evaluate(t_ref);
    }
  }
  r.t_opt = t_best;
  r.theta_opt = best_point.theta.theta;
  r.xi2_min = best_point.xi2;
  r.mean_spin = best_point.m.mean;
  return r;
}

// Monte Carlo -------------------------------------------------------------

std::vector<double> default_squeezing_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 60; ++i) g.push_back(1.5 * i / 60.0);
  return g;
}

std::uint64_t trial_seed(std::uint64_t seed, int index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

MonteCarloResult monte_carlo_xi(double p, int n_neighbors, int n_atoms, int trials, std::uint64_t seed,
                                const MonteCarloOptions& options) {
  if (trials < 1) throw ValidationError("Monte Carlo needs trials >= 1");
  if (n_neighbors < 1) throw ValidationError("n_neighbors must be >= 1");
  if (!(p > 0.0) || p > 1.0) throw ValidationError("filling probability must be in (0, 1]");
  const std::vector<double> grid = options.times.empty() ? default_squeezing_grid() : options.times;

  MonteCarloResult out;
  out.trials.resize(static_cast<std::size_t>(trials));

  // Trials that draw the same filling share one evolution; at full filling
  // that is every trial.
  std::vector<LatticeConfig> fillings;
  std::vector<std::size_t> job_of(static_cast<std::size_t>(trials));
  std::map<std::vector<std::uint8_t>, std::size_t> seen;
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = trial_seed(seed, i);
    LatticeConfig cfg = lattice::sample_occupations(p, n_atoms, s);
    cfg.boundary = options.boundary;
    out.trials[static_cast<std::size_t>(i)].seed = s;
    out.trials[static_cast<std::size_t>(i)].n_sites = cfg.n_sites;
    const auto [it, fresh] = seen.emplace(cfg.occupations, fillings.size());
    if (fresh) fillings.push_back(std::move(cfg));
    job_of[static_cast<std::size_t>(i)] = it->second;
  }

  const int jobs = static_cast<int>(fillings.size());
  std::vector<SqueezingResult> results(fillings.size());
  std::vector<std::exception_ptr> errors(fillings.size());
  auto run_job = [&](int j) {
    const auto k = static_cast<std::size_t>(j);
    try {
      const LatticeConfig& cfg = fillings[k];
      const CouplingMap map = neighbor_coupling_map(cfg, std::min(n_neighbors, cfg.n_sites - 1), options.boundary);
      results[k] = minimize_xi(cfg, map, grid, options.minimize);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };

  unsigned workers = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs));
  if (workers <= 1) {
    for (int j = 0; j < jobs; ++j) run_job(j);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int j = next++; j < jobs; j = next++) run_job(j);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (std::size_t i = 0; i < out.trials.size(); ++i) {
    const SqueezingResult& r = results[job_of[i]];
    out.trials[i].xi2_min = r.xi2_min;
    out.trials[i].t_opt = r.t_opt;
    out.trials[i].theta_opt = r.theta_opt;
  }

  // Mean as first value + mean deviation: identical trials give the value
  // back bit for bit.
  const double ref = out.trials.front().xi2_min;
  double sum = 0.0;
  double carry = 0.0;
  for (const auto& t : out.trials) compensated_add(sum, carry, t.xi2_min - ref);
  out.mean_xi2 = ref + (sum + carry) / trials;
  if (trials > 1) {
    double ss = 0.0;
    double ss_carry = 0.0;
    for (const auto& t : out.trials) {
      const double d = t.xi2_min - out.mean_xi2;
      compensated_add(ss, ss_carry, d * d);
    }
    out.std_error = std::sqrt((ss + ss_carry) / (trials - 1) / trials);
  }
  return out;
}

// Counting statistics -----------------------------------------------------

std::vector<double> counting_statistics(const StateVector& psi, double theta) {
  const auto q = register_qubits(psi.amps());
  const int n = static_cast<int>(q.size());
  // Rows are <theta-| and <theta+| in the (|-1/2>, |+1/2>) basis.
  const Complex em = std::polar(M_SQRT1_2, -theta / 2);
  const Complex ep = std::polar(M_SQRT1_2, theta / 2);
  qubits::Gate u;
  u << em, -ep, em, ep;
  CVector a = psi.amps();
  qubits::apply_gate(a, q, u);
  std::vector<double> dist(static_cast<std::size_t>(n) + 1, 0.0);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    dist[static_cast<std::size_t>(std::popcount(static_cast<std::size_t>(i)))] += std::norm(a(i));
  }
  return dist;
}

}  // namespace riqs::squeeze
