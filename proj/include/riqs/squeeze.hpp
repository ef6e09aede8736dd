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

#pragma once

// Collective spin squeezing of lattice atoms under the Ising-x coupling
// H = sum_{k != l} chi_kl h_k h_l j_x,k j_x,l (ordered pairs, so every
// coupled pair contributes twice), starting from all atoms in |-1/2>.
// Times are in units of 1/chi.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "riqs/hilbert.hpp"
#include "riqs/lattice.hpp"

namespace riqs::squeeze {

using hilbert::StateVector;
using hilbert::TimeSeries;
using lattice::Boundary;
using lattice::CouplingMap;
using lattice::LatticeConfig;

/// First and second moments of (J_x, J_y, J_z) summed over the register.
struct SpinMoments {
  int n_atoms = 0;
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  double var_x = 0.0;
  double var_y = 0.0;
  double cov_xy = 0.0;  // <{J_x, J_y}>/2 - <J_x><J_y>

  /// Variance of J_theta = cos(theta) J_x + sin(theta) J_y.
  double variance(double theta) const;
  /// N (Delta J_theta)^2 / <J_z>^2; throws NumericalError when <J_z>^2 is
  /// below 1e-12 N^2.
  double xi_squared(double theta) const;
  bool xi_defined() const;
};

SpinMoments moments(const StateVector& psi);

StateVector ising_x_evolve(const LatticeConfig& cfg, const CouplingMap& map, double t);

Eigen::Vector3d mean_spin(const StateVector& psi);
double variance_theta(const StateVector& psi, double theta);
double xi_squared(const StateVector& psi, double theta);

/// chi for every pair of occupied sites within n_neighbors lattice sites
/// (ring distance when periodic). n_neighbors must be in [1, n_sites - 1].
CouplingMap neighbor_coupling_map(const LatticeConfig& cfg, int n_neighbors, Boundary boundary, double chi = 1.0);
CouplingMap neighbor_coupling_map(const LatticeConfig& cfg, int n_neighbors, double chi = 1.0);

/// Ising-x dynamics of the all-down state split into the connected
/// components of the coupling graph. The state is a product over
/// components, so moments add and each component evolves on its own
/// (much smaller) register.
class IsingXDynamics {
 public:
  IsingXDynamics(const LatticeConfig& cfg, const CouplingMap& map);

  SpinMoments moments_at(double t) const;
  int n_atoms() const { return n_atoms_; }
  std::size_t n_components() const { return components_.size(); }

 private:
  struct Component {
    int size = 0;
    std::vector<double> energies;  // x basis
    hilbert::CVector initial_x;    // all-down state in the x basis
  };
  std::vector<Component> components_;
  int n_atoms_ = 0;
};

struct ThetaMinimum {
  double theta = 0.0;
  double variance = 0.0;
};

/// Minimum of the variance over theta: 49-point scan of [-pi/2, pi/2)
/// refined by Brent's method (golden section + parabolic steps) to `tol`.
/// A flat variance reports theta = -pi/4.
ThetaMinimum minimize_theta(const SpinMoments& m, double tol = 1e-6);

struct SqueezingResult {
  double t_opt = 0.0;
  double theta_opt = 0.0;
  double xi2_min = 1.0;
  Eigen::Vector3d mean_spin = Eigen::Vector3d::Zero();
  /// Per grid time: variance_min, theta_min, xi2 (NaN where undefined), jz.
  TimeSeries variance_curve;
};

struct MinimizeOptions {
  double theta_tol = 1e-6;
  double t_tol = 1e-8;
  bool refine_time = true;
};

/// Minimum of xi^2 over the time grid and theta, refined in time around the
/// best grid point. Throws NumericalError if xi^2 is undefined at every grid
/// time.
SqueezingResult minimize_xi(const LatticeConfig& cfg, const CouplingMap& map, std::span<const double> times,
                            const MinimizeOptions& options = {});
SqueezingResult minimize_xi(const LatticeConfig& cfg, const CouplingMap& map, std::span<const double> times,
                            double theta_tol);

struct TrialRecord {
  std::uint64_t seed = 0;
  int n_sites = 0;
  double xi2_min = 0.0;
  double t_opt = 0.0;
  double theta_opt = 0.0;
};

struct MonteCarloResult {
  double mean_xi2 = 0.0;
  double std_error = 0.0;
  std::vector<TrialRecord> trials;  // ordered by trial index
};

struct MonteCarloOptions {
  std::vector<double> times;  // empty: default_squeezing_grid()
  MinimizeOptions minimize;
  Boundary boundary = Boundary::open;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// chi t in (0, 1.5], 61 points including 0.
std::vector<double> default_squeezing_grid();

/// Seed of trial `index` in a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, int index);

MonteCarloResult monte_carlo_xi(double p, int n_neighbors, int n_atoms, int trials, std::uint64_t seed,
                                const MonteCarloOptions& options = {});

/// Rotates every atom so that (e^{-i theta/2}|1/2> + e^{i theta/2}|-1/2>)/sqrt2
/// becomes |1/2>, then returns P(N_up = k) for k = 0..N.
std::vector<double> counting_statistics(const StateVector& psi, double theta);

}  // namespace riqs::squeeze
