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

// Spin-1/2 atoms in a 1-D optical lattice driven only by global operations:
// state-dependent lattice displacements (a collision phase on |1>_k|0>_l)
// and resonant pulses on all atoms at once.
//
// The register holds one qubit per *occupied* site, in site order; |1> is
// spin up (+1/2). A displacement with phase phi on the bond k -> l applies
// exp(-i phi (j_z,k + 1/2)(j_z,l - 1/2)).

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "riqs/hilbert.hpp"

namespace riqs::lattice {

using hilbert::StateVector;
using hilbert::TimeSeries;

enum class Boundary { open, periodic };

/// How hzz_step realizes sum j_z j_z from displacements.
///  forward:   one displacement per bond (k -> k+1) with the full phase.
///             On an open chain this leaves a linear field
///             (j_z,last - j_z,first)/2 per unit phase at the chain ends.
///  symmetric: displacements in both directions with half the phase each;
///             the linear terms cancel bond by bond, on any geometry.
enum class DisplacementScheme { forward, symmetric };

struct LatticeConfig {
  int n_sites = 0;
  Boundary boundary = Boundary::open;
  std::vector<std::uint8_t> occupations;  // h_k in {0, 1}
  std::uint64_t seed = 0;
  double phase_per_step = 0.0;
  DisplacementScheme scheme = DisplacementScheme::symmetric;

  static LatticeConfig filled(int n_sites, Boundary boundary = Boundary::open);

  /// Throws ValidationError unless occupations has n_sites binary entries
  /// and at least one atom.
  void validate() const;

  int n_atoms() const;
  /// Lattice site of every atom, ascending.
  std::vector<int> atom_sites() const;
  /// Register index of the atom at `site`, or -1 for an empty site.
  int qubit_of(int site) const;
  /// Neighbor of `site` in the given direction, or -1 past an open edge.
  int neighbor(int site, int direction) const;
  /// Ordered atom pairs (qubit k, qubit l) with l the occupied neighbor of k
  /// in `direction`.
  std::vector<std::pair<int, int>> bonds(int direction) const;
};

struct HeisenbergCouplings {
  double chi = 0.0;       // z z
  double eta_c = 0.0;     // x x
  double lambda_c = 0.0;  // y y

  static HeisenbergCouplings isotropic(double c) { return {c, c, c}; }
};

/// All atoms in |-1/2>.
StateVector all_down(const LatticeConfig& cfg);

StateVector displacement_gate(StateVector psi, const LatticeConfig& cfg, int direction, double phi);

/// exp(-i angle j_axis) on every atom.
StateVector global_pulse(StateVector psi, hilbert::SpinAxis axis, double angle);

/// exp(-i phi sum_<kl> j_z,k j_z,l) up to a global phase, plus the residual
/// linear field of the forward scheme (see residual_linear_field).
StateVector hzz_step(StateVector psi, const LatticeConfig& cfg, double phi);
/// hzz_step conjugated by pi/2 pulses about y (z -> x).
StateVector hxx_step(StateVector psi, const LatticeConfig& cfg, double phi);
/// hzz_step conjugated by pi/2 pulses about x (z -> y).
StateVector hyy_step(StateVector psi, const LatticeConfig& cfg, double phi);

/// Per-atom coefficient c_k such that hzz_step(phi) = exp(-i phi [sum j_z j_z
/// + sum_k c_k j_z,k]) up to a global phase. Zero for the symmetric scheme
/// and for rings.
std::vector<double> residual_linear_field(const LatticeConfig& cfg);

/// First-order product formula: n_steps repetitions of
/// hyy(lambda dt) hxx(eta dt) hzz(chi dt), zz applied first, dt = t/n_steps.
StateVector trotter_evolve(StateVector psi, const LatticeConfig& cfg, const HeisenbergCouplings& c, double t_final,
                           int n_steps);

struct SpinWaveSetup {
  int n_atoms = 15;
  int flip_index = 7;
  HeisenbergCouplings couplings = HeisenbergCouplings::isotropic(1.0);
  Boundary boundary = Boundary::open;
  DisplacementScheme scheme = DisplacementScheme::symmetric;
  int steps_per_interval = 10;  // Trotter steps between recorded times
};

/// <j_z,k>(t) for every atom, labels "jz_0".."jz_{N-1}". Starts from all
/// atoms down with atom flip_index up.
TimeSeries spin_wave_sim(const SpinWaveSetup& setup, std::span<const double> times);

/// Bernoulli(p) filling, extending the lattice until n_atoms sites are
/// filled. Deterministic in seed.
LatticeConfig sample_occupations(double p, int n_atoms, std::uint64_t seed);

/// Flips round(fraction * N) distinct atoms, chosen uniformly with the seed,
/// to |+1/2>. Input must be a z-basis product state.
StateVector thermal_pump(const StateVector& psi, const LatticeConfig& cfg, double fraction, std::uint64_t seed);

/// Symmetric, zero-diagonal coupling matrix between lattice sites.
class CouplingMap {
 public:
  /// Throws ValidationError if not square, not symmetric or the diagonal is
  /// non-zero.
  explicit CouplingMap(Eigen::MatrixXd entries);

  int n_sites() const { return static_cast<int>(entries_.rows()); }
  double operator()(int k, int l) const { return entries_(k, l); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  /// Number of unordered pairs with non-zero coupling.
  int coupled_pairs() const;

 private:
  Eigen::MatrixXd entries_;
};

/// Energies of H = sum_{k != l} chi_kl h_k h_l j_x,k j_x,l in the x product
/// basis. Bit value 0 of the x basis is j_x = +1/2 (Hadamard convention).
std::vector<double> ising_x_energies(const LatticeConfig& cfg, const CouplingMap& map);

/// Hadamard on every atom: z basis <-> x basis.
void to_x_basis(hilbert::CVector& amps);

/// exp(-i H t) for the random-structure Hamiltonian, exact via the x basis.
StateVector random_structure_evolve(StateVector psi, const LatticeConfig& cfg, const CouplingMap& map, double t);

/// Seeded generator for every random draw in the project. Wraps
/// std::mt19937_64, whose output sequence is fixed by the standard, and maps
/// it to doubles and integers without the implementation-defined std
/// distributions, so runs are bit-reproducible across toolchains.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 gen_;
};

}  // namespace riqs::lattice
