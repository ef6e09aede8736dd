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

// Symmetric (Dicke) representation of N spin-1/2 particles with J = N/2.
// Amplitudes are indexed by the number of excitations k = J + M, so index 0
// is |J,-J> = |g...g> and index N is |J,+J> = |e...e>.

#include <cstddef>

#include "riqs/errors.hpp"
#include "riqs/hilbert.hpp"

namespace riqs::dicke {

using hilbert::Complex;
using hilbert::CVector;
using hilbert::OperatorMatrix;
using hilbert::StateVector;

class DickeState {
 public:
  /// Throws ValidationError unless amps has n_atoms + 1 entries with unit norm.
  DickeState(int n_atoms, CVector amps);

  static DickeState with_excitations(int n_atoms, int excitations);
  static DickeState ground(int n_atoms) { return with_excitations(n_atoms, 0); }

  int n_atoms() const { return n_atoms_; }
  double j() const { return 0.5 * n_atoms_; }
  const CVector& amps() const { return amps_; }
  /// Amplitude of |J,M>; M must be one of -J, -J+1, ..., J.
  Complex amplitude(double m) const;

 private:
  int n_atoms_;
  CVector amps_;
};

enum class Collective { x, y, z, plus, minus };

/// Angular-momentum matrix in the |J,M> basis, ascending M.
OperatorMatrix collective_op(int n_atoms, Collective which);

/// exp(-i A J_y^2).
DickeState one_axis_twist(const DickeState& s, double strength);

/// exp(-i angle J_axis) for axis in {x, y, z}.
DickeState rotate(const DickeState& s, Collective axis, double angle);

struct GhzOverlap {
  double fidelity = 0.0;
  double phase_g = 0.0;
  double phase_e = 0.0;
};

/// max over phases of |<GHZ(phi_g, phi_e)|s>|^2 = (|a_-J| + |a_+J|)^2 / 2.
GhzOverlap ghz_fidelity(const DickeState& s);

/// Twist strength and follow-up J_y rotation that take |g...g> to GHZ form.
struct GhzRecipe {
  double twist = 0.0;
  double rotation_y = 0.0;
};

/// Even N: A = pi/2 and no rotation. Odd N: A = pi/2 followed by a pi/2
/// rotation about y (without it the overlap is only 2^-N).
GhzRecipe ghz_recipe(int n_atoms);
DickeState prepare_ghz(int n_atoms);

/// exp(-i kick J_y^2 / (2J+1)) exp(-i rotation J_x). One period of the
/// kicked top; iterate for the stroboscopic map.
DickeState kicked_rotor_step(const DickeState& s, double kick, double rotation);

/// (<J_x>, <J_y>, <J_z>).
Eigen::Vector3d mean_spin(const DickeState& s);

/// |J,M> -> normalized sum of the C(N, J+M) product states with J+M qubits
/// excited. Requires N <= 20.
StateVector symmetric_embed(const DickeState& s);

class NonSymmetricState : public ValidationError {
 public:
  explicit NonSymmetricState(double lost_norm);
  double lost_norm() const { return lost_norm_; }

 private:
  double lost_norm_;
};

struct SymmetricProjection {
  DickeState state;
  double lost_norm = 0.0;  // 1 - weight inside the symmetric subspace
};

/// Inverse of symmetric_embed. Throws NonSymmetricState when more than
/// `tolerance` of the norm lies outside the symmetric subspace.
SymmetricProjection project_symmetric(const StateVector& psi, double tolerance = 1e-9);

}  // namespace riqs::dicke
