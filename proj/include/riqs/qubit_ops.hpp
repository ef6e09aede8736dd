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

// Matrix-free kernels for registers made only of qubits. Used where dense
// operators would be wasteful (15 lattice atoms = 32768 amplitudes).
// Qubit 0 is the most significant bit of the amplitude index, consistent
// with kron() ordering; bit value 1 is spin up (+1/2).

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "riqs/hilbert.hpp"

namespace riqs::hilbert::qubits {

using Gate = Eigen::Matrix2cd;

inline int bit(std::size_t index, int n_qubits, int q) {
  return static_cast<int>((index >> (n_qubits - 1 - q)) & 1U);
}

inline std::size_t mask(int n_qubits, int q) { return std::size_t{1} << (n_qubits - 1 - q); }

/// Number of qubits in a register of amps.size() == 2^n; throws otherwise.
int register_size(const CVector& amps);

/// exp(-i angle s_axis) for a single spin-1/2.
Gate spin_rotation(SpinAxis axis, double angle);

void apply_gate(CVector& amps, int q, const Gate& u);
void apply_gate(CVector& amps, std::span<const int> qubits, const Gate& u);

/// (sum over the listed qubits of s_axis) |amps>.
CVector apply_spin_sum(const CVector& amps, SpinAxis axis, std::span<const int> qubits);

/// <s_z> of every qubit.
std::vector<double> local_sz(const CVector& amps);

}  // namespace riqs::hilbert::qubits
