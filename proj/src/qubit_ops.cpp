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

#include "riqs/qubit_ops.hpp"

#include <bit>
#include <cmath>

#include "riqs/errors.hpp"

namespace riqs::hilbert::qubits {

int register_size(const CVector& amps) {
  const auto n = static_cast<std::size_t>(amps.size());
  if (n == 0 || !std::has_single_bit(n)) throw ValidationError("register size is not a power of two");
  return std::countr_zero(n);
}

Gate spin_rotation(SpinAxis axis, double angle) {
  // exp(-i a s) = cos(a/2) I - 2i sin(a/2) s   for s = sigma/2
  const Gate s = spin_half(axis).dense();
  return std::cos(angle / 2) * Gate::Identity() - Complex(0.0, 2.0 * std::sin(angle / 2)) * s;
}

void apply_gate(CVector& amps, int q, const Gate& u) {
  const int n = register_size(amps);
  if (q < 0 || q >= n) throw ValidationError("qubit index out of range");
  const std::size_t m = mask(n, q);
  const auto size = static_cast<std::size_t>(amps.size());
  for (std::size_t i = 0; i < size; ++i) {
    if (i & m) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | m);
    const Complex a0 = amps(i0);
    const Complex a1 = amps(i1);
    amps(i0) = u(0, 0) * a0 + u(0, 1) * a1;
    amps(i1) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void apply_gate(CVector& amps, std::span<const int> qubits, const Gate& u) {
  for (int q : qubits) apply_gate(amps, q, u);
}

CVector apply_spin_sum(const CVector& amps, SpinAxis axis, std::span<const int> qubits) {
  const int n = register_size(amps);
  const auto size = static_cast<std::size_t>(amps.size());
  CVector out = CVector::Zero(amps.size());
  for (int q : qubits) {
    if (q < 0 || q >= n) throw ValidationError("qubit index out of range");
    const std::size_t m = mask(n, q);
    for (std::size_t i = 0; i < size; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      const bool up = (i & m) != 0;
      switch (axis) {
        case SpinAxis::z:
          out(ii) += (up ? 0.5 : -0.5) * amps(ii);
          break;
        case SpinAxis::x:
          out(ii) += 0.5 * amps(static_cast<Eigen::Index>(i ^ m));
          break;
        case SpinAxis::y:
          // s_y|0> = -i/2 |1>,  s_y|1> = +i/2 |0>
          out(ii) += Complex(0.0, up ? -0.5 : 0.5) * amps(static_cast<Eigen::Index>(i ^ m));
          break;
      }
    }
  }
  return out;
}

std::vector<double> local_sz(const CVector& amps) {
  const int n = register_size(amps);
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  const auto size = static_cast<std::size_t>(amps.size());
  for (std::size_t i = 0; i < size; ++i) {
    const double p = std::norm(amps(static_cast<Eigen::Index>(i)));
    if (p == 0.0) continue;
    for (int q = 0; q < n; ++q) out[static_cast<std::size_t>(q)] += (bit(i, n, q) ? 0.5 : -0.5) * p;
  }
  return out;
}

}  // namespace riqs::hilbert::qubits
