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

#include "riqs/dicke.hpp"

#include <bit>
#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <utility>

namespace riqs::dicke {
namespace {

using Eigensystem = Eigen::SelfAdjointEigenSolver<hilbert::CMatrix>;

constexpr int kMaxEmbedAtoms = 20;

void check_atoms(int n_atoms) {
  if (n_atoms < 1) throw ValidationError("Dicke space needs at least one atom (J >= 1/2)");
}

// Read-only after insertion; shared between threads.
std::shared_ptr<const Eigensystem> eigensystem(int n_atoms, Collective axis) {
  static std::mutex mu;
  static std::map<std::pair<int, Collective>, std::shared_ptr<const Eigensystem>> cache;
  const auto key = std::make_pair(n_atoms, axis);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto es = std::make_shared<const Eigensystem>(collective_op(n_atoms, axis).dense());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(es)).first->second;
}

// V f(lambda) V^dag a, where f is a phase function of the eigenvalue.
template <typename PhaseFn>
CVector apply_spectral(const Eigensystem& es, const CVector& a, PhaseFn phase) {
  CVector c = es.eigenvectors().adjoint() * a;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double ph = phase(es.eigenvalues()(i));
    c(i) *= Complex(std::cos(ph), std::sin(ph));
  }
  return es.eigenvectors() * c;
}

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

DickeState::DickeState(int n_atoms, CVector amps) : n_atoms_(n_atoms), amps_(std::move(amps)) {
  check_atoms(n_atoms_);
  if (amps_.size() != n_atoms_ + 1) throw ValidationError("Dicke state needs 2J+1 amplitudes");
  if (std::abs(amps_.norm() - 1.0) > hilbert::kNormTolerance) throw ValidationError("Dicke state not normalized");
}

DickeState DickeState::with_excitations(int n_atoms, int excitations) {
  check_atoms(n_atoms);
  if (excitations < 0 || excitations > n_atoms) throw ValidationError("excitation count out of range");
  CVector a = CVector::Zero(n_atoms + 1);
  a(excitations) = 1.0;
  return DickeState(n_atoms, std::move(a));
}

Complex DickeState::amplitude(double m) const {
  const double k = m + j();
  const long idx = std::lround(k);
  if (std::abs(k - static_cast<double>(idx)) > 1e-9 || idx < 0 || idx > n_atoms_) {
    throw ValidationError("M is not a valid projection for this J");
  }
  return amps_(idx);
}

OperatorMatrix collective_op(int n_atoms, Collective which) {
  check_atoms(n_atoms);
  const int d = n_atoms + 1;
  const double j = 0.5 * n_atoms;
  hilbert::CMatrix plus = hilbert::CMatrix::Zero(d, d);
  for (int k = 0; k + 1 < d; ++k) {
    const double m = -j + k;
    plus(k + 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  switch (which) {
    case Collective::plus:
      return OperatorMatrix::from_dense(plus);
    case Collective::minus:
      return OperatorMatrix::from_dense(plus.adjoint());
    case Collective::x:
      return OperatorMatrix::from_dense(0.5 * (plus + plus.adjoint()), true);
    case Collective::y:
      return OperatorMatrix::from_dense(Complex(0.0, -0.5) * (plus - plus.adjoint()), true);
    case Collective::z: {
      hilbert::CMatrix z = hilbert::CMatrix::Zero(d, d);
      for (int k = 0; k < d; ++k) z(k, k) = -j + k;
      return OperatorMatrix::from_dense(z, true);
    }
  }
  throw ValidationError("unknown collective operator");
}

DickeState one_axis_twist(const DickeState& s, double strength) {
  const auto es = eigensystem(s.n_atoms(), Collective::y);
  return DickeState(s.n_atoms(), apply_spectral(*es, s.amps(), [&](double m) { return -strength * m * m; }));
}

DickeState rotate(const DickeState& s, Collective axis, double angle) {
  if (axis == Collective::plus || axis == Collective::minus) {
    throw ValidationError("rotations are about x, y or z");
  }
  if (axis == Collective::z) {
    CVector a = s.amps();
    for (Eigen::Index k = 0; k < a.size(); ++k) {
      const double ph = -angle * (-s.j() + static_cast<double>(k));
      a(k) *= Complex(std::cos(ph), std::sin(ph));
    }
    return DickeState(s.n_atoms(), std::move(a));
  }
  const auto es = eigensystem(s.n_atoms(), axis);
  return DickeState(s.n_atoms(), apply_spectral(*es, s.amps(), [&](double m) { return -angle * m; }));
}

GhzOverlap ghz_fidelity(const DickeState& s) {
  const Complex lo = s.amps()(0);
  const Complex hi = s.amps()(s.n_atoms());
  GhzOverlap g;
  const double sum = std::abs(lo) + std::abs(hi);
  g.fidelity = std::min(1.0, 0.5 * sum * sum);
  g.phase_g = std::abs(lo) > 0.0 ? std::arg(lo) : 0.0;
  g.phase_e = std::abs(hi) > 0.0 ? std::arg(hi) : 0.0;
  return g;
}

GhzRecipe ghz_recipe(int n_atoms) {
  check_atoms(n_atoms);
  GhzRecipe r;
  r.twist = std::numbers::pi / 2;
  r.rotation_y = (n_atoms % 2 == 1) ? std::numbers::pi / 2 : 0.0;
  return r;
}

DickeState prepare_ghz(int n_atoms) {
  const GhzRecipe r = ghz_recipe(n_atoms);
  DickeState s = one_axis_twist(DickeState::ground(n_atoms), r.twist);
  if (r.rotation_y != 0.0) s = rotate(s, Collective::y, r.rotation_y);
  return s;
}

DickeState kicked_rotor_step(const DickeState& s, double kick, double rotation) {
  const DickeState turned = rotation == 0.0 ? s : rotate(s, Collective::x, rotation);
  if (kick == 0.0) return turned;
  return one_axis_twist(turned, kick / (s.n_atoms() + 1.0));
}

Eigen::Vector3d mean_spin(const DickeState& s) {
  const CVector& a = s.amps();
  auto ev = [&](Collective c) { return a.dot(collective_op(s.n_atoms(), c).sparse() * a).real(); };
  return {ev(Collective::x), ev(Collective::y), ev(Collective::z)};
}

StateVector symmetric_embed(const DickeState& s) {
  const int n = s.n_atoms();
  if (n > kMaxEmbedAtoms) throw ValidationError("symmetric_embed supports at most 20 atoms");
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> scale(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) scale[static_cast<std::size_t>(k)] = 1.0 / std::sqrt(binomial(n, k));
  CVector out(static_cast<Eigen::Index>(size));
  for (std::size_t i = 0; i < size; ++i) {
    const int k = std::popcount(i);
    out(static_cast<Eigen::Index>(i)) = s.amps()(k) * scale[static_cast<std::size_t>(k)];
  }
  return StateVector::normalized(std::vector<int>(static_cast<std::size_t>(n), 2), std::move(out));
}

NonSymmetricState::NonSymmetricState(double lost_norm)
    : ValidationError([&] {
        std::ostringstream msg;
        msg << "state is not exchange-symmetric: " << lost_norm << " of the norm lies outside the Dicke subspace";
        return msg.str();
      }()),
      lost_norm_(lost_norm) {}

SymmetricProjection project_symmetric(const StateVector& psi, double tolerance) {
  const int n = psi.num_subsystems();
  for (int d : psi.dims()) {
    if (d != 2) throw ValidationError("projection expects a register of qubits");
  }
  if (n > kMaxEmbedAtoms) throw ValidationError("project_symmetric supports at most 20 atoms");
  CVector a = CVector::Zero(n + 1);
  for (std::size_t i = 0; i < psi.size(); ++i) a(std::popcount(i)) += psi.amps()(static_cast<Eigen::Index>(i));
  for (int k = 0; k <= n; ++k) a(k) /= std::sqrt(binomial(n, k));
  const double lost = std::max(0.0, 1.0 - a.squaredNorm());
  if (lost > tolerance) throw NonSymmetricState(lost);
  a.normalize();
  return {DickeState(n, std::move(a)), lost};
}

}  // namespace riqs::dicke
