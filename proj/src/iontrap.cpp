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

#include "riqs/iontrap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>

#include "riqs/errors.hpp"

namespace riqs::iontrap {
namespace {

using hilbert::Complex;
using hilbert::CVector;
using hilbert::SpinAxis;

double coupling(const IonTrapParams& p) { return std::numbers::sqrt2 * p.eta * p.omega; }

std::vector<int> qubit_indices(int n_ions) {
  std::vector<int> q(static_cast<std::size_t>(n_ions));
  std::iota(q.begin(), q.end(), 0);
  return q;
}

}  // namespace

void IonTrapParams::validate() const {
  if (!(nu > 0.0)) throw ValidationError("trap frequency nu must be positive");
  if (!(delta > 0.0)) throw ValidationError("detuning delta must be positive");
  if (std::abs(nu - delta) <= 1e-12 * nu) throw ValidationError("resonant detuning delta == nu is excluded");
  if (!(eta > 0.0)) throw ValidationError("Lamb-Dicke parameter eta must be positive");
  if (!std::isfinite(omega)) throw ValidationError("Rabi frequency must be finite");
  if (n_ions < 1) throw ValidationError("need at least one ion");
  if (n_ions > 10) throw ValidationError("more than 10 ions is outside the dense simulator's range");
  if (n_max < 1) throw ValidationError("Fock truncation n_max must be >= 1");
}

std::vector<int> IonTrapParams::dims() const {
  std::vector<int> d(static_cast<std::size_t>(n_ions), 2);
  d.push_back(n_max);
  return d;
}

int IonTrapParams::dim() const { return (1 << n_ions) * n_max; }

IonTrapParams slow_gate_params() {
  IonTrapParams p;
  p.delta = 0.9;
  p.eta = 0.1;
  p.omega = 0.1;
  return p;
}

IonTrapParams fast_gate_params() {
  IonTrapParams p;
  p.delta = 0.95;
  p.eta = 0.1;
  p.omega = 0.177;
  return p;
}

hilbert::LinearHamiltonian hamiltonian(const IonTrapParams& p) {
  p.validate();
  const auto dims = p.dims();
  const OperatorMatrix jy = hilbert::collective_spin(SpinAxis::y, p.n_ions, dims);
  const int mode = p.n_ions;
  const OperatorMatrix x = hilbert::embed(hilbert::position(p.n_max), mode, dims);
  const OperatorMatrix mom = hilbert::embed(hilbert::momentum(p.n_max), mode, dims);
  const double g = -coupling(p);
  const double w = p.gap();
  hilbert::LinearHamiltonian h;
  // J_y commutes with x and p, so the products stay Hermitian.
  h.terms = {OperatorMatrix((jy * x).sparse(), true), OperatorMatrix((jy * mom).sparse(), true)};
  h.coefficients = {[g, w](double t) { return g * std::cos(w * t); },
                    [g, w](double t) { return g * std::sin(w * t); }};
  return h;
}

OperatorMatrix hamiltonian_at(const IonTrapParams& p, double t) {
  if (t < 0.0) throw ValidationError("time must be non-negative");
  const auto h = hamiltonian(p);
  return h.coefficients[0](t) * h.terms[0] + h.coefficients[1](t) * h.terms[1];
}

BichromaticCoefficients coefficients(const IonTrapParams& p, double t) {
  p.validate();
  const double w = p.gap();
  const double g = coupling(p);
  BichromaticCoefficients c;
  c.F = -g * std::sin(w * t) / w;
  c.G = -g * (1.0 - std::cos(w * t)) / w;
  const double eo = p.eta * p.omega;
  c.A = -(eo * eo) / w * (t - std::sin(2.0 * w * t) / (2.0 * w));
  return c;
}

OperatorMatrix effective_propagator(const IonTrapParams& p, double t) {
  p.validate();
  const BichromaticCoefficients c = coefficients(p, t);
  const int nq = 1 << p.n_ions;
  const int nf = p.n_max;

  const std::vector<int> qdims(static_cast<std::size_t>(p.n_ions), 2);
  Eigen::SelfAdjointEigenSolver<CMatrix> jy(hilbert::collective_spin(SpinAxis::y, p.n_ions, qdims).dense());
  const CMatrix x = hilbert::position(nf).dense();
  const CMatrix mom = hilbert::momentum(nf).dense();

  // Block-diagonal in the J_y eigenbasis: each block is the motional
  // operator for eigenvalue m.
  CMatrix blocks = CMatrix::Zero(nq * nf, nq * nf);
  for (int i = 0; i < nq; ++i) {
    const double m = jy.eigenvalues()(i);
    const Complex twist = std::exp(Complex(0.0, -c.A * m * m));
    blocks.block(i * nf, i * nf, nf, nf) =
        twist * hilbert::unitary_from_hermitian(x, c.F * m) * hilbert::unitary_from_hermitian(mom, c.G * m);
  }
  CMatrix basis = Eigen::kroneckerProduct(jy.eigenvectors(), CMatrix::Identity(nf, nf));
  return OperatorMatrix::from_dense(basis * blocks * basis.adjoint());
}

StateVector ground_state(const IonTrapParams& p, int fock_level) {
  p.validate();
  if (fock_level < 0 || fock_level >= p.n_max) throw ValidationError("Fock level outside the truncated space");
  return StateVector::basis(p.dims(), static_cast<std::size_t>(fock_level));
}

std::vector<StateVector> propagate(const IonTrapParams& p, const StateVector& psi0, std::span<const double> times,
                                   Engine engine, double tol) {
  p.validate();
  if (psi0.dims() != p.dims()) throw ValidationError("initial state does not live on the ion-trap space");
  if (engine == Engine::full) return hilbert::evolve_ode_grid(hamiltonian(p), psi0, times, tol);
  std::vector<StateVector> out;
  out.reserve(times.size());
  for (double t : times) {
    if (t < 0.0) throw ValidationError("time must be non-negative");
    if (t == 0.0) {
      out.push_back(psi0);
      continue;
    }
    out.push_back(StateVector::normalized(p.dims(), effective_propagator(p, t).apply(psi0.amps())));
  }
  return out;
}

CMatrix internal_state(const IonTrapParams& p, const StateVector& psi) {
  const auto keep = qubit_indices(p.n_ions);
  return hilbert::partial_trace(psi, keep);
}

TimeSeries gate_trace(const IonTrapParams& p, const StateVector& psi0, std::span<const double> times, Engine engine,
                      double tol) {
  const auto states = propagate(p, psi0, times, engine, tol);
  TimeSeries ts({"rho_gg_gg", "im_rho_gg_ee", "rho_ee_ee", "re_rho_gg_ee"});
  const int top = (1 << p.n_ions) - 1;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const CMatrix rho = internal_state(p, states[i]);
    const Complex c = rho(0, top);
    ts.append(times[i], {rho(0, 0).real(), c.imag(), rho(top, top).real(), c.real()});
  }
  ts.metadata()["engine"] = engine == Engine::full ? "full" : "effective";
  return ts;
}

double slow_gate_phase(const IonTrapParams& p, double t) {
  const double eo = p.eta * p.omega;
  return -(eo * eo) * t / p.gap();
}

double fast_gate_time(const IonTrapParams& p, int k) {
  p.validate();
  if (k < 0) throw ValidationError("revival index k must be non-negative");
  return 2.0 * std::numbers::pi * k / std::abs(p.gap());
}

double vibrational_independence_report(const IonTrapParams& p, std::span<const int> n_list, double tau,
                                       Engine engine, int margin, double tol) {
  p.validate();
  if (n_list.empty()) throw ValidationError("need at least one Fock level");
  const int top = *std::max_element(n_list.begin(), n_list.end());
  if (*std::min_element(n_list.begin(), n_list.end()) < 0) throw ValidationError("Fock levels must be >= 0");
  if (top + margin >= p.n_max) {
    throw ValidationError("n_max too small: need max(n_list) + margin < n_max");
  }
  std::vector<CMatrix> reduced;
  const double ts[] = {tau};
  for (int n : n_list) {
    const auto psi = propagate(p, ground_state(p, n), ts, engine, tol).front();
    reduced.push_back(internal_state(p, psi));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      worst = std::max(worst, hilbert::trace_distance(reduced[i], reduced[j]));
    }
  }
  return worst;
}

int recommended_fock_dim(const IonTrapParams& p, int n_initial) {
  p.validate();
  // Largest phase-space excursion: 2 sqrt2 eta Omega / |w| * max|m|.
  const double radius = 2.0 * coupling(p) / std::abs(p.gap()) * (0.5 * p.n_ions);
  const double amp = std::sqrt(static_cast<double>(std::max(n_initial, 0))) + radius / std::numbers::sqrt2;
  return static_cast<int>(std::ceil(amp * amp + 10.0 * amp + 20.0));
}

}  // namespace riqs::iontrap
