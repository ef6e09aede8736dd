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

// Bichromatic gate on N ions sharing the centre-of-mass mode. In the
// interaction picture and Lamb-Dicke limit
//
//   H(t) = -sqrt(2) eta Omega J_y [x cos((nu-delta)t) + p sin((nu-delta)t)]
//
// whose exact propagator is
//
//   U(t) = exp(-i A J_y^2) exp(-i F J_y x) exp(-i G J_y p)
//
// with F, G, A closed-form functions of time (see coefficients()). Times are
// in units of 1/nu when nu = 1. Register layout: ion qubits first (|g> = 0,
// |e> = 1), then the Fock space of dimension n_max.

#include <span>
#include <vector>

#include "riqs/hilbert.hpp"

namespace riqs::iontrap {

using hilbert::CMatrix;
using hilbert::OperatorMatrix;
using hilbert::StateVector;
using hilbert::TimeSeries;

struct IonTrapParams {
  double nu = 1.0;     // trap frequency
  double delta = 0.95; // laser detuning from the carrier
  double eta = 0.1;    // Lamb-Dicke parameter
  double omega = 0.177;
  int n_ions = 2;
  int n_max = 20;  // Fock-space dimension

  /// Throws ValidationError on nu <= 0, resonance delta == nu, eta <= 0,
  /// n_ions < 1 or n_max < 1.
  void validate() const;

  double gap() const { return nu - delta; }
  std::vector<int> dims() const;
  int dim() const;
};

/// Reference parameter sets: slow gate (delta = 0.9, Omega = 0.1) and fast
/// gate (delta = 0.95, Omega = 0.177), eta = 0.1, nu = 1.
IonTrapParams slow_gate_params();
IonTrapParams fast_gate_params();

struct BichromaticCoefficients {
  double F = 0.0;
  double G = 0.0;
  double A = 0.0;
};

OperatorMatrix hamiltonian_at(const IonTrapParams& p, double t);

/// H(t) split into its two fixed operators J_y x and J_y p.
hilbert::LinearHamiltonian hamiltonian(const IonTrapParams& p);

/// F(t) = -sqrt2 eta Omega sin(w t)/w
/// G(t) = -sqrt2 eta Omega (1 - cos(w t))/w
/// A(t) = -(eta Omega)^2/w [t - sin(2 w t)/(2 w)],      w = nu - delta
BichromaticCoefficients coefficients(const IonTrapParams& p, double t);

OperatorMatrix effective_propagator(const IonTrapParams& p, double t);

enum class Engine { full, effective };

/// |g...g> (x) |n>.
StateVector ground_state(const IonTrapParams& p, int fock_level = 0);

/// psi(t) for every time in the grid using either the ODE of H(t) or the
/// closed-form propagator.
std::vector<StateVector> propagate(const IonTrapParams& p, const StateVector& psi0,
                                   std::span<const double> times, Engine engine,
                                   double tol = hilbert::kDefaultOdeTolerance);

/// Internal-state density matrix (vibrational mode traced out).
CMatrix internal_state(const IonTrapParams& p, const StateVector& psi);

/// rho_{gg,gg}, rho_{ee,ee}, Re/Im rho_{gg,ee} on the grid. For N ions "gg"
/// and "ee" stand for all-ground and all-excited.
TimeSeries gate_trace(const IonTrapParams& p, const StateVector& psi0, std::span<const double> times,
                      Engine engine, double tol = hilbert::kDefaultOdeTolerance);

/// Secular part of A(t): -(Omega eta)^2 t / (nu - delta).
double slow_gate_phase(const IonTrapParams& p, double t);

/// tau_k = 2 pi k / (nu - delta), where F and G vanish.
double fast_gate_time(const IonTrapParams& p, int k);

/// Max pairwise trace distance between the reduced internal states obtained
/// from |g..g>|n>, n in n_list, at time tau. Throws ValidationError if
/// max(n_list) + margin >= n_max.
double vibrational_independence_report(const IonTrapParams& p, std::span<const int> n_list, double tau,
                                       Engine engine = Engine::effective, int margin = 10,
                                       double tol = hilbert::kDefaultOdeTolerance);

/// Fock dimension that holds the largest coherent displacement reached
/// during the gate, starting from Fock level n_initial, with a safety margin.
int recommended_fock_dim(const IonTrapParams& p, int n_initial = 0);

}  // namespace riqs::iontrap
