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

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace riqs::hilbert {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using SparseOp = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kMaxNormDrift = 1e-6;
inline constexpr double kDefaultOdeTolerance = 1e-8;

/// Pure state on a composite space. Subsystem 0 is the slowest-varying
/// index, matching kron() ordering. Qubits come first and a vibrational
/// mode, when present, last.
class StateVector {
 public:
  /// Throws ValidationError unless amps has length prod(dims) and unit norm
  /// within kNormTolerance.
  StateVector(std::vector<int> dims, CVector amps);

  /// Normalizes amps instead of requiring unit norm. Zero vectors throw.
  static StateVector normalized(std::vector<int> dims, CVector amps);
  static StateVector basis(std::vector<int> dims, std::size_t index);
  /// Tensor product of normalized single-subsystem factors.
  static StateVector product(std::span<const CVector> factors);

  const std::vector<int>& dims() const { return dims_; }
  const CVector& amps() const { return amps_; }
  /// In-place access for unitary kernels. Callers keep the norm intact.
  CVector& data() { return amps_; }

  std::size_t size() const { return static_cast<std::size_t>(amps_.size()); }
  int num_subsystems() const { return static_cast<int>(dims_.size()); }
  double norm() const { return amps_.norm(); }

 private:
  std::vector<int> dims_;
  CVector amps_;
};

/// Square operator stored sparse. The hermitian flag is checked on
/// construction.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(SparseOp entries, bool hermitian = false);

  static OperatorMatrix from_dense(const CMatrix& m, bool hermitian = false);
  static OperatorMatrix identity(int dim);
  static OperatorMatrix zero(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  bool is_hermitian() const { return hermitian_; }
  const SparseOp& sparse() const { return entries_; }
  CMatrix dense() const { return CMatrix(entries_); }

  CVector apply(const CVector& v) const;
  OperatorMatrix adjoint() const;

  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  /// Real scalars keep the hermitian flag, complex ones drop it.
  friend OperatorMatrix operator*(double s, const OperatorMatrix& a);
  friend OperatorMatrix operator*(Complex s, const OperatorMatrix& a);

 private:
  SparseOp entries_;
  bool hermitian_ = false;
};

/// Labeled table of real observables sampled on a strictly increasing grid.
class TimeSeries {
 public:
  TimeSeries() = default;
  explicit TimeSeries(std::vector<std::string> labels);

  void append(double t, std::vector<double> record);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<std::vector<double>>& records() const { return records_; }
  std::size_t size() const { return times_.size(); }
  bool empty() const { return times_.empty(); }

  /// Throws std::out_of_range for unknown labels.
  std::vector<double> column(const std::string& label) const;
  double at(std::size_t row, const std::string& label) const;

  std::map<std::string, std::string>& metadata() { return metadata_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

 private:
  std::size_t label_index(const std::string& label) const;

  std::vector<std::string> labels_;
  std::vector<double> times_;
  std::vector<std::vector<double>> records_;
  std::map<std::string, std::string> metadata_;
};

// Operator builders -----------------------------------------------------

OperatorMatrix pauli_x();
OperatorMatrix pauli_y();
OperatorMatrix pauli_z();

enum class SpinAxis { x, y, z };

/// Spin-1/2 operator s = sigma/2 in the qubit basis where |1> is spin up
/// (+1/2, excited) and s_+ = |1><0|. Concretely s_z = diag(-1/2, +1/2).
OperatorMatrix spin_half(SpinAxis axis);

/// Truncated harmonic-oscillator operators on Fock states 0..dim-1.
/// Raising amplitudes that would leave the space are dropped.
OperatorMatrix annihilation(int fock_dim);
OperatorMatrix position(int fock_dim);  // (a + a^dag)/sqrt(2)
OperatorMatrix momentum(int fock_dim);  // i(a^dag - a)/sqrt(2)

/// Tensor product, leftmost factor slowest-varying.
OperatorMatrix kron(std::span<const OperatorMatrix> ops);
OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

/// op acting on subsystem `site` of a space with the given dims.
OperatorMatrix embed(const OperatorMatrix& op, int site, std::span<const int> dims);

/// Sum of spin_half(axis) over the first n_qubits subsystems of dims.
OperatorMatrix collective_spin(SpinAxis axis, int n_qubits, std::span<const int> dims);

/// Dense matrix exponential exp(-i * h * t) for Hermitian h via
/// eigendecomposition.
CMatrix unitary_from_hermitian(const CMatrix& h, double t);

// Evolution ---------------------------------------------------------------

/// Time-dependent Hamiltonian as an arbitrary callback.
using HamiltonianFn = std::function<OperatorMatrix(double)>;

/// H(t) = sum_i f_i(t) H_i with fixed Hermitian terms. Cheaper to integrate
/// than a generic callback.
struct LinearHamiltonian {
  std::vector<OperatorMatrix> terms;
  std::vector<std::function<double(double)>> coefficients;
};

/// Integrates i dpsi/dt = H(t) psi from t = 0 with an adaptive
/// Dormand-Prince stepper (absolute and relative tolerance tol).
/// Throws NumericalError if the norm drifts by more than kMaxNormDrift,
/// ValidationError on dimension mismatch or non-Hermitian H.
StateVector evolve_ode(const HamiltonianFn& h, const StateVector& psi0, double t_final,
                       double tol = kDefaultOdeTolerance);
StateVector evolve_ode(const LinearHamiltonian& h, const StateVector& psi0, double t_final,
                       double tol = kDefaultOdeTolerance);

/// States at every time of a non-decreasing grid starting at or after 0.
std::vector<StateVector> evolve_ode_grid(const LinearHamiltonian& h, const StateVector& psi0,
                                         std::span<const double> times,
                                         double tol = kDefaultOdeTolerance);

/// amps[k] <- exp(-i E_k t) amps[k].
StateVector evolve_diagonal(std::span<const double> energies, StateVector psi, double t);

// Measurements ------------------------------------------------------------

/// Reduced density matrix on the kept subsystems (in their original order).
CMatrix partial_trace(const StateVector& psi, std::span<const int> keep);

Complex expectation(const StateVector& psi, const OperatorMatrix& op);
/// Real expectation of a Hermitian operator; throws NumericalError if the
/// imaginary part exceeds 1e-10.
double expectation_real(const StateVector& psi, const OperatorMatrix& op);

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

/// 0.5 * trace norm of (a - b) for Hermitian matrices.
double trace_distance(const CMatrix& a, const CMatrix& b);

/// Tr(rho^2).
double purity(const CMatrix& rho);

}  // namespace riqs::hilbert
