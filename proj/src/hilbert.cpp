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

#include "riqs/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

#include "riqs/errors.hpp"

namespace riqs::hilbert {
namespace {

using Triplet = Eigen::Triplet<Complex>;

std::size_t product_of(std::span<const int> dims) {
  std::size_t n = 1;
  for (int d : dims) {
    if (d < 1) throw ValidationError("subsystem dimensions must be positive");
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

bool is_hermitian_within(const SparseOp& m, double tol) {
  if (m.rows() != m.cols()) return false;
  SparseOp diff = m - SparseOp(m.adjoint());
  for (int k = 0; k < diff.outerSize(); ++k) {
    for (SparseOp::InnerIterator it(diff, k); it; ++it) {
      if (std::abs(it.value()) > tol) return false;
    }
  }
  return true;
}

SparseOp from_triplets(int dim, const std::vector<Triplet>& t) {
  SparseOp m(dim, dim);
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

}  // namespace

// StateVector -----------------------------------------------------------

StateVector::StateVector(std::vector<int> dims, CVector amps)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
  if (dims_.empty()) throw ValidationError("state needs at least one subsystem");
  if (product_of(dims_) != static_cast<std::size_t>(amps_.size())) {
    throw ValidationError("amplitude count does not match product of dims");
  }
  if (std::abs(amps_.norm() - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "state not normalized (norm " << amps_.norm() << ")";
    throw ValidationError(msg.str());
  }
}

StateVector StateVector::normalized(std::vector<int> dims, CVector amps) {
  const double n = amps.norm();
  if (n == 0.0) throw ValidationError("cannot normalize a zero vector");
  amps /= n;
  return StateVector(std::move(dims), std::move(amps));
}

StateVector StateVector::basis(std::vector<int> dims, std::size_t index) {
  const std::size_t n = product_of(dims);
  if (index >= n) throw ValidationError("basis index out of range");
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(n));
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(dims), std::move(amps));
}

StateVector StateVector::product(std::span<const CVector> factors) {
  if (factors.empty()) throw ValidationError("product of zero factors");
  std::vector<int> dims;
  CVector acc = CVector::Ones(1);
  for (const auto& f : factors) {
    dims.push_back(static_cast<int>(f.size()));
    CVector next(acc.size() * f.size());
    for (Eigen::Index i = 0; i < acc.size(); ++i) {
      next.segment(i * f.size(), f.size()) = acc(i) * f;
    }
    acc = std::move(next);
  }
  return StateVector(std::move(dims), std::move(acc));
}

// OperatorMatrix --------------------------------------------------------

OperatorMatrix::OperatorMatrix(SparseOp entries, bool hermitian)
    : entries_(std::move(entries)), hermitian_(hermitian) {
  if (entries_.rows() != entries_.cols()) throw ValidationError("operator must be square");
  entries_.makeCompressed();
  if (hermitian_ && !is_hermitian_within(entries_, kHermitianTolerance)) {
    throw ValidationError("operator flagged hermitian is not");
  }
}

OperatorMatrix OperatorMatrix::from_dense(const CMatrix& m, bool hermitian) {
  return OperatorMatrix(SparseOp(m.sparseView(Complex(0.0), 0.0)), hermitian);
}

OperatorMatrix OperatorMatrix::identity(int dim) {
  SparseOp m(dim, dim);
  m.setIdentity();
  return OperatorMatrix(std::move(m), true);
}

OperatorMatrix OperatorMatrix::zero(int dim) { return OperatorMatrix(SparseOp(dim, dim), true); }

CVector OperatorMatrix::apply(const CVector& v) const {
  if (v.size() != entries_.cols()) throw ValidationError("operator/vector dimension mismatch");
  return entries_ * v;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return OperatorMatrix(SparseOp(entries_.adjoint()), hermitian_);
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("operator dimension mismatch");
  OperatorMatrix out;
  out.entries_ = a.entries_ + b.entries_;
  out.hermitian_ = a.hermitian_ && b.hermitian_;
  return out;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("operator dimension mismatch");
  OperatorMatrix out;
  out.entries_ = a.entries_ - b.entries_;
  out.hermitian_ = a.hermitian_ && b.hermitian_;
  return out;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("operator dimension mismatch");
  SparseOp prod = (a.entries_ * b.entries_).pruned();
  const bool herm = a.hermitian_ && b.hermitian_ && is_hermitian_within(prod, kHermitianTolerance);
  return OperatorMatrix(std::move(prod), herm);
}

OperatorMatrix operator*(double s, const OperatorMatrix& a) {
  OperatorMatrix out;
  out.entries_ = Complex(s) * a.entries_;
  out.hermitian_ = a.hermitian_;
  return out;
}

OperatorMatrix operator*(Complex s, const OperatorMatrix& a) {
  OperatorMatrix out;
  out.entries_ = s * a.entries_;
  out.hermitian_ = a.hermitian_ && s.imag() == 0.0;
  return out;
}

// TimeSeries ------------------------------------------------------------

TimeSeries::TimeSeries(std::vector<std::string> labels) : labels_(std::move(labels)) {}

void TimeSeries::append(double t, std::vector<double> record) {
  if (record.size() != labels_.size()) throw ValidationError("record width does not match labels");
  if (!times_.empty() && !(t > times_.back())) {
    throw ValidationError("time series times must be strictly increasing");
  }
  times_.push_back(t);
  records_.push_back(std::move(record));
}

std::size_t TimeSeries::label_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown observable label: " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<double> TimeSeries::column(const std::string& label) const {
  const std::size_t j = label_index(label);
  std::vector<double> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r[j]);
  return out;
}

double TimeSeries::at(std::size_t row, const std::string& label) const {
  return records_.at(row)[label_index(label)];
}

// Builders --------------------------------------------------------------

OperatorMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return OperatorMatrix::from_dense(m, true);
}

OperatorMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return OperatorMatrix::from_dense(m, true);
}

OperatorMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return OperatorMatrix::from_dense(m, true);
}

OperatorMatrix spin_half(SpinAxis axis) {
  CMatrix m = CMatrix::Zero(2, 2);
  switch (axis) {
    case SpinAxis::x:
      m(0, 1) = m(1, 0) = 0.5;
      break;
    case SpinAxis::y:
      // (s_+ - s_-)/(2i) with s_+ = |1><0|
      m(1, 0) = Complex(0, -0.5);
      m(0, 1) = Complex(0, 0.5);
      break;
    case SpinAxis::z:
      m(0, 0) = -0.5;
      m(1, 1) = 0.5;
      break;
  }
  return OperatorMatrix::from_dense(m, true);
}

OperatorMatrix annihilation(int fock_dim) {
  if (fock_dim < 1) throw ValidationError("Fock dimension must be >= 1");
  std::vector<Triplet> t;
  for (int n = 1; n < fock_dim; ++n) t.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
  return OperatorMatrix(from_triplets(fock_dim, t));
}

OperatorMatrix position(int fock_dim) {
  const OperatorMatrix a = annihilation(fock_dim);
  SparseOp x = (a.sparse() + SparseOp(a.sparse().adjoint())) * Complex(M_SQRT1_2);
  return OperatorMatrix(std::move(x), true);
}

OperatorMatrix momentum(int fock_dim) {
  const OperatorMatrix a = annihilation(fock_dim);
  SparseOp p = (SparseOp(a.sparse().adjoint()) - a.sparse()) * Complex(0.0, M_SQRT1_2);
  return OperatorMatrix(std::move(p), true);
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  const int da = a.dim();
  const int db = b.dim();
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(a.sparse().nonZeros() * b.sparse().nonZeros()));
  for (int i = 0; i < a.sparse().outerSize(); ++i) {
    for (SparseOp::InnerIterator ia(a.sparse(), i); ia; ++ia) {
      for (int k = 0; k < b.sparse().outerSize(); ++k) {
        for (SparseOp::InnerIterator ib(b.sparse(), k); ib; ++ib) {
          t.emplace_back(static_cast<int>(ia.row()) * db + static_cast<int>(ib.row()),
                         static_cast<int>(ia.col()) * db + static_cast<int>(ib.col()),
                         ia.value() * ib.value());
        }
      }
    }
  }
  return OperatorMatrix(from_triplets(da * db, t), a.is_hermitian() && b.is_hermitian());
}

OperatorMatrix kron(std::span<const OperatorMatrix> ops) {
  if (ops.empty()) throw ValidationError("kron of an empty list");
  OperatorMatrix acc = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) acc = kron(acc, ops[i]);
  return acc;
}

OperatorMatrix embed(const OperatorMatrix& op, int site, std::span<const int> dims) {
  if (site < 0 || site >= static_cast<int>(dims.size())) throw ValidationError("invalid subsystem index");
  if (op.dim() != dims[static_cast<std::size_t>(site)]) {
    throw ValidationError("operator does not match subsystem dimension");
  }
  int left = 1;
  int right = 1;
  for (int i = 0; i < site; ++i) left *= dims[static_cast<std::size_t>(i)];
  for (std::size_t i = static_cast<std::size_t>(site) + 1; i < dims.size(); ++i) right *= dims[i];
  return kron(kron(OperatorMatrix::identity(left), op), OperatorMatrix::identity(right));
}

OperatorMatrix collective_spin(SpinAxis axis, int n_qubits, std::span<const int> dims) {
  if (n_qubits < 1 || n_qubits > static_cast<int>(dims.size())) {
    throw ValidationError("collective spin needs 1..dims.size() qubits");
  }
  const OperatorMatrix s = spin_half(axis);
  OperatorMatrix total = OperatorMatrix::zero(static_cast<int>(product_of(dims)));
  for (int q = 0; q < n_qubits; ++q) total = total + embed(s, q, dims);
  return total;
}

CMatrix unitary_from_hermitian(const CMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const CVector phases = (es.eigenvalues().cast<Complex>() * Complex(0.0, -t)).array().exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Evolution -------------------------------------------------------------

namespace {

using OdeState = std::vector<Complex>;

struct LinearRhs {
  const LinearHamiltonian* h;
  mutable CVector acc;

  void operator()(const OdeState& x, OdeState& dxdt, double t) const {
    Eigen::Map<const CVector> in(x.data(), static_cast<Eigen::Index>(x.size()));
    Eigen::Map<CVector> out(dxdt.data(), static_cast<Eigen::Index>(dxdt.size()));
    acc.setZero(in.size());
    for (std::size_t i = 0; i < h->terms.size(); ++i) {
      const double c = h->coefficients[i](t);
      if (c != 0.0) acc.noalias() += c * (h->terms[i].sparse() * in);
    }
    out = Complex(0.0, -1.0) * acc;
  }
};

void validate_linear(const LinearHamiltonian& h, std::size_t dim) {
  if (h.terms.size() != h.coefficients.size()) {
    throw ValidationError("Hamiltonian terms and coefficients differ in count");
  }
  for (const auto& term : h.terms) {
    if (static_cast<std::size_t>(term.dim()) != dim) throw ValidationError("Hamiltonian/state dimension mismatch");
    if (!term.is_hermitian()) throw ValidationError("Hamiltonian term is not hermitian");
  }
}

StateVector finish(const std::vector<int>& dims, const OdeState& x) {
  CVector amps = Eigen::Map<const CVector>(x.data(), static_cast<Eigen::Index>(x.size()));
  const double drift = std::abs(amps.norm() - 1.0);
  if (!(drift <= kMaxNormDrift)) {
    std::ostringstream msg;
    msg << "ODE norm drift " << drift << " exceeds " << kMaxNormDrift << "; tighten the tolerance";
    throw NumericalError(msg.str());
  }
  amps.normalize();
  return StateVector(dims, std::move(amps));
}

OdeState to_ode(const StateVector& psi) { return OdeState(psi.amps().data(), psi.amps().data() + psi.size()); }

}  // namespace

StateVector evolve_ode(const LinearHamiltonian& h, const StateVector& psi0, double t_final, double tol) {
  const double ts[] = {t_final};
  return evolve_ode_grid(h, psi0, ts, tol).front();
}

StateVector evolve_ode(const HamiltonianFn& h, const StateVector& psi0, double t_final, double tol) {
  namespace odeint = boost::numeric::odeint;
  if (!(tol > 0.0)) throw ValidationError("ODE tolerance must be positive");
  if (t_final < 0.0) throw ValidationError("final time must be non-negative");
  const auto dim = static_cast<Eigen::Index>(psi0.size());
  auto rhs = [&](const OdeState& x, OdeState& dxdt, double t) {
    const OperatorMatrix ht = h(t);
    if (ht.dim() != dim) throw ValidationError("Hamiltonian/state dimension mismatch");
    if (!ht.is_hermitian()) throw ValidationError("Hamiltonian is not hermitian");
    Eigen::Map<const CVector> in(x.data(), dim);
    Eigen::Map<CVector> out(dxdt.data(), dim);
    out = Complex(0.0, -1.0) * (ht.sparse() * in);
  };
  OdeState x = to_ode(psi0);
  if (t_final > 0.0) {
    auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<OdeState>());
    odeint::integrate_adaptive(stepper, rhs, x, 0.0, t_final, std::min(0.01, t_final));
  }
  return finish(psi0.dims(), x);
}

std::vector<StateVector> evolve_ode_grid(const LinearHamiltonian& h, const StateVector& psi0,
                                         std::span<const double> times, double tol) {
  namespace odeint = boost::numeric::odeint;
  if (!(tol > 0.0)) throw ValidationError("ODE tolerance must be positive");
  validate_linear(h, psi0.size());
  if (times.empty()) return {};
  if (times.front() < 0.0) throw ValidationError("time grid must start at t >= 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (times[i] < times[i - 1]) throw ValidationError("time grid must be non-decreasing");
  }

  std::vector<StateVector> out;
  out.reserve(times.size());
  OdeState x = to_ode(psi0);
  LinearRhs rhs{&h, CVector()};

  // Leading t = 0 entries need no integration.
  std::size_t first = 0;
  while (first < times.size() && times[first] == 0.0) {
    out.push_back(psi0);
    ++first;
  }
  if (first == times.size()) return out;

  std::vector<double> grid;
  grid.push_back(0.0);
  grid.insert(grid.end(), times.begin() + static_cast<std::ptrdiff_t>(first), times.end());
  auto stepper = odeint::make_dense_output(tol, tol, odeint::runge_kutta_dopri5<OdeState>());
  bool skip_origin = true;
  odeint::integrate_times(stepper, std::ref(rhs), x, grid.begin(), grid.end(), 0.01,
                          [&](const OdeState& state, double) {
                            if (skip_origin) {
                              skip_origin = false;
                              return;
                            }
                            out.push_back(finish(psi0.dims(), state));
                          });
  return out;
}

StateVector evolve_diagonal(std::span<const double> energies, StateVector psi, double t) {
  if (energies.size() != psi.size()) throw ValidationError("energy count does not match state size");
  CVector& a = psi.data();
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const double phase = -energies[static_cast<std::size_t>(k)] * t;
    a(k) *= Complex(std::cos(phase), std::sin(phase));
  }
  return psi;
}

// Measurements ----------------------------------------------------------

CMatrix partial_trace(const StateVector& psi, std::span<const int> keep) {
  const auto& dims = psi.dims();
  const int n = static_cast<int>(dims.size());
  if (keep.empty()) throw ValidationError("partial trace must keep at least one subsystem");
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw ValidationError("invalid subsystem index in partial trace");
    if (kept[static_cast<std::size_t>(k)]) throw ValidationError("duplicate subsystem index in partial trace");
    kept[static_cast<std::size_t>(k)] = true;
  }
  // Sort so the result follows the original subsystem order.
  std::vector<int> keep_sorted(keep.begin(), keep.end());
  std::sort(keep_sorted.begin(), keep_sorted.end());

  std::size_t keep_dim = 1;
  std::size_t trace_dim = 1;
  for (int i = 0; i < n; ++i) {
    (kept[static_cast<std::size_t>(i)] ? keep_dim : trace_dim) *= static_cast<std::size_t>(dims[static_cast<std::size_t>(i)]);
  }

  // Reshape psi into a keep_dim x trace_dim matrix M; rho = M M^dag.
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(keep_dim), static_cast<Eigen::Index>(trace_dim));
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    std::size_t r = 0;
    std::size_t c = 0;
    for (int i = 0; i < n; ++i) {
      const auto d = static_cast<std::size_t>(dims[static_cast<std::size_t>(i)]);
      if (kept[static_cast<std::size_t>(i)]) {
        r = r * d + static_cast<std::size_t>(digit[static_cast<std::size_t>(i)]);
      } else {
        c = c * d + static_cast<std::size_t>(digit[static_cast<std::size_t>(i)]);
      }
    }
    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = psi.amps()(static_cast<Eigen::Index>(idx));
    for (int i = n - 1; i >= 0; --i) {
      if (++digit[static_cast<std::size_t>(i)] < dims[static_cast<std::size_t>(i)]) break;
      digit[static_cast<std::size_t>(i)] = 0;
    }
  }
  return m * m.adjoint();
}

Complex expectation(const StateVector& psi, const OperatorMatrix& op) {
  if (static_cast<std::size_t>(op.dim()) != psi.size()) throw ValidationError("operator/state dimension mismatch");
  return psi.amps().dot(op.sparse() * psi.amps());
}

double expectation_real(const StateVector& psi, const OperatorMatrix& op) {
  const Complex v = expectation(psi, op);
  if (std::abs(v.imag()) > 1e-10) {
    throw NumericalError("expectation of a hermitian operator has an imaginary part");
  }
  return v.real();
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw ValidationError("fidelity of states with different sizes");
  return std::norm(a.amps().dot(b.amps()));
}

double trace_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("trace distance size mismatch");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double purity(const CMatrix& rho) { return (rho * rho).trace().real(); }

}  // namespace riqs::hilbert
