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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "riqs/errors.hpp"
#include "riqs/qubit_ops.hpp"

namespace riqs::hilbert {
namespace {

namespace oracle = riqs::testing;

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Kron, IdentityTimesIdentity) {
  const OperatorMatrix ops[] = {OperatorMatrix::identity(2), OperatorMatrix::identity(2)};
  EXPECT_EQ(max_abs(kron(ops).dense() - CMatrix::Identity(4, 4)), 0.0);
}

TEST(Kron, PauliZLeftFactorIsSlowest) {
  const CMatrix m = kron(pauli_z(), OperatorMatrix::identity(2)).dense();
  CMatrix expected = CMatrix::Zero(4, 4);
  expected.diagonal() << 1, 1, -1, -1;
  EXPECT_EQ(max_abs(m - expected), 0.0);
}

TEST(Kron, MatchesElementwiseLoop) {
  const CMatrix got = kron(pauli_y(), pauli_y()).dense();
  EXPECT_LT(max_abs(got - oracle::kron_loop(pauli_y().dense(), pauli_y().dense())), 1e-15);
}

TEST(Kron, Associative) {
  std::srand(7);
  const OperatorMatrix a = OperatorMatrix::from_dense(CMatrix::Random(2, 2));
  const OperatorMatrix b = OperatorMatrix::from_dense(CMatrix::Random(3, 3));
  const OperatorMatrix c = OperatorMatrix::from_dense(CMatrix::Random(2, 2));
  EXPECT_LT(max_abs(kron(a, kron(b, c)).dense() - kron(kron(a, b), c).dense()), 1e-14);
}

TEST(OperatorMatrix, RejectsFalseHermitianFlag) {
  CMatrix m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_THROW(OperatorMatrix::from_dense(m, true), ValidationError);
}

TEST(Builders, SpinHalfMatchesHandWritten) {
  EXPECT_EQ(max_abs(spin_half(SpinAxis::x).dense() - oracle::sx()), 0.0);
  EXPECT_EQ(max_abs(spin_half(SpinAxis::y).dense() - oracle::sy()), 0.0);
  EXPECT_EQ(max_abs(spin_half(SpinAxis::z).dense() - oracle::sz()), 0.0);
  // [s_x, s_y] = i s_z
  const CMatrix x = oracle::sx(), y = oracle::sy(), z = oracle::sz();
  EXPECT_LT(max_abs(x * y - y * x - Complex(0, 1) * z), 1e-15);
}

TEST(Builders, CanonicalCommutatorAwayFromCutoff) {
  const int d = 12;
  const CMatrix x = position(d).dense();
  const CMatrix p = momentum(d).dense();
  const CMatrix comm = x * p - p * x;
  // [x, p] = i except in the last Fock state.
  EXPECT_LT(max_abs(comm.topLeftCorner(d - 1, d - 1) - Complex(0, 1) * CMatrix::Identity(d - 1, d - 1)), 1e-14);
}

TEST(StateVector, RejectsUnnormalizedAndWrongLength) {
  EXPECT_THROW(StateVector({2}, CVector::Ones(2)), ValidationError);
  EXPECT_THROW(StateVector({2, 2}, CVector::Unit(2, 0)), ValidationError);
  EXPECT_NO_THROW(StateVector::normalized({2}, CVector::Ones(2)));
}

TEST(EvolveOde, ZeroHamiltonianIsIdentity) {
  const StateVector psi = StateVector::normalized({2, 3}, oracle::random_state(6, 3));
  const auto h = [](double) { return OperatorMatrix::zero(6); };
  const StateVector out = evolve_ode(h, psi, 10.0);
  EXPECT_LT((out.amps() - psi.amps()).norm(), 1e-12);
}

TEST(EvolveOde, EigenstatePicksUpPhase) {
  const OperatorMatrix h = 0.5 * pauli_z();
  const StateVector psi = StateVector::basis({2}, 0);
  for (double t : {0.3, 2.0, 7.5}) {
    const StateVector out = evolve_ode([&](double) { return h; }, psi, t, 1e-10);
    EXPECT_NEAR(std::abs(out.amps()(0) - std::exp(Complex(0, -t / 2))), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(out.amps()(1)), 0.0, 1e-12);
    EXPECT_NEAR(out.norm(), 1.0, 1e-9);
  }
}

TEST(EvolveOde, TimeIndependentMatchesMatrixExponential) {
  // dim 12 random Hermitian, dense oracle
  std::srand(11);
  CMatrix r = CMatrix::Random(12, 12);
  const CMatrix h = 0.5 * (r + r.adjoint());
  const StateVector psi = StateVector::normalized({3, 4}, oracle::random_state(12, 5));
  const double tol = 1e-9;
  const OperatorMatrix op = OperatorMatrix::from_dense(h, true);
  const StateVector out = evolve_ode([&](double) { return op; }, psi, 3.0, tol);
  const oracle::Vec expected = oracle::expm(h, 3.0) * psi.amps();
  EXPECT_LT((out.amps() - expected).cwiseAbs().maxCoeff(), 10 * tol);
}

TEST(EvolveOde, GridAgreesWithSingleShot) {
  LinearHamiltonian h;
  h.terms = {pauli_x(), pauli_z()};
  h.coefficients = {[](double t) { return std::cos(t); }, [](double) { return 0.3; }};
  const StateVector psi = StateVector::basis({2}, 0);
  const std::vector<double> grid = {0.0, 0.5, 1.0, 4.0};
  const auto states = evolve_ode_grid(h, psi, grid, 1e-10);
  ASSERT_EQ(states.size(), grid.size());
  EXPECT_LT((states[0].amps() - psi.amps()).norm(), 1e-15);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const StateVector single = evolve_ode(h, psi, grid[i], 1e-10);
    EXPECT_LT((states[i].amps() - single.amps()).norm(), 1e-7);
  }
}

TEST(EvolveOde, RejectsNonHermitianAndMismatchedDims) {
  const StateVector psi = StateVector::basis({2}, 0);
  CMatrix m(2, 2);
  m << 0, 1, 0, 0;
  const OperatorMatrix bad = OperatorMatrix::from_dense(m);
  EXPECT_THROW(evolve_ode([&](double) { return bad; }, psi, 1.0), ValidationError);
  EXPECT_THROW(evolve_ode([&](double) { return OperatorMatrix::zero(3); }, psi, 1.0), ValidationError);
  EXPECT_THROW(evolve_ode([&](double) { return OperatorMatrix::zero(2); }, psi, 1.0, 0.0), ValidationError);
}

TEST(EvolveOde, LargeDriftIsAnError) {
  // A loose tolerance on a long, fast run drifts far beyond 1e-6.
  const OperatorMatrix h = 40.0 * pauli_x();
  const StateVector psi = StateVector::basis({2}, 0);
  EXPECT_THROW(evolve_ode([&](double) { return h; }, psi, 500.0, 1e-1), NumericalError);
}

TEST(EvolveDiagonal, ZeroAndConstantEnergies) {
  const StateVector psi = StateVector::normalized({2, 2}, oracle::random_state(4, 9));
  const std::vector<double> zero(4, 0.0);
  EXPECT_LT((evolve_diagonal(zero, psi, 3.0).amps() - psi.amps()).norm(), 1e-16);
  const std::vector<double> flat(4, 1.7);
  const CVector expected = std::exp(Complex(0, -1.7 * 2.0)) * psi.amps();
  EXPECT_LT((evolve_diagonal(flat, psi, 2.0).amps() - expected).norm(), 1e-15);
  EXPECT_THROW(evolve_diagonal(std::vector<double>(3, 0.0), psi, 1.0), ValidationError);
}

TEST(EvolveDiagonal, MatchesOde) {
  const std::vector<double> e = {0.3, -1.2, 2.5, 0.0, 0.7, -0.4};
  CMatrix h = CMatrix::Zero(6, 6);
  for (int i = 0; i < 6; ++i) h(i, i) = e[static_cast<std::size_t>(i)];
  const StateVector psi = StateVector::normalized({2, 3}, oracle::random_state(6, 21));
  const OperatorMatrix op = OperatorMatrix::from_dense(h, true);
  const StateVector a = evolve_diagonal(e, psi, 4.0);
  const StateVector b = evolve_ode([&](double) { return op; }, psi, 4.0, 1e-12);
  EXPECT_LT((a.amps() - b.amps()).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_NEAR(a.norm(), 1.0, 1e-12);
}

TEST(PartialTrace, ProductStateWithFockMode) {
  // |0> (x) |n=3> with a 5-level mode
  const StateVector psi = StateVector::basis({2, 5}, 3);
  const CMatrix rho = partial_trace(psi, std::vector<int>{0});
  CMatrix expected = CMatrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  EXPECT_LT(max_abs(rho - expected), 1e-15);
}

TEST(PartialTrace, BellStateIsMaximallyMixed) {
  CVector a = CVector::Zero(4);
  a(0) = a(3) = M_SQRT1_2;
  const StateVector bell({2, 2}, a);
  EXPECT_LT(max_abs(partial_trace(bell, std::vector<int>{1}) - 0.5 * CMatrix::Identity(2, 2)), 1e-15);
}

TEST(PartialTrace, MatchesIndexLoopOracle) {
  const StateVector psi = StateVector::normalized({2, 3}, oracle::random_state(6, 33));
  const auto& a = psi.amps();
  CMatrix keep_first = CMatrix::Zero(2, 2);
  CMatrix keep_second = CMatrix::Zero(3, 3);
  for (int i = 0; i < 2; ++i)
    for (int ip = 0; ip < 2; ++ip)
      for (int j = 0; j < 3; ++j) keep_first(i, ip) += a(i * 3 + j) * std::conj(a(ip * 3 + j));
  for (int j = 0; j < 3; ++j)
    for (int jp = 0; jp < 3; ++jp)
      for (int i = 0; i < 2; ++i) keep_second(j, jp) += a(i * 3 + j) * std::conj(a(i * 3 + jp));
  EXPECT_LT(max_abs(partial_trace(psi, std::vector<int>{0}) - keep_first), 1e-12);
  EXPECT_LT(max_abs(partial_trace(psi, std::vector<int>{1}) - keep_second), 1e-12);
  const CMatrix rho = partial_trace(psi, std::vector<int>{1});
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-10);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho);
  EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
}

TEST(PartialTrace, ProductOfFactorsReturnsFactor) {
  const CVector f0 = oracle::random_state(2, 41);
  const CVector f1 = oracle::random_state(4, 42);
  const CVector f2 = oracle::random_state(3, 43);
  const CVector fs[] = {f0, f1, f2};
  const StateVector psi = StateVector::product(fs);
  EXPECT_LT(max_abs(partial_trace(psi, std::vector<int>{1}) - f1 * f1.adjoint()), 1e-14);
  EXPECT_THROW(partial_trace(psi, std::vector<int>{}), ValidationError);
  EXPECT_THROW(partial_trace(psi, std::vector<int>{3}), ValidationError);
}

TEST(Expectation, PauliBasics) {
  EXPECT_DOUBLE_EQ(expectation_real(StateVector::basis({2}, 0), pauli_z()), 1.0);
  const StateVector plus = StateVector::normalized({2}, CVector::Ones(2));
  EXPECT_NEAR(expectation_real(plus, pauli_x()), 1.0, 1e-15);
  EXPECT_THROW(expectation(plus, OperatorMatrix::identity(3)), ValidationError);
}

TEST(Expectation, CollectiveJySquaredMatchesDenseOracle) {
  const std::vector<int> dims = {2, 2, 2};
  const OperatorMatrix jy = collective_spin(SpinAxis::y, 3, dims);
  const OperatorMatrix jy2 = jy * jy;
  const oracle::Dense dense_jy = oracle::collective(oracle::sy(), 3);
  for (unsigned seed : {1U, 2U, 3U}) {
    const StateVector psi = StateVector::normalized(dims, oracle::random_state(8, seed));
    const Complex expected = psi.amps().dot(dense_jy * dense_jy * psi.amps());
    const Complex got = expectation(psi, jy2);
    EXPECT_NEAR(std::abs(got - expected), 0.0, 1e-12);
    EXPECT_LT(std::abs(got.imag()), 1e-10);
  }
}

TEST(QubitOps, SpinSumsMatchDenseOperators) {
  const int n = 4;
  const StateVector psi = StateVector::normalized(std::vector<int>(n, 2), oracle::random_state(16, 77));
  const std::vector<int> all = {0, 1, 2, 3};
  EXPECT_LT((qubits::apply_spin_sum(psi.amps(), SpinAxis::x, all) - oracle::collective(oracle::sx(), n) * psi.amps()).norm(), 1e-14);
  EXPECT_LT((qubits::apply_spin_sum(psi.amps(), SpinAxis::y, all) - oracle::collective(oracle::sy(), n) * psi.amps()).norm(), 1e-14);
  EXPECT_LT((qubits::apply_spin_sum(psi.amps(), SpinAxis::z, all) - oracle::collective(oracle::sz(), n) * psi.amps()).norm(), 1e-14);
  CVector a = psi.amps();
  qubits::apply_gate(a, 2, qubits::spin_rotation(SpinAxis::y, 0.7));
  EXPECT_LT((a - oracle::expm(oracle::site_op(oracle::sy(), 2, n), 0.7) * psi.amps()).norm(), 1e-13);
}

TEST(TimeSeries, EnforcesShape) {
  TimeSeries ts({"a", "b"});
  ts.append(0.0, {1.0, 2.0});
  EXPECT_THROW(ts.append(0.0, {1.0, 2.0}), ValidationError);
  EXPECT_THROW(ts.append(1.0, {1.0}), ValidationError);
  ts.append(1.0, {3.0, 4.0});
  EXPECT_EQ(ts.column("b"), (std::vector<double>{2.0, 4.0}));
  EXPECT_THROW(ts.column("c"), std::out_of_range);
}

}  // namespace
}  // namespace riqs::hilbert
