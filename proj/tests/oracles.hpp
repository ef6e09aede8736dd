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

// Independent reference computations for the test suites. Nothing here
// calls into the library's evolution or operator-building code paths.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace riqs::testing {

using Complex = std::complex<double>;
using Dense = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Element-wise Kronecker product: (A (x) B)[i*p + k, j*q + l] = A[i,j] B[k,l].
inline Dense kron_loop(const Dense& a, const Dense& b) {
  Dense out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// exp(-i H t) through Eigen's Pade/scaling-squaring matrix exponential.
inline Dense expm(const Dense& h, double t) { return (Complex(0.0, -t) * h).exp(); }

/// Spin-1/2 matrices written out by hand; basis (|down>, |up>) = (|0>, |1>).
inline Dense sx() {
  Dense m(2, 2);
  m << 0, 0.5, 0.5, 0;
  return m;
}
inline Dense sy() {
  Dense m(2, 2);
  m << 0, Complex(0, 0.5), Complex(0, -0.5), 0;
  return m;
}
inline Dense sz() {
  Dense m(2, 2);
  m << -0.5, 0, 0, 0.5;
  return m;
}

/// Single-site operator on qubit k of n, by explicit basis-index rule:
/// <i|O_k|j> = O[bit_k(i), bit_k(j)] if i and j agree off site k.
inline Dense site_op(const Dense& op, int k, int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Dense out = Dense::Zero(d, d);
  const Eigen::Index m = Eigen::Index{1} << (n - 1 - k);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      if ((i & ~m) != (j & ~m)) continue;
      out(i, j) = op((i & m) ? 1 : 0, (j & m) ? 1 : 0);
    }
  return out;
}

inline Dense collective(const Dense& op, int n) {
  Dense out = Dense::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (int k = 0; k < n; ++k) out += site_op(op, k, n);
  return out;
}

/// Composite trapezoid rule on [a, b].
inline double trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) s += f(a + i * h);
  return s * h;
}

/// Closed-form collective moments of the all-down state under
/// H = 2 chi sum_k j_x,k j_x,k+1 on a ring (each bond as two ordered
/// pairs), derived by hand and checked against brute force in the tests.
struct RingMoments {
  double jz;
  double var_x;
  double var_y;
  double cov_xy;
};

inline RingMoments ring_moments(int n, double chi_t) {
  const double s2 = std::sin(2.0 * chi_t);
  const double c = std::cos(chi_t);
  return {-0.5 * n * c * c, 0.25 * n, 0.25 * n * (1.0 + 0.5 * s2 * s2), 0.25 * n * s2};
}

inline double ring_variance(int n, double chi_t, double theta) {
  const auto m = ring_moments(n, chi_t);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return c * c * m.var_x + s * s * m.var_y + 2.0 * c * s * m.cov_xy;
}

inline double ring_xi2(int n, double chi_t, double theta) {
  const auto m = ring_moments(n, chi_t);
  return n * ring_variance(n, chi_t, theta) / (m.jz * m.jz);
}

/// Nearest-neighbor ring closed forms written in terms of chi t, as they
/// are usually quoted; the variance form disagrees with ring_variance.
inline double ring_jz_closed_form(int n, double chi_t) { return -0.5 * n * std::cos(chi_t) * std::cos(chi_t); }
inline double sin_form_variance_minus_quarter_pi(int n, double chi_t) {
  const double s = std::sin(chi_t);
  return 0.25 * n * (1.0 + 0.25 * s * s - s);
}

/// Golden-section minimum of a unimodal function on [a, b].
inline std::pair<double, double> golden_min(const std::function<double(double)>& f, double a, double b,
                                            double tol = 1e-12) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

/// Random normalized complex vector (deterministic in seed).
inline Vec random_state(Eigen::Index dim, unsigned seed) {
  std::srand(seed);
  Vec v = Vec::Random(dim);
  return v.normalized();
}

}  // namespace riqs::testing
