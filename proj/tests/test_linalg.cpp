// Copyright 2026 The tdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <complex>

#include <doctest.h>

#include "tdesign/linalg.hpp"
#include "tdesign/rng.hpp"

using namespace tdesign;

namespace {

Eigen::MatrixXd random_matrix(int rows, int cols, RngStream& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.normal();
  }
  return m;
}

Eigen::MatrixXcd random_complex_matrix(int rows, int cols, RngStream& rng) {
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  }
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("operator norm of explicit matrices") {
  Eigen::MatrixXd a(2, 2);
  a << 3.0, 0.0, 0.0, -4.0;
  CHECK(operator_norm(a) == doctest::Approx(4.0).epsilon(1e-14));

  Eigen::MatrixXd rect(2, 3);
  rect << 1.0, 0.0, 0.0, 0.0, 2.0, 0.0;
  CHECK(operator_norm(rect) == doctest::Approx(2.0).epsilon(1e-14));

  Eigen::MatrixXcd c(2, 2);
  c << std::complex<double>(0.0, 5.0), 0.0, 0.0, 1.0;
  CHECK(operator_norm(c) == doctest::Approx(5.0).epsilon(1e-14));

  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(3, 3);
  CHECK(operator_norm(zero) == 0.0);
}

TEST_CASE("hermitian norm equals the extreme absolute eigenvalue") {
  RngStream rng = RngStream::keyed(1, {1});
  const Eigen::MatrixXd g = random_matrix(40, 40, rng);
  const Eigen::MatrixXd s = 0.5 * (g + g.transpose());
  CHECK(symmetric_operator_norm(s) ==
        doctest::Approx(operator_norm(s)).epsilon(1e-12));

  const Eigen::MatrixXcd gc = random_complex_matrix(40, 40, rng);
  const Eigen::MatrixXcd h = 0.5 * (gc + gc.adjoint());
  CHECK(hermitian_operator_norm(h) ==
        doctest::Approx(operator_norm(h)).epsilon(1e-12));
}

TEST_CASE("negative extreme eigenvalue dominates when larger in magnitude") {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(3, 3);
  s(0, 0) = -7.0;
  s(1, 1) = 5.0;
  CHECK(symmetric_operator_norm(s) == doctest::Approx(7.0).epsilon(1e-14));
}

TEST_CASE("iterative symmetric estimate agrees with the dense solver") {
  RngStream rng = RngStream::keyed(2, {7});
  for (int n : {5, 60, 300}) {
    const Eigen::MatrixXd g = random_matrix(n, n, rng);
    const Eigen::MatrixXd s = 0.5 * (g + g.transpose());
    const double exact = symmetric_operator_norm(s);
    const double est = symmetric_norm_estimate(s, rng);
    CHECK(std::abs(est - exact) <= 1e-8 * std::max(1.0, exact));
  }
}

TEST_CASE("iterative hermitian estimate agrees with the dense solver") {
  RngStream rng = RngStream::keyed(3, {8});
  for (int n : {5, 300}) {
    const Eigen::MatrixXcd g = random_complex_matrix(n, n, rng);
    const Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
    const double exact = hermitian_operator_norm(h);
    const double est = hermitian_norm_estimate(h, rng);
    CHECK(std::abs(est - exact) <= 1e-8 * std::max(1.0, exact));
  }
}

TEST_CASE("iterative singular-value estimate agrees with dense SVD") {
  RngStream rng = RngStream::keyed(4, {9});
  const Eigen::MatrixXd a = random_matrix(220, 180, rng);
  CHECK(std::abs(singular_norm_estimate(a, rng) - operator_norm(a)) <=
        1e-8 * operator_norm(a));
  const Eigen::MatrixXcd c = random_complex_matrix(150, 260, rng);
  CHECK(std::abs(singular_norm_estimate(c, rng) - operator_norm(c)) <=
        1e-8 * operator_norm(c));
}

TEST_CASE("iterative estimates handle degenerate spectra") {
  RngStream rng = RngStream::keyed(5, {10});
  // Identity: the Krylov space collapses after one step.
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(50, 50);
  CHECK(symmetric_norm_estimate(eye, rng) ==
        doctest::Approx(1.0).epsilon(1e-10));
  // Rank one.
  Eigen::VectorXd v = Eigen::VectorXd::Zero(64);
  v(3) = 2.0;
  v(17) = -1.0;
  const Eigen::MatrixXd rank1 = v * v.transpose();
  CHECK(symmetric_norm_estimate(rank1, rng) ==
        doctest::Approx(v.squaredNorm()).epsilon(1e-10));
  // Highly degenerate with one separated eigenvalue.
  Eigen::MatrixXd d = Eigen::MatrixXd::Identity(80, 80);
  d(79, 79) = 2.0;
  CHECK(symmetric_norm_estimate(d, rng) ==
        doctest::Approx(2.0).epsilon(1e-10));
  // Zero matrix.
  CHECK(symmetric_norm_estimate(Eigen::MatrixXd::Zero(20, 20), rng) <= 1e-12);
}

}  // TEST_SUITE
