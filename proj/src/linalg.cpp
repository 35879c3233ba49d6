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

#include "tdesign/linalg.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "tdesign/errors.hpp"

namespace tdesign {

double operator_norm(const Eigen::MatrixXcd& a) {
  if (a.rows() <= 16 && a.cols() <= 16) {
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues()(0);
  }
  return Eigen::BDCSVD<Eigen::MatrixXcd>(a).singularValues()(0);
}

double operator_norm(const Eigen::MatrixXd& a) {
  if (a.rows() <= 16 && a.cols() <= 16) {
    return Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues()(0);
  }
  return Eigen::BDCSVD<Eigen::MatrixXd>(a).singularValues()(0);
}

double hermitian_operator_norm(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h,
                                                     Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double symmetric_operator_norm(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

namespace {

// Lanczos with full reorthogonalization for the extreme eigenvalues of a
// Hermitian operator given as a matvec. Returns the largest absolute Ritz
// value once it stabilizes within tol; restarts from the best Ritz vector
// when the basis hits its cap.
template <typename Scalar>
double lanczos_extreme(
    const std::function<void(
        const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>&,
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1>&)>& matvec,
    Eigen::Index n, double tol, int max_iter, RngStream& rng) {
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const int basis_cap = static_cast<int>(
      std::min<Eigen::Index>(n, 256));

  Vec v0(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
      v0(i) = Scalar(rng.normal(), rng.normal());
    } else {
      v0(i) = rng.normal();
    }
  }
  v0.normalize();

  double previous = 0.0;
  bool have_previous = false;
  int used = 0;
  while (used < max_iter) {
    std::vector<Vec> basis;
    std::vector<double> alpha;
    std::vector<double> beta;  // beta[j] couples basis[j] and basis[j+1]
    basis.push_back(v0);
    Vec w(n);
    Eigen::MatrixXd tri;
    Eigen::VectorXd ritz;
    Eigen::MatrixXd ritz_vectors;
    bool invariant = false;
    for (int j = 0; j < basis_cap && used < max_iter; ++j, ++used) {
      matvec(basis[j], w);
      const double a = std::real(Scalar(basis[j].dot(w)));
      alpha.push_back(a);
      w -= a * basis[j];
      if (j > 0) w -= beta[j - 1] * basis[j - 1];
      // One extra pass of reorthogonalization keeps the basis numerically
      // orthogonal, which Lanczos needs for reliable edge Ritz values.
      for (const Vec& b : basis) w -= b.dot(w) * b;
      const double nb = w.norm();

      const int k = j + 1;
      tri = Eigen::MatrixXd::Zero(k, k);
      for (int i = 0; i < k; ++i) tri(i, i) = alpha[i];
      for (int i = 0; i + 1 < k; ++i) {
        tri(i, i + 1) = tri(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
      ritz = es.eigenvalues();
      ritz_vectors = es.eigenvectors();
      const double extreme =
          std::max(std::abs(ritz(0)), std::abs(ritz(k - 1)));
      if (nb < 1e-13 * std::max(1.0, extreme)) {
        invariant = true;
        break;
      }
      if (have_previous && j >= 2 &&
          std::abs(extreme - previous) <= tol * std::max(1.0, extreme)) {
        return extreme;
      }
      previous = extreme;
      have_previous = true;
      beta.push_back(nb);
      basis.push_back(w / nb);
    }
    const int k = static_cast<int>(alpha.size());
    const double extreme = std::max(std::abs(ritz(0)), std::abs(ritz(k - 1)));
    if (invariant || used >= max_iter) return extreme;
    // Restart from the Ritz vector of the extreme eigenvalue.
    const int which = std::abs(ritz(0)) > std::abs(ritz(k - 1)) ? 0 : k - 1;
    Vec next = Vec::Zero(n);
    for (int i = 0; i < k; ++i) next += ritz_vectors(i, which) * basis[i];
    next.normalize();
    v0 = next;
  }
  return previous;
}

}  // namespace

double hermitian_norm_estimate(const Eigen::MatrixXcd& h, RngStream& rng,
                               double tol, int max_iter) {
  if (h.rows() != h.cols()) throw ArgumentError("matrix must be square");
  using Vec = Eigen::VectorXcd;
  std::function<void(const Vec&, Vec&)> mv = [&h](const Vec& x, Vec& y) {
    y.noalias() = h * x;
  };
  return lanczos_extreme<std::complex<double>>(mv, h.rows(), tol, max_iter,
                                               rng);
}

double symmetric_norm_estimate(const Eigen::MatrixXd& h, RngStream& rng,
                               double tol, int max_iter) {
  if (h.rows() != h.cols()) throw ArgumentError("matrix must be square");
  using Vec = Eigen::VectorXd;
  std::function<void(const Vec&, Vec&)> mv = [&h](const Vec& x, Vec& y) {
    y.noalias() = h * x;
  };
  return lanczos_extreme<double>(mv, h.rows(), tol, max_iter, rng);
}

double singular_norm_estimate(const Eigen::MatrixXcd& a, RngStream& rng,
                              double tol, int max_iter) {
  using Vec = Eigen::VectorXcd;
  Vec tmp(a.rows());
  std::function<void(const Vec&, Vec&)> mv = [&a, &tmp](const Vec& x,
                                                        Vec& y) {
    tmp.noalias() = a * x;
    y.noalias() = a.adjoint() * tmp;
  };
  const double lambda = lanczos_extreme<std::complex<double>>(
      mv, a.cols(), tol, max_iter, rng);
  return std::sqrt(std::max(0.0, lambda));
}

double singular_norm_estimate(const Eigen::MatrixXd& a, RngStream& rng,
                              double tol, int max_iter) {
  using Vec = Eigen::VectorXd;
  Vec tmp(a.rows());
  std::function<void(const Vec&, Vec&)> mv = [&a, &tmp](const Vec& x,
                                                        Vec& y) {
    tmp.noalias() = a * x;
    y.noalias() = a.transpose() * tmp;
  };
  const double lambda =
      lanczos_extreme<double>(mv, a.cols(), tol, max_iter, rng);
  return std::sqrt(std::max(0.0, lambda));
}

}  // namespace tdesign
