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

#ifndef TDESIGN_LINALG_HPP_
#define TDESIGN_LINALG_HPP_

#include <Eigen/Dense>

#include "tdesign/rng.hpp"

namespace tdesign {

// Largest singular value via a full decomposition.
double operator_norm(const Eigen::MatrixXcd& a);
double operator_norm(const Eigen::MatrixXd& a);

// Largest absolute eigenvalue of a Hermitian (or real symmetric) matrix.
double hermitian_operator_norm(const Eigen::MatrixXcd& h);
double symmetric_operator_norm(const Eigen::MatrixXd& h);

// Iterative norm estimates (Lanczos with full reorthogonalization on the
// matrix itself for Hermitian input, on a*a for general input). Accurate to
// tol in the reported value; intended for large blocks where a full
// decomposition dominates the runtime. The start vector is drawn from rng,
// so results are deterministic per stream.
double hermitian_norm_estimate(const Eigen::MatrixXcd& h, RngStream& rng,
                               double tol = 1e-10, int max_iter = 10000);
double symmetric_norm_estimate(const Eigen::MatrixXd& h, RngStream& rng,
                               double tol = 1e-10, int max_iter = 10000);
double singular_norm_estimate(const Eigen::MatrixXcd& a, RngStream& rng,
                              double tol = 1e-10, int max_iter = 10000);
double singular_norm_estimate(const Eigen::MatrixXd& a, RngStream& rng,
                              double tol = 1e-10, int max_iter = 10000);

}  // namespace tdesign

#endif  // TDESIGN_LINALG_HPP_
