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

#ifndef TDESIGN_GT_IRREP_HPP_
#define TDESIGN_GT_IRREP_HPP_

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "tdesign/weights.hpp"

namespace tdesign {

// Triangular interlacing array. rows[n] has n+1 entries; rows[d-1] equals
// the weight. Every row interlaces the one above it:
//   rows[n][i] >= rows[n-1][i] >= rows[n][i+1].
struct GTPattern {
  std::vector<std::vector<int>> rows;
};

// All patterns with top row w, in a fixed deterministic order. Their count
// equals weyl_dimension(w).
std::vector<GTPattern> enumerate_patterns(const Weight& w);

// Images of the elementary matrices E_jk under the Lie algebra
// representation with highest weight w, in the orthonormal pattern basis.
//
// Diagonal images act by row-sum differences; the images of E_{n,n+1} raise
// one entry of row n with the classical square-root coefficients, and
// E_{n+1,n} is the exact transpose. Images with |j-k| >= 2 are filled in by
// nested commutators, so all commutation relations hold by construction up
// to rounding. All images are real matrices, and image(j,k) is the
// transpose of image(k,j).
class AlgebraRep {
 public:
  static constexpr std::int64_t kDefaultDimCap = 4096;

  // Throws ResourceError when the representation dimension exceeds dim_cap.
  static AlgebraRep build(const Weight& w,
                          std::int64_t dim_cap = kDefaultDimCap);

  int rank() const { return rank_; }
  Eigen::Index dim() const { return gen_.empty() ? 0 : gen_[0].rows(); }
  const Weight& weight() const { return weight_; }

  // Image of E_jk, zero-based indices.
  const Eigen::MatrixXd& generator(int j, int k) const;

  // Image of an arbitrary complex matrix a: sum_jk a(j,k) * generator(j,k).
  // Hermitian a gives a Hermitian image.
  Eigen::MatrixXcd algebra_image(const Eigen::MatrixXcd& a) const;

 private:
  AlgebraRep(Weight w, int rank) : weight_(std::move(w)), rank_(rank) {}

  Weight weight_;
  int rank_;
  std::vector<Eigen::MatrixXd> gen_;  // row-major rank_ x rank_
};

// Value of the unitary irreducible representation at u: the exponential of
// the algebra image of a logarithm of u. The branch of the logarithm does
// not matter because the weight sums to zero. Throws ArgumentError when u
// is not unitary within 1e-10.
Eigen::MatrixXcd evaluate_irrep(const AlgebraRep& rep,
                                const Eigen::MatrixXcd& u);

// Character at diag(exp(i*phases[0]), ..., exp(i*phases[d-1])) computed as
// a ratio of alternants. Coinciding points are handled exactly when all
// phases agree and by Richardson extrapolation otherwise.
std::complex<double> weyl_character(const Weight& w,
                                    const std::vector<double>& phases);

}  // namespace tdesign

#endif  // TDESIGN_GT_IRREP_HPP_
