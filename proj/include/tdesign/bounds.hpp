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

#ifndef TDESIGN_BOUNDS_HPP_
#define TDESIGN_BOUNDS_HPP_

#include <cstdint>

#include "tdesign/sampling.hpp"

namespace tdesign {

// Tail bound on the norm of one limiting block of linear size n:
// P(norm > 2 + eps) <= F_kind(n, eps), with
//   F_GOE = exp(-n eps^2 / 4) / 2     F_GUE = exp(-n eps^2 / 2) / 2
//   F_RealGinibre = F_GUE             F_ComplexGinibre = exp(-n eps^2) / 2
double tail_bound_single(EnsembleKind kind, std::int64_t n, double eps);

// Union bound on P(delta_t > 2 + eps): the sum of tail_bound_single over
// the essential weights at order t, each sized by its dimension. Returned
// raw (it can exceed 1 for small eps); callers clamp for display.
double union_bound_delta_t(int d, int t, double eps, Setting setting);

// Sharper product form 1 - exp(-union sum); always in [0, 1] and below the
// union bound.
double product_bound_delta_t(int d, int t, double eps, Setting setting);

// Closed form of the union bound for d = 2, where the block sizes are
// 3, 5, ..., 2t+1 and the sum is geometric.
double qubit_closed_form(int t, double eps, Setting setting);

// Limit of qubit_closed_form as t grows.
double qubit_closed_form_limit(double eps, Setting setting);

// Exponential integral Ei(x) for x > 0: power series up to x = 40 and the
// divergent asymptotic series truncated at its smallest term beyond.
double exponential_integral(double x);

// The constant b in the dimension-independent tail bound, evaluated from
// Ei. Roughly 3855.93.
double global_b_constant();

struct BoundResult {
  double value = 1.0;      // clamped to [0, 1]
  bool valid = false;      // eps is above the validity threshold
  double threshold = 0.0;  // smallest eps the bound is stated for
};

// Tail bound on P(delta > 2 + eps) for the full infinite-order limit,
// uniform over the order: closed form at d = 2, the two-term expression
// with the Ei-based constant for d >= 3.
BoundResult global_bound(int d, double eps, Setting setting);

struct SpectralGapTailSum {
  double partial_sum = 0.0;    // union-bound terms up to order t_max
  double tail_estimate = 0.0;  // bound on everything beyond t_max
  double total = 0.0;
  int t_max = 0;
};

// Evidence that the full union series converges: partial sum plus an
// integral-comparison estimate 2^(d-1) * c_d * (d-2)! / eps^(2(d-1)) of the
// truncated tail, where c_d bounds the weight counts alpha_{2k} / k^(d-2)
// observed up to t_max.
SpectralGapTailSum spectral_gap_tail_sum(int d, double eps, Setting setting,
                                         int t_max);

}  // namespace tdesign

#endif  // TDESIGN_BOUNDS_HPP_
