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

#ifndef TDESIGN_STATS_HPP_
#define TDESIGN_STATS_HPP_

#include <cstddef>
#include <vector>

#include "tdesign/moments.hpp"
#include "tdesign/sampling.hpp"
#include "tdesign/weights.hpp"

namespace tdesign {

struct TailPoint {
  double p = 0.0;   // fraction of samples strictly above the threshold
  double se = 0.0;  // binomial standard error sqrt(p(1-p)/n)
};

TailPoint empirical_tail(const std::vector<double>& samples,
                         double threshold);

struct SummaryStats {
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;  // sample standard deviation, n-1 normalization
};

SummaryStats summarize(const std::vector<double>& samples);

// Least-squares fit of the half-Gaussian tail model
//   G(eps) = (1 - erf(eps / (sqrt(2) * scale))) / 2
// to the empirical tail of (sample - center), on 40 evenly spaced
// thresholds from 0 to the 99.5th percentile. Throws FitError on
// degenerate input.
struct ErfFit {
  double scale = 0.0;
  double residual = 0.0;  // root mean square misfit over the grid
};

ErfFit fit_erf_tail(const std::vector<double>& samples, double center);

// One row of the ordering check between an empirical experiment, its
// limiting model, and the analytic tail bound at threshold 2 + eps:
// empirical tail <= model tail <= bound, each up to three standard errors.
struct ConjectureRow {
  Weight weight;
  double eps = 0.0;
  double empirical_tail = 0.0;
  double empirical_se = 0.0;
  double model_tail = 0.0;
  double model_se = 0.0;
  double bound = 0.0;
  bool ok = false;
};

// The empirical table must be scaled (SqrtS or TwoOverDeltaOpt); the model
// table holds unscaled limiting norms. Tables must agree on their weight
// lists. The bound column is tail_bound_single at the weight's dimension
// under the empirical table's setting.
std::vector<ConjectureRow> conjecture_report(
    const SampleTable& empirical, const SampleTable& model,
    const std::vector<double>& eps_grid);

}  // namespace tdesign

#endif  // TDESIGN_STATS_HPP_
