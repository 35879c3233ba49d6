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

#include "tdesign/stats.hpp"

#include <algorithm>
#include <cmath>

#include "tdesign/bounds.hpp"
#include "tdesign/errors.hpp"

namespace tdesign {

TailPoint empirical_tail(const std::vector<double>& samples,
                         double threshold) {
  if (samples.empty()) throw ArgumentError("no samples");
  std::size_t above = 0;
  for (double v : samples) {
    if (v > threshold) ++above;
  }
  const double n = static_cast<double>(samples.size());
  const double p = static_cast<double>(above) / n;
  return TailPoint{p, std::sqrt(p * (1.0 - p) / n)};
}

SummaryStats summarize(const std::vector<double>& samples) {
  if (samples.empty()) throw ArgumentError("no samples");
  SummaryStats s;
  s.count = samples.size();
  double sum = 0.0;
  for (double v : samples) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  double ss = 0.0;
  for (double v : samples) ss += (v - s.mean) * (v - s.mean);
  s.stddev = s.count > 1
                 ? std::sqrt(ss / static_cast<double>(s.count - 1))
                 : 0.0;
  std::vector<double> sorted(samples);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t h = s.count / 2;
  s.median = s.count % 2 == 1 ? sorted[h]
                              : 0.5 * (sorted[h - 1] + sorted[h]);
  return s;
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

double erf_tail(double eps, double scale) {
  return 0.5 * (1.0 - std::erf(eps / (std::sqrt(2.0) * scale)));
}

}  // namespace

ErfFit fit_erf_tail(const std::vector<double>& samples, double center) {
  if (samples.size() < 2) throw FitError("need at least two samples");
  const SummaryStats s = summarize(samples);
  if (s.stddev <= 0.0) throw FitError("samples have zero variance");

  std::vector<double> sorted(samples);
  std::sort(sorted.begin(), sorted.end());
  const double top = quantile_sorted(sorted, 0.995) - center;
  if (top <= 0.0) {
    throw FitError("the 99.5th percentile does not exceed the center");
  }

  constexpr int kGrid = 40;
  std::vector<double> eps(kGrid);
  std::vector<double> target(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    eps[i] = top * static_cast<double>(i) / (kGrid - 1);
    target[i] = empirical_tail(samples, center + eps[i]).p;
  }

  auto sse = [&](double log_scale) {
    const double scale = std::exp(log_scale);
    double acc = 0.0;
    for (int i = 0; i < kGrid; ++i) {
      const double diff = target[i] - erf_tail(eps[i], scale);
      acc += diff * diff;
    }
    return acc;
  };

  // Golden-section search over log(scale) bracketing the sample spread.
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::log(s.stddev) - std::log(100.0);
  double hi = std::log(s.stddev) + std::log(100.0);
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = sse(x1);
  double f2 = sse(x2);
  for (int it = 0; it < 200; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = sse(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = sse(x2);
    }
    if (hi - lo < 1e-12) break;
  }
  const double best = 0.5 * (lo + hi);
  return ErfFit{std::exp(best), std::sqrt(sse(best) / kGrid)};
}

std::vector<ConjectureRow> conjecture_report(
    const SampleTable& empirical, const SampleTable& model,
    const std::vector<double>& eps_grid) {
  if (empirical.weights != model.weights) {
    throw ArgumentError("tables disagree on their weight lists");
  }
  if (empirical.config.scaling == ScalingMode::None) {
    throw ArgumentError("the empirical table must be scaled");
  }
  const Setting setting = empirical.config.is_symmetric ? Setting::Symmetric
                                                        : Setting::Plain;
  std::vector<ConjectureRow> report;
  report.reserve(empirical.weights.size() * eps_grid.size());
  for (std::size_t k = 0; k < empirical.weights.size(); ++k) {
    const Weight& w = empirical.weights[k];
    std::vector<double> emp;
    emp.reserve(empirical.rows.size());
    for (const auto& row : empirical.rows) emp.push_back(row[k]);
    std::vector<double> mod;
    mod.reserve(model.rows.size());
    for (const auto& row : model.rows) mod.push_back(row[k]);
    const std::int64_t dim = weyl_dimension(w);
    const EnsembleKind kind = ensemble_for(setting, classify(w));
    for (double eps : eps_grid) {
      const TailPoint a = empirical_tail(emp, 2.0 + eps);
      const TailPoint b = empirical_tail(mod, 2.0 + eps);
      ConjectureRow r{w,   eps, a.p, a.se, b.p,
                      b.se, tail_bound_single(kind, dim, eps), false};
      const double slack_ab =
          3.0 * std::sqrt(a.se * a.se + b.se * b.se);
      r.ok = a.p <= b.p + slack_ab && b.p <= r.bound + 3.0 * b.se;
      report.push_back(std::move(r));
    }
  }
  return report;
}

}  // namespace tdesign
