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

#include "tdesign/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "tdesign/errors.hpp"
#include "tdesign/weights.hpp"

namespace tdesign {

namespace {

void check_eps(double eps) {
  if (!(eps >= 0.0)) throw ArgumentError("threshold eps must be >= 0");
}

// Kahan-compensated accumulator; the d = 2 identity between the term sum
// and its closed form is checked to 1e-12, which plain summation of
// hundreds of terms does not reliably reach.
struct Accumulator {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double tail_bound_single(EnsembleKind kind, std::int64_t n, double eps) {
  if (n < 1) throw ArgumentError("block size must be positive");
  check_eps(eps);
  double divisor = 0.0;
  switch (kind) {
    case EnsembleKind::GOE:
      divisor = 4.0;
      break;
    case EnsembleKind::GUE:
    case EnsembleKind::RealGinibre:
      divisor = 2.0;
      break;
    case EnsembleKind::ComplexGinibre:
      divisor = 1.0;
      break;
  }
  return 0.5 * std::exp(-static_cast<double>(n) * eps * eps / divisor);
}

double union_bound_delta_t(int d, int t, double eps, Setting setting) {
  check_eps(eps);
  Accumulator acc;
  for (const Weight& w : essential_weights(d, t)) {
    acc.add(tail_bound_single(ensemble_for(setting, classify(w)),
                              weyl_dimension(w), eps));
  }
  return acc.sum;
}

double product_bound_delta_t(int d, int t, double eps, Setting setting) {
  return -std::expm1(-union_bound_delta_t(d, t, eps, setting));
}

double qubit_closed_form(int t, double eps, Setting setting) {
  if (t < 1) throw ArgumentError("order must be at least 1");
  check_eps(eps);
  const double c = setting_scale(setting);
  const double x = eps * eps / (c * c);
  if (x == 0.0) return 0.5 * t;  // t terms, each equal to 1/2
  // sum_{k=1..t} exp(-(2k+1) x / 2) / 2
  return std::exp(-x / 2.0) * (-std::expm1(-t * x)) /
         (2.0 * std::expm1(x));
}

double qubit_closed_form_limit(double eps, Setting setting) {
  check_eps(eps);
  const double c = setting_scale(setting);
  const double x = eps * eps / (c * c);
  if (x == 0.0) {
    throw ArgumentError("the limit diverges at eps = 0");
  }
  return std::exp(-x / 2.0) / (2.0 * std::expm1(x));
}

double exponential_integral(double x) {
  if (!(x > 0.0)) throw ArgumentError("Ei is evaluated for x > 0 only");
  constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
  if (x <= 40.0) {
    // Ei(x) = gamma + ln x + sum_{n>=1} x^n / (n * n!), all terms positive:
    // no cancellation, full double accuracy.
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n < 400; ++n) {
      term *= x / n;
      const double add = term / n;
      sum += add;
      if (add < 1e-18 * sum) break;
    }
    return kEulerGamma + std::log(x) + sum;
  }
  // Asymptotic series e^x/x * sum_k k!/x^k, truncated at the smallest term;
  // for x > 40 that term is below 1e-16 relative.
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 80; ++k) {
    const double next = term * k / x;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return std::exp(x) / x * sum;
}

double global_b_constant() {
  const double y = 2.0 * std::sqrt(2.0 / 3.0) * M_PI;
  return 10.0 * (8.0 * M_PI * M_PI * exponential_integral(y) -
                 std::exp(y) * (3.0 + 2.0 * std::sqrt(6.0) * M_PI));
}

BoundResult global_bound(int d, double eps, Setting setting) {
  if (d < 2) throw ArgumentError("rank must be at least 2");
  check_eps(eps);
  const double c = setting_scale(setting);
  BoundResult r;
  if (d == 2) {
    r.threshold = 0.0;
    r.valid = eps > 0.0;
    r.value = r.valid
                  ? std::clamp(qubit_closed_form_limit(eps, setting), 0.0, 1.0)
                  : 1.0;
    return r;
  }
  const double dd = static_cast<double>(d);
  r.threshold =
      c * std::pow(4.0 * M_PI * M_PI / (3.0 * dd * (dd - 1.0) * (dd - 1.0)),
                   0.25);
  r.valid = eps > r.threshold;
  const double c2 = c * c;
  const double term1 =
      std::exp(-dd * (dd + 1.0) * eps * eps / (4.0 * c2)) *
      (std::exp(2.0 * M_PI * std::sqrt((dd + 2.0) / 3.0)) *
           (60.0 + 100.0 * M_PI * std::sqrt(3.0 * dd + 6.0)) / (dd + 2.0) -
       global_b_constant());
  const double term2 =
      60.0 / (dd * dd) * (2.0 + std::sqrt(2.0 * M_PI) * c / eps) *
      std::exp(-3.0 * dd * (dd - 1.0) * eps * eps / (4.0 * c2) +
               2.0 * M_PI * std::sqrt(dd / 3.0));
  r.value = std::clamp(term1 + term2, 0.0, 1.0);
  return r;
}

SpectralGapTailSum spectral_gap_tail_sum(int d, double eps, Setting setting,
                                         int t_max) {
  if (t_max < 1) throw ArgumentError("t_max must be at least 1");
  if (!(eps > 0.0)) throw ArgumentError("threshold eps must be > 0");
  SpectralGapTailSum out;
  out.t_max = t_max;
  out.partial_sum = union_bound_delta_t(d, t_max, eps, setting);
  double cd = 0.0;
  for (int k = 1; k <= t_max; ++k) {
    const double alpha = static_cast<double>(rep_count_by_norm(d, k));
    cd = std::max(cd, alpha / std::pow(static_cast<double>(k), d - 2));
  }
  out.tail_estimate = std::pow(2.0, d - 1) * cd * std::tgamma(d - 1.0) /
                      std::pow(eps, 2.0 * (d - 1.0));
  out.total = out.partial_sum + out.tail_estimate;
  return out;
}

}  // namespace tdesign
