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

#include "tdesign/spectra.hpp"

#include <cmath>

#include "tdesign/errors.hpp"

namespace tdesign {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return r;
}

void check_card(int card) {
  if (card < 2) throw ArgumentError("cardinality must be at least 2");
}

}  // namespace

double delta_opt(int card) {
  check_card(card);
  return 2.0 * std::sqrt(static_cast<double>(card - 1)) /
         static_cast<double>(card);
}

SpectralDensity make_density(DensityKind kind, int card) {
  check_card(card);
  const double s = static_cast<double>(card);
  switch (kind) {
    case DensityKind::KestenSigned:
      return {kind, card, -delta_opt(card), delta_opt(card)};
    case DensityKind::KestenSingular:
      return {kind, card, 0.0, delta_opt(card)};
    case DensityKind::KestenRescaled:
      return {kind, card, 0.0, 2.0 * std::sqrt((s - 1.0) / s)};
    case DensityKind::QuarterCircle:
      return {kind, card, 0.0, 2.0};
  }
  throw ArgumentError("unknown density kind");
}

double density_at(const SpectralDensity& density, double x) {
  if (x < density.lower || x > density.upper) return 0.0;
  const double s = static_cast<double>(density.cardinality);
  switch (density.kind) {
    case DensityKind::KestenSigned: {
      const double edge = delta_opt(density.cardinality);
      const double den = 1.0 - x * x;
      // At cardinality 2 the support edge |x| = 1 is an (integrable)
      // arcsine singularity; report the honest limit.
      if (den <= 0.0) return INFINITY;
      return s * std::sqrt(std::max(0.0, edge * edge - x * x)) /
             (2.0 * M_PI * den);
    }
    case DensityKind::KestenSingular: {
      const double edge = delta_opt(density.cardinality);
      const double den = 1.0 - x * x;
      if (den <= 0.0) return INFINITY;
      return s * std::sqrt(std::max(0.0, edge * edge - x * x)) /
             (M_PI * den);
    }
    case DensityKind::KestenRescaled: {
      const double edge2 = 4.0 * (s - 1.0) / s;
      const double den = 1.0 - x * x / s;
      if (den <= 0.0) return INFINITY;
      return std::sqrt(std::max(0.0, edge2 - x * x)) / (M_PI * den);
    }
    case DensityKind::QuarterCircle:
      return std::sqrt(4.0 - x * x) / M_PI;
  }
  throw ArgumentError("unknown density kind");
}

double kesten_moment(int card, int m) {
  check_card(card);
  if (m < 0) throw ArgumentError("moment order must be non-negative");
  if (m == 0) return 1.0;
  if (m % 2 == 1) return 0.0;
  const double s = static_cast<double>(card);
  const int half = m / 2;
  double sum = 0.0;
  for (int j = 1; j <= half; ++j) {
    sum += binomial(m - j, half) *
           (static_cast<double>(j) / static_cast<double>(m - j)) *
           std::pow(s, j) * std::pow(s - 1.0, half - j);
  }
  return sum / std::pow(s, m);
}

double kesten_square_moment(int card, int m) {
  check_card(card);
  if (m < 0) throw ArgumentError("moment order must be non-negative");
  if (m == 0) return 1.0;
  const double s = static_cast<double>(card);
  double sum = 0.0;
  for (int j = 1; j <= m; ++j) {
    sum += binomial(2 * m - j, m) *
           (static_cast<double>(j) / static_cast<double>(2 * m - j)) *
           std::pow(s, j) * std::pow(s - 1.0, m - j);
  }
  return sum / std::pow(s, 2 * m);
}

}  // namespace tdesign
