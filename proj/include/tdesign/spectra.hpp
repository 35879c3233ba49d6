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

#ifndef TDESIGN_SPECTRA_HPP_
#define TDESIGN_SPECTRA_HPP_

namespace tdesign {

// Limiting spectral laws of moment blocks of a random gate set with
// cardinality card, in the large-dimension limit:
//   KestenSigned:    eigenvalue density on [-delta_opt, delta_opt]
//   KestenSingular:  singular value density on [0, delta_opt]
//   KestenRescaled:  singular values scaled by sqrt(card)
//   QuarterCircle:   the card -> infinity limit of KestenRescaled
enum class DensityKind {
  KestenSigned,
  KestenSingular,
  KestenRescaled,
  QuarterCircle,
};

struct SpectralDensity {
  DensityKind kind;
  int cardinality;
  double lower;
  double upper;
};

// Smallest possible limiting block norm of a gate set with card elements:
// 2 * sqrt(card - 1) / card.
double delta_opt(int card);

SpectralDensity make_density(DensityKind kind, int card);

// Density value at x; zero outside [lower, upper].
double density_at(const SpectralDensity& density, double x);

// m-th moment of the signed density: the normalized count of closed
// length-m walks on the card-regular infinite tree, divided by card^m.
// Odd moments vanish.
double kesten_moment(int card, int m);

// m-th moment of the squared-variable law (the law of x^2 under
// KestenSingular).
double kesten_square_moment(int card, int m);

}  // namespace tdesign

#endif  // TDESIGN_SPECTRA_HPP_
