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

#ifndef TDESIGN_SAMPLING_HPP_
#define TDESIGN_SAMPLING_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "tdesign/rng.hpp"
#include "tdesign/weights.hpp"

namespace tdesign {

// Whether a gate set is closed under inversion. Symmetric sets average
// gates and their inverses, which makes every moment block Hermitian and
// doubles the variance scale of the limiting ensembles.
enum class Setting { Plain, Symmetric };

// Variance scale c of a setting: 1 for plain, sqrt(2) for symmetric.
double setting_scale(Setting s);

// The Gaussian ensembles that moment blocks converge to. Entry conventions
// (all with E tr H*H / N close to 1):
//   GOE:            real symmetric, H_kl = g_kl / sqrt(N), diagonal doubled
//                   variance (g_kk ~ N(0,2)).
//   GUE:            complex Hermitian, off-diagonal real/imag parts
//                   N(0, 1/(2N)), diagonal N(0, 1/N).
//   RealGinibre:    all entries independent N(0, 1/N).
//   ComplexGinibre: real/imag parts independent N(0, 1/(2N)).
enum class EnsembleKind { GOE, GUE, RealGinibre, ComplexGinibre };

// Limiting ensemble of a moment block: symmetric sets give GOE/GUE, plain
// sets give real/complex Ginibre; real weights give the real-entry kinds.
EnsembleKind ensemble_for(Setting setting, WeightClass cls);

// Haar-distributed unitary via QR of a complex Gaussian matrix with the
// R-diagonal phase correction.
Eigen::MatrixXcd haar_unitary(int d, RngStream& rng);

// A finite gate set: n_generators independent Haar unitaries, followed by
// their inverses when symmetric. The effective cardinality is
// gates.size().
struct GateSet {
  std::vector<Eigen::MatrixXcd> gates;
  int n_generators = 0;
  bool symmetric = false;
  std::uint64_t seed = 0;  // provenance only
};

GateSet sample_gate_set(int d, int n_generators, bool symmetric,
                        RngStream& rng, std::uint64_t seed = 0);

// One draw from a Gaussian ensemble at linear size n. Entries are exactly
// real for the real kinds.
Eigen::MatrixXcd sample_ensemble(EnsembleKind kind, int n, RngStream& rng);

enum class NormMethod { Exact, Iterative };

// Norms of one joint draw of the limiting model at order t: one ensemble
// sample per essential weight, sized by the representation dimension.
//
// Streams are keyed by (root seed, weight hash, sample index), so the draw
// for a given weight does not depend on t: raising t extends a sample
// rather than reshuffling it, and delta_t is non-decreasing in t for fixed
// (root seed, sample index).
struct BlockNormSample {
  std::vector<Weight> weights;
  std::vector<double> norms;
  double delta_t = 0.0;  // max over weights
};

BlockNormSample sample_model_block_norms(int d, int t, Setting setting,
                                         std::uint64_t root_seed,
                                         std::uint64_t sample_index,
                                         NormMethod method =
                                             NormMethod::Exact);

// Norm of a single ensemble draw at linear size n; the building block of
// sample_model_block_norms, exposed for scalar studies of one weight.
double sample_ensemble_norm(EnsembleKind kind, int n, RngStream& rng,
                            NormMethod method = NormMethod::Exact);

}  // namespace tdesign

#endif  // TDESIGN_SAMPLING_HPP_
