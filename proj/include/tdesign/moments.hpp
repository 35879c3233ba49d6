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

#ifndef TDESIGN_MOMENTS_HPP_
#define TDESIGN_MOMENTS_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "tdesign/gt_irrep.hpp"
#include "tdesign/sampling.hpp"
#include "tdesign/weights.hpp"

namespace tdesign {

// One invariant block of the moment operator of a gate set: the average of
// the irreducible representation over the set. For symmetric sets this is
// the Hermitian part of the average over the generators, which equals the
// average over generators and inverses.
struct MomentBlock {
  Weight weight;
  Eigen::MatrixXcd matrix;
  bool hermitian = false;
  double norm = 0.0;
};

MomentBlock moment_block(const GateSet& set, const AlgebraRep& rep);

// Largest block norm over the essential weights at order t. Conjugate
// blocks share their norm, so one block per orbit suffices.
struct DesignDelta {
  std::vector<Weight> weights;
  std::vector<double> norms;
  double delta_t = 0.0;
};

DesignDelta design_delta(const GateSet& set, int t,
                         std::int64_t dim_cap = AlgebraRep::kDefaultDimCap);

enum class ScalingMode { None, SqrtS, TwoOverDeltaOpt };

struct ExperimentConfig {
  int d = 0;
  int t = 0;
  int sample_size = 0;
  int set_size = 0;  // number of generators
  bool is_symmetric = true;
  std::uint64_t seed = 0;
  ScalingMode scaling = ScalingMode::None;

  // Effective gate-set cardinality: generators plus inverses when
  // symmetric.
  int cardinality() const { return is_symmetric ? 2 * set_size : set_size; }
  double scale_factor() const;
};

// Norm table of an experiment: one row per sampled gate set, one column per
// essential weight, values scaled per the config's mode.
struct SampleTable {
  ExperimentConfig config;
  std::vector<Weight> weights;
  std::vector<std::vector<double>> rows;
};

using RowCallback =
    std::function<void(std::size_t index, const std::vector<double>& row)>;

// Samples sample_size gate sets and computes every essential block norm.
//
// Gate sets are drawn from streams keyed by (seed, sample index), so the
// table is a pure function of the config at any worker count. workers = 0
// reads TDESIGN_THREADS (default: hardware concurrency). on_row, when set,
// receives rows in ascending index order as they complete, which lets
// callers persist partial results during long runs.
SampleTable run_empirical_experiment(const ExperimentConfig& config,
                                     int workers = 0,
                                     const RowCallback& on_row = {});

// Worker count resolution used by run_empirical_experiment.
int resolve_worker_count(int requested);

}  // namespace tdesign

#endif  // TDESIGN_MOMENTS_HPP_
