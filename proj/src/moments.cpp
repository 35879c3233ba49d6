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

#include "tdesign/moments.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "tdesign/errors.hpp"
#include "tdesign/linalg.hpp"
#include "tdesign/spectra.hpp"

namespace tdesign {

namespace {

constexpr std::uint64_t kGateTag = 0x6761746573ULL;  // stream domain "gates"

}  // namespace

MomentBlock moment_block(const GateSet& set, const AlgebraRep& rep) {
  if (set.gates.empty()) throw ArgumentError("gate set is empty");
  const int n = set.n_generators > 0 ? set.n_generators
                                     : static_cast<int>(set.gates.size());
  MomentBlock block{rep.weight(), Eigen::MatrixXcd(), set.symmetric, 0.0};
  const Eigen::Index m = rep.dim();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(m, m);
  // Averaging the generators only: for symmetric sets the Hermitian part
  // below equals the average over generators and inverses.
  for (int i = 0; i < n; ++i) {
    sum += evaluate_irrep(rep, set.gates[i]);
  }
  sum /= static_cast<double>(n);
  if (set.symmetric) {
    block.matrix = 0.5 * (sum + sum.adjoint().eval());
    block.norm = hermitian_operator_norm(block.matrix);
  } else {
    block.matrix = std::move(sum);
    block.norm = operator_norm(block.matrix);
  }
  return block;
}

DesignDelta design_delta(const GateSet& set, int t, std::int64_t dim_cap) {
  if (set.gates.empty()) throw ArgumentError("gate set is empty");
  const int d = static_cast<int>(set.gates.front().rows());
  DesignDelta out;
  out.weights = essential_weights(d, t);
  out.norms.reserve(out.weights.size());
  for (const Weight& w : out.weights) {
    AlgebraRep rep = AlgebraRep::build(w, dim_cap);
    const double norm = moment_block(set, rep).norm;
    out.norms.push_back(norm);
    out.delta_t = std::max(out.delta_t, norm);
  }
  return out;
}

double ExperimentConfig::scale_factor() const {
  switch (scaling) {
    case ScalingMode::None:
      return 1.0;
    case ScalingMode::SqrtS:
      return std::sqrt(static_cast<double>(cardinality()));
    case ScalingMode::TwoOverDeltaOpt:
      return 2.0 / delta_opt(cardinality());
  }
  throw ArgumentError("unknown scaling mode");
}

int resolve_worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TDESIGN_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

SampleTable run_empirical_experiment(const ExperimentConfig& config,
                                     int workers, const RowCallback& on_row) {
  if (config.d < 2) throw ArgumentError("d must be at least 2");
  if (config.t < 1) throw ArgumentError("t must be at least 1");
  if (config.sample_size < 1) throw ArgumentError("sample_size must be >= 1");
  if (config.set_size < 1) throw ArgumentError("set_size must be >= 1");
  if (!config.is_symmetric && config.set_size < 2 &&
      config.scaling == ScalingMode::TwoOverDeltaOpt) {
    throw ArgumentError("cardinality must be at least 2 for this scaling");
  }

  SampleTable table;
  table.config = config;
  table.weights = essential_weights(config.d, config.t);

  std::vector<AlgebraRep> reps;
  reps.reserve(table.weights.size());
  for (const Weight& w : table.weights) {
    reps.push_back(AlgebraRep::build(w));
  }
  const double factor = config.scale_factor();
  const std::size_t n_samples =
      static_cast<std::size_t>(config.sample_size);
  table.rows.assign(n_samples, {});

  const int n_workers =
      std::min<int>(resolve_worker_count(workers),
                    static_cast<int>(n_samples));

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::vector<bool> done(n_samples, false);
  std::size_t flushed = 0;
  std::exception_ptr failure;

  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n_samples) return;
      try {
        RngStream rng = RngStream::keyed(config.seed, {kGateTag, i});
        const GateSet set = sample_gate_set(config.d, config.set_size,
                                            config.is_symmetric, rng,
                                            config.seed);
        std::vector<double> row(table.weights.size());
        for (std::size_t k = 0; k < reps.size(); ++k) {
          row[k] = factor * moment_block(set, reps[k]).norm;
        }
        std::lock_guard<std::mutex> lock(mu);
        table.rows[i] = std::move(row);
        done[i] = true;
        if (on_row) {
          // Flush the completed prefix in index order so the emitted
          // stream is identical at any worker count.
          while (flushed < n_samples && done[flushed]) {
            on_row(flushed, table.rows[flushed]);
            ++flushed;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(n_samples);
        return;
      }
    }
  };

  if (n_workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

}  // namespace tdesign
