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

#include "tdesign/sampling.hpp"

#include <cmath>
#include <limits>

#include "tdesign/errors.hpp"
#include "tdesign/linalg.hpp"

namespace tdesign {

namespace {

constexpr std::uint64_t kModelTag = 0x6d6f64656cULL;  // stream domain "model"

// Dimension above which the iterative norm path kicks in when requested.
constexpr int kIterativeThreshold = 256;

}  // namespace

double setting_scale(Setting s) {
  return s == Setting::Plain ? 1.0 : std::sqrt(2.0);
}

EnsembleKind ensemble_for(Setting setting, WeightClass cls) {
  if (setting == Setting::Symmetric) {
    return cls == WeightClass::Real ? EnsembleKind::GOE : EnsembleKind::GUE;
  }
  return cls == WeightClass::Real ? EnsembleKind::RealGinibre
                                  : EnsembleKind::ComplexGinibre;
}

Eigen::MatrixXcd haar_unitary(int d, RngStream& rng) {
  if (d < 1) throw ArgumentError("dimension must be positive");
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the phases of the R diagonal makes the factorization unique and
  // the distribution of q exactly Haar.
  for (int j = 0; j < d; ++j) {
    const std::complex<double> rjj = r(j, j);
    const double a = std::abs(rjj);
    const std::complex<double> phase = a > 0.0 ? rjj / a : 1.0;
    q.col(j) *= phase;
  }
  return q;
}

GateSet sample_gate_set(int d, int n_generators, bool symmetric,
                        RngStream& rng, std::uint64_t seed) {
  if (n_generators < 1) throw ArgumentError("need at least one generator");
  GateSet s;
  s.n_generators = n_generators;
  s.symmetric = symmetric;
  s.seed = seed;
  s.gates.reserve(symmetric ? 2 * n_generators : n_generators);
  for (int i = 0; i < n_generators; ++i) {
    s.gates.push_back(haar_unitary(d, rng));
  }
  if (symmetric) {
    for (int i = 0; i < n_generators; ++i) {
      s.gates.push_back(s.gates[i].adjoint());
    }
  }
  return s;
}

Eigen::MatrixXcd sample_ensemble(EnsembleKind kind, int n, RngStream& rng) {
  if (n < 1) throw ArgumentError("matrix size must be positive");
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd h(n, n);
  switch (kind) {
    case EnsembleKind::GOE:
      for (int i = 0; i < n; ++i) {
        h(i, i) = rng.normal() * std::sqrt(2.0) * inv_sqrt_n;
        for (int j = i + 1; j < n; ++j) {
          const double v = rng.normal() * inv_sqrt_n;
          h(i, j) = v;
          h(j, i) = v;
        }
      }
      break;
    case EnsembleKind::GUE:
      for (int i = 0; i < n; ++i) {
        h(i, i) = rng.normal() * inv_sqrt_n;
        for (int j = i + 1; j < n; ++j) {
          const std::complex<double> z = rng.complex_normal() * inv_sqrt_n;
          h(i, j) = z;
          h(j, i) = std::conj(z);
        }
      }
      break;
    case EnsembleKind::RealGinibre:
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) h(i, j) = rng.normal() * inv_sqrt_n;
      }
      break;
    case EnsembleKind::ComplexGinibre:
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          h(i, j) = rng.complex_normal() * inv_sqrt_n;
        }
      }
      break;
  }
  return h;
}

double sample_ensemble_norm(EnsembleKind kind, int n, RngStream& rng,
                            NormMethod method) {
  const Eigen::MatrixXcd h = sample_ensemble(kind, n, rng);
  const bool hermitian =
      kind == EnsembleKind::GOE || kind == EnsembleKind::GUE;
  const bool real_entries =
      kind == EnsembleKind::GOE || kind == EnsembleKind::RealGinibre;
  const bool iterative =
      method == NormMethod::Iterative && n > kIterativeThreshold;
  if (hermitian) {
    if (real_entries) {
      const Eigen::MatrixXd hr = h.real();
      return iterative ? symmetric_norm_estimate(hr, rng)
                       : symmetric_operator_norm(hr);
    }
    return iterative ? hermitian_norm_estimate(h, rng)
                     : hermitian_operator_norm(h);
  }
  if (real_entries) {
    const Eigen::MatrixXd hr = h.real();
    return iterative ? singular_norm_estimate(hr, rng) : operator_norm(hr);
  }
  return iterative ? singular_norm_estimate(h, rng) : operator_norm(h);
}

BlockNormSample sample_model_block_norms(int d, int t, Setting setting,
                                         std::uint64_t root_seed,
                                         std::uint64_t sample_index,
                                         NormMethod method) {
  BlockNormSample out;
  out.weights = essential_weights(d, t);
  out.norms.reserve(out.weights.size());
  out.delta_t = 0.0;
  for (const Weight& w : out.weights) {
    const std::int64_t n = weyl_dimension(w);
    if (n > std::numeric_limits<int>::max()) {
      throw ResourceError("block size exceeds addressable range");
    }
    RngStream rng =
        RngStream::keyed(root_seed, {kModelTag, w.hash(), sample_index});
    const EnsembleKind kind = ensemble_for(setting, classify(w));
    const double norm =
        sample_ensemble_norm(kind, static_cast<int>(n), rng, method);
    out.norms.push_back(norm);
    out.delta_t = std::max(out.delta_t, norm);
  }
  return out;
}

}  // namespace tdesign
