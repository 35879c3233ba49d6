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

#ifndef TDESIGN_RNG_HPP_
#define TDESIGN_RNG_HPP_

#include <complex>
#include <cstdint>
#include <initializer_list>

namespace tdesign {

// One SplitMix64 mixing step; also used to build stable stream keys.
std::uint64_t mix_u64(std::uint64_t state);

// Deterministic pseudo-random stream (xoshiro256** seeded via SplitMix64).
//
// A stream is a pure function of (root seed, key words). Sampling code keys
// streams by domain tag, weight hash and sample index, so the values drawn
// for one sample never depend on scheduling order or worker count, and runs
// are reproducible byte for byte. Distribution transforms are implemented
// here rather than taken from <random> because the standard does not pin
// their output sequences across library implementations.
class RngStream {
 public:
  static RngStream keyed(std::uint64_t root_seed,
                         std::initializer_list<std::uint64_t> key);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double normal();

  // Complex normal with E|z|^2 = 1: real and imaginary parts are
  // independent N(0, 1/2).
  std::complex<double> complex_normal();

 private:
  RngStream() = default;

  std::uint64_t s_[4] = {0, 0, 0, 0};
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace tdesign

#endif  // TDESIGN_RNG_HPP_
