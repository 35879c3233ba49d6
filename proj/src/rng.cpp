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

#include "tdesign/rng.hpp"

#include <cmath>

namespace tdesign {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t mix_u64(std::uint64_t state) {
  // SplitMix64 finalizer (Steele, Lea, Flood).
  std::uint64_t z = state + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RngStream RngStream::keyed(std::uint64_t root_seed,
                           std::initializer_list<std::uint64_t> key) {
  std::uint64_t h = mix_u64(root_seed);
  for (std::uint64_t w : key) h = mix_u64(h ^ w);
  RngStream s;
  // Expand the mixed key into the four xoshiro256** state words. The
  // all-zero state cannot occur because mix_u64 is a bijection chain over
  // distinct increments.
  std::uint64_t z = h;
  for (int i = 0; i < 4; ++i) {
    z = mix_u64(z);
    s.s_[i] = z;
  }
  return s;
}

std::uint64_t RngStream::next_u64() {
  // xoshiro256** (Blackman, Vigna).
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller on (0,1] x [0,1); u1 > 0 keeps the logarithm finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  cached_normal_ = r * std::sin(a);
  has_cached_normal_ = true;
  return r * std::cos(a);
}

std::complex<double> RngStream::complex_normal() {
  const double inv_sqrt2 = 0x1.6a09e667f3bcdp-1;  // 1/sqrt(2)
  const double re = normal();
  const double im = normal();
  return {re * inv_sqrt2, im * inv_sqrt2};
}

}  // namespace tdesign
