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

#include "tdesign/weights.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "tdesign/errors.hpp"
#include "tdesign/rng.hpp"

namespace tdesign {

namespace mp = boost::multiprecision;

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw ArgumentError("weight needs at least two entries");
  }
  long long sum = 0;
  bool nonzero = false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0 && entries_[i - 1] < entries_[i]) {
      throw ArgumentError("weight entries must be non-increasing");
    }
    sum += entries_[i];
    nonzero = nonzero || entries_[i] != 0;
  }
  if (sum != 0) throw ArgumentError("weight entries must sum to zero");
  if (!nonzero) throw ArgumentError("weight must have a nonzero entry");
}

int Weight::positive_sum() const {
  int s = 0;
  for (int e : entries_)
    if (e > 0) s += e;
  return s;
}

int Weight::one_norm() const {
  int s = 0;
  for (int e : entries_) s += std::abs(e);
  return s;
}

Weight Weight::conjugate() const {
  std::vector<int> out(entries_.rbegin(), entries_.rend());
  for (int& e : out) e = -e;
  return Weight(std::move(out));
}

std::uint64_t Weight::hash() const {
  std::uint64_t h = mix_u64(0x77656967687473ULL ^ entries_.size());
  for (int e : entries_) {
    h = mix_u64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(e)));
  }
  return h;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  s += ")";
  return s;
}

std::string Weight::label() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += "_";
    s += std::to_string(entries_[i]);
  }
  return s;
}

WeightClass classify(const Weight& w) {
  return w == w.conjugate() ? WeightClass::Real : WeightClass::Complex;
}

namespace {

// Partitions of k into at most max_len parts, each part represented as a
// non-increasing vector of positive integers.
void gen_partitions(int k, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(k, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(k - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions_up_to_len(int k, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  gen_partitions(k, k, max_len, cur, out);
  return out;
}

std::int64_t to_i64(const mp::cpp_int& v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max()) {
    throw ResourceError(std::string(what) + " exceeds the 64-bit range");
  }
  return v.convert_to<std::int64_t>();
}

}  // namespace

std::vector<Weight> enumerate_weights(int d, int t) {
  if (d < 2) throw ArgumentError("rank must be at least 2");
  if (t < 1) throw ArgumentError("order must be at least 1");
  std::vector<Weight> result;
  for (int k = 1; k <= t; ++k) {
    // A weight with positive sum k is a pair of partitions of k: positive
    // entries, zeros, then the negated reverse of the second partition.
    auto parts = partitions_up_to_len(k, d - 1);
    std::vector<std::vector<int>> bucket;
    for (const auto& mu : parts) {
      for (const auto& nu : parts) {
        if (static_cast<int>(mu.size() + nu.size()) > d) continue;
        std::vector<int> v(mu);
        v.resize(d - nu.size(), 0);
        for (auto it = nu.rbegin(); it != nu.rend(); ++it) v.push_back(-*it);
        bucket.push_back(std::move(v));
      }
    }
    std::sort(bucket.begin(), bucket.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return a > b;
              });
    for (auto& v : bucket) result.emplace_back(std::move(v));
  }
  return result;
}

std::vector<Weight> essential_weights(int d, int t) {
  std::vector<Weight> result;
  for (const Weight& w : enumerate_weights(d, t)) {
    if (classify(w) == WeightClass::Real ||
        w.entries() > w.conjugate().entries()) {
      result.push_back(w);
    }
  }
  return result;
}

std::int64_t weyl_dimension(const Weight& w) {
  const auto& l = w.entries();
  const int d = w.rank();
  mp::cpp_int num = 1;
  mp::cpp_int den = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      num *= l[i] - l[j] + j - i;
      den *= j - i;
    }
  }
  // num is divisible by den: the quotient is the integer dimension.
  return to_i64(num / den, "representation dimension");
}

PartitionCounts partition_counts(int k, int n) {
  if (k < 1) throw ArgumentError("partition size must be positive");
  if (n < 1 || n > k) throw ArgumentError("part count must be in [1, k]");
  // rows[j][i] = partitions of i into exactly j parts.
  std::vector<std::vector<mp::cpp_int>> rows(
      k + 1, std::vector<mp::cpp_int>(k + 1, 0));
  rows[0][0] = 1;
  for (int j = 1; j <= k; ++j) {
    for (int i = j; i <= k; ++i) {
      rows[j][i] = rows[j - 1][i - 1] + (i - j >= 0 ? rows[j][i - j] : 0);
    }
  }
  mp::cpp_int at_most = 0;
  for (int j = 1; j <= n; ++j) at_most += rows[j][k];
  mp::cpp_int all = 0;
  for (int j = 1; j <= k; ++j) all += rows[j][k];
  return PartitionCounts{to_i64(rows[n][k], "partition count"),
                         to_i64(at_most, "partition count"),
                         to_i64(all, "partition count")};
}

std::int64_t rep_count_by_norm(int d, int k) {
  if (d < 2) throw ArgumentError("rank must be at least 2");
  if (k < 1) throw ArgumentError("half norm must be positive");
  auto p_exact = [k](int n) {
    return n > k ? 0 : partition_counts(k, n).exact;
  };
  auto p_at_most = [k](int n) {
    return partition_counts(k, std::min(n, k)).at_most;
  };
  mp::cpp_int total = 0;
  if (d >= 2 * k) {
    mp::cpp_int p = partition_counts(k, k).all;
    total = p * p;
  } else if (d >= k + 1) {
    for (int n = 1; n <= k; ++n) {
      total += mp::cpp_int(p_exact(n)) * p_at_most(d - n);
    }
  } else {
    for (int n = 1; n <= d - 1; ++n) {
      total += mp::cpp_int(p_exact(n)) * p_at_most(d - n);
    }
  }
  return to_i64(total, "weight count");
}

std::int64_t dimension_lower_bound(int d, int k) {
  if (d < 2) throw ArgumentError("rank must be at least 2");
  if (k < 1) throw ArgumentError("positive sum must be positive");
  // A rank-d weight with positive sum k has top-minus-bottom entry gap
  // h >= max(2, 4k/d), and the smallest dimension at gap h is attained on
  // the multiple h*(1,0,...,0) of the first fundamental weight, whose
  // dimension f is a convex polynomial in k with f(d/2) = C(d+1,2) and
  // f' >= 2(d-1) past that point.  Expanding f around k = d/2 gives the
  // bound below; the flat C(d+1,2) branch covers 2k <= d.
  const std::int64_t dd = d;
  const std::int64_t kk = k;
  std::int64_t bound = dd * (dd + 1) / 2;
  if (2 * kk > dd) bound += (dd - 1) * (2 * kk - dd);
  return std::max<std::int64_t>(2 * kk, bound);
}

}  // namespace tdesign
