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

#ifndef TDESIGN_WEIGHTS_HPP_
#define TDESIGN_WEIGHTS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace tdesign {

// Highest weight of a polynomial-free irreducible representation of U(d):
// a non-increasing integer vector with zero sum and at least one nonzero
// entry. These weights label the invariant blocks of the order-t moment
// operator of a gate set, excluding the trivial block.
class Weight {
 public:
  explicit Weight(std::vector<int> entries);

  int rank() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }

  // Sum of the positive entries; equals half the one-norm.
  int positive_sum() const;
  int one_norm() const;

  // Dual weight: negated entries in reversed order. Labels the conjugate
  // representation.
  Weight conjugate() const;

  // Stable 64-bit hash; used to key per-weight random streams.
  std::uint64_t hash() const;

  // "(2,0,-1,-1)"
  std::string to_string() const;
  // "2_0_-1_-1": comma-free form used for table column names.
  std::string label() const;

  friend bool operator==(const Weight& a, const Weight& b) = default;

 private:
  std::vector<int> entries_;
};

enum class WeightClass { Real, Complex };

// Real when the weight equals its conjugate (the representation is
// self-dual), complex otherwise.
WeightClass classify(const Weight& w);

// All weights of rank d with positive sum at most t, ordered by one-norm
// and then lexicographically descending. Conjugate weights appear in pairs;
// self-conjugate ones once.
std::vector<Weight> enumerate_weights(int d, int t);

// One weight per conjugation orbit, in enumeration order: self-conjugate
// weights plus the lexicographically larger member of each pair. Norm
// spectra of moment blocks coincide on an orbit, so these are the blocks
// that need to be computed.
std::vector<Weight> essential_weights(int d, int t);

// Dimension of the irreducible representation with highest weight w,
// computed by exact integer arithmetic. Throws ResourceError if the result
// does not fit in 64 bits.
std::int64_t weyl_dimension(const Weight& w);

struct PartitionCounts {
  std::int64_t exact;    // partitions of k into exactly n parts
  std::int64_t at_most;  // partitions of k into at most n parts
  std::int64_t all;      // all partitions of k
};

// Exact partition counts via the recurrence
// p_n(k) = p_{n-1}(k-1) + p_n(k-n). Throws ResourceError on 64-bit overflow.
PartitionCounts partition_counts(int k, int n);

// Number of enumerated weights of rank d with one-norm 2k, computed from
// partition counts without enumeration.
std::int64_t rep_count_by_norm(int d, int k);

// Lower bound on weyl_dimension over all rank-d weights with positive
// sum k: max(2k, C(d+1,2)) when 2k <= d, and
// max(2k, C(d+1,2) + (d-1)(2k-d)) otherwise.
std::int64_t dimension_lower_bound(int d, int k);

}  // namespace tdesign

#endif  // TDESIGN_WEIGHTS_HPP_
