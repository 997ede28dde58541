// Copyright 2026 The metacode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef METACODE_WEIGHT_PROFILE_HPP
#define METACODE_WEIGHT_PROFILE_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace metacode {

enum class ProfileKind {
  kExact,              // every codeword counted
  kUpperBoundSampled,  // counts of the codewords examined; min_distance is an upper bound on d
  kPartial,
};

inline const char* to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::kExact: return "exact";
    case ProfileKind::kUpperBoundSampled: return "upper_bound_sampled";
    case ProfileKind::kPartial: return "partial";
  }
  return "?";
}

inline ProfileKind profile_kind_from_string(const std::string& s) {
  if (s == "exact") return ProfileKind::kExact;
  if (s == "upper_bound_sampled") return ProfileKind::kUpperBoundSampled;
  if (s == "partial") return ProfileKind::kPartial;
  throw std::invalid_argument("unknown profile kind: " + s);
}

struct WeightProfile {
  std::size_t n = 0;
  ProfileKind kind = ProfileKind::kExact;
  std::vector<std::uint64_t> counts;  // counts[w] = A_w, size n + 1
  std::optional<int> min_distance;
  double runtime_seconds = 0.0;
  std::optional<std::uint64_t> seed;

  std::uint64_t count(std::size_t w) const { return w < counts.size() ? counts[w] : 0; }
  std::uint64_t total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

  /// Smallest w > 0 with a nonzero count.
  static std::optional<int> least_nonzero_weight(const std::vector<std::uint64_t>& counts) {
    for (std::size_t w = 1; w < counts.size(); ++w) {
      if (counts[w] != 0) return static_cast<int>(w);
    }
    return std::nullopt;
  }

  /// Same counts, kind and distance; runtime and seed are bookkeeping.
  bool same_distribution(const WeightProfile& o) const {
    return n == o.n && kind == o.kind && counts == o.counts && min_distance == o.min_distance;
  }
};

struct InequivalenceWitness {
  bool length_differs = false;
  std::size_t weight = 0;
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;

  std::string describe() const {
    if (length_differs) return "lengths differ";
    return "A_" + std::to_string(weight) + ": " + std::to_string(count_a) + " vs " + std::to_string(count_b);
  }
};

/// Weight enumerators are equivalence invariants, so any differing A_w proves
/// the codes inequivalent. Equal enumerators prove nothing (nullopt).
inline std::optional<InequivalenceWitness> inequivalence_witness(const WeightProfile& a, const WeightProfile& b) {
  if (a.kind != ProfileKind::kExact || b.kind != ProfileKind::kExact) {
    throw std::invalid_argument("inequivalence_witness: both profiles must be exact");
  }
  if (a.n != b.n) return InequivalenceWitness{true, 0, 0, 0};
  for (std::size_t w = 0; w <= a.n; ++w) {
    if (a.count(w) != b.count(w)) return InequivalenceWitness{false, w, a.count(w), b.count(w)};
  }
  return std::nullopt;
}

}  // namespace metacode

#endif  // METACODE_WEIGHT_PROFILE_HPP
