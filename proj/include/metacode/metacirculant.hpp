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

// Metacirculant graphs G(m, l, alpha, S_0, ..., S_{floor(m/2)}).
//
// The vertex set is Z_m x Z_l. For 0 <= k <= floor(m/2), vertex (i, j) is
// adjacent to (i + k, h) iff (h - j) lies in alpha^i * S_k. The k = 0 case
// gives the edges inside each block. A spec is valid when alpha is a unit and
//   (1) S_0 = -S_0,  (2) 0 not in S_0,  (3) alpha^m S_k = S_k for k >= 1,
//   (4) alpha^(m/2) S_{m/2} = -S_{m/2} when m is even.

#ifndef METACODE_METACIRCULANT_HPP
#define METACODE_METACIRCULANT_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metacode/graph.hpp"

namespace metacode {

using ResidueSet = std::vector<int>;  // sorted, unique, entries in [0, l)

struct MetacirculantSpec {
  int m = 1;
  int ell = 1;
  int alpha = 1;
  std::vector<ResidueSet> s_sets;  // S_0 .. S_{floor(m/2)}

  int order() const { return m * ell; }
  int half() const { return m / 2; }

  auto operator<=>(const MetacirculantSpec&) const = default;
};

inline int mod(long long x, int l) {
  long long r = x % l;
  return static_cast<int>(r < 0 ? r + l : r);
}

inline int pow_mod(int base, int exp, int l) {
  long long result = 1 % l;
  long long b = mod(base, l);
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result = result * b % l;
    b = b * b % l;
  }
  return static_cast<int>(result);
}

/// {factor * x mod l : x in s}, sorted.
inline ResidueSet scale(const ResidueSet& s, int factor, int l) {
  std::set<int> out;
  for (int x : s) out.insert(mod(static_cast<long long>(factor) * x, l));
  return {out.begin(), out.end()};
}

enum class Condition {
  kShape,            // wrong number of sets or residues outside Z_l
  kUnitAlpha,        // gcd(alpha, l) = 1
  kS0Symmetric,      // S_0 = -S_0
  kZeroNotInS0,      // 0 not in S_0
  kAlphaPowMFixes,   // alpha^m S_k = S_k
  kHalfAntiFixed,    // alpha^(m/2) S_{m/2} = -S_{m/2}
};

inline const char* condition_name(Condition c) {
  switch (c) {
    case Condition::kShape: return "shape";
    case Condition::kUnitAlpha: return "alpha is a unit";
    case Condition::kS0Symmetric: return "S0 = -S0";
    case Condition::kZeroNotInS0: return "0 not in S0";
    case Condition::kAlphaPowMFixes: return "alpha^m S_k = S_k";
    case Condition::kHalfAntiFixed: return "alpha^(m/2) S_{m/2} = -S_{m/2}";
  }
  return "?";
}

struct Violation {
  Condition condition;
  int k = 0;  // set index the violation refers to
  std::string detail;
};

struct ValidityReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Condition c) const {
    return std::any_of(violations.begin(), violations.end(),
                       [c](const Violation& v) { return v.condition == c; });
  }
  std::string describe() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += condition_name(v.condition);
      if (!v.detail.empty()) out += " (" + v.detail + ")";
    }
    return out;
  }
};

inline ValidityReport validate_spec(const MetacirculantSpec& spec) {
  ValidityReport report;
  auto flag = [&](Condition c, int k, std::string detail) {
    report.violations.push_back({c, k, std::move(detail)});
  };
  if (spec.m < 1 || spec.ell < 1) {
    flag(Condition::kShape, 0, "m and l must be positive");
    return report;
  }
  const int l = spec.ell;
  if (spec.s_sets.size() != static_cast<std::size_t>(spec.half() + 1)) {
    flag(Condition::kShape, 0,
         "expected " + std::to_string(spec.half() + 1) + " sets, got " + std::to_string(spec.s_sets.size()));
    return report;
  }
  for (std::size_t k = 0; k < spec.s_sets.size(); ++k) {
    const auto& s = spec.s_sets[k];
    bool sorted_unique = std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
    bool in_range = std::all_of(s.begin(), s.end(), [l](int x) { return x >= 0 && x < l; });
    if (!sorted_unique || !in_range) {
      flag(Condition::kShape, static_cast<int>(k), "S" + std::to_string(k) + " must be sorted distinct residues mod l");
    }
  }
  if (report.has(Condition::kShape)) return report;

  if (std::gcd(mod(spec.alpha, l), l) != 1) {
    flag(Condition::kUnitAlpha, 0, "gcd(" + std::to_string(spec.alpha) + ", " + std::to_string(l) + ") != 1");
  }
  const ResidueSet& s0 = spec.s_sets[0];
  if (scale(s0, -1, l) != s0) flag(Condition::kS0Symmetric, 0, "");
  if (std::binary_search(s0.begin(), s0.end(), 0)) flag(Condition::kZeroNotInS0, 0, "");

  const int alpha_m = pow_mod(spec.alpha, spec.m, l);
  for (int k = 1; k <= spec.half(); ++k) {
    const ResidueSet& sk = spec.s_sets[static_cast<std::size_t>(k)];
    if (scale(sk, alpha_m, l) != sk) flag(Condition::kAlphaPowMFixes, k, "k = " + std::to_string(k));
  }
  if (spec.m % 2 == 0 && spec.half() >= 1) {
    const ResidueSet& sh = spec.s_sets[static_cast<std::size_t>(spec.half())];
    if (scale(sh, pow_mod(spec.alpha, spec.half(), l), l) != scale(sh, -1, l)) {
      flag(Condition::kHalfAntiFixed, spec.half(), "k = " + std::to_string(spec.half()));
    }
  }
  return report;
}

class InvalidSpec : public std::invalid_argument {
 public:
  explicit InvalidSpec(ValidityReport report)
      : std::invalid_argument("invalid metacirculant spec: " + report.describe()), report_(std::move(report)) {}
  const ValidityReport& report() const { return report_; }

 private:
  ValidityReport report_;
};

/// How (block i, offset j) maps to a vertex index.
///   kBlockMajor:  i*l + j  (blocks are consecutive runs, as in the hexacode figure)
///   kOffsetMajor: j*m + i  (blocks interleaved, as in the printed edge tables)
enum class Labeling { kBlockMajor, kOffsetMajor };

inline int vertex_index(const MetacirculantSpec& spec, Labeling labeling, int block, int offset) {
  return labeling == Labeling::kBlockMajor ? block * spec.ell + offset : offset * spec.m + block;
}

inline SimpleGraph build_metacirculant(const MetacirculantSpec& spec, Labeling labeling = Labeling::kBlockMajor) {
  ValidityReport report = validate_spec(spec);
  if (!report.ok()) throw InvalidSpec(std::move(report));

  const int m = spec.m;
  const int l = spec.ell;
  const int n = spec.order();
  auto index = [&](int i, int j) { return vertex_index(spec, labeling, i, j); };

  // Arcs from k = 0 and k = m/2 must be self-paired; collect them to check.
  std::set<std::pair<int, int>> paired_arcs;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    const int alpha_i = pow_mod(spec.alpha, i, l);
    for (int k = 0; k <= spec.half(); ++k) {
      const bool self_paired = k == 0 || 2 * k == m;
      for (int s : spec.s_sets[static_cast<std::size_t>(k)]) {
        const int shift = mod(static_cast<long long>(alpha_i) * s, l);
        for (int j = 0; j < l; ++j) {
          int u = index(i, j);
          int v = index((i + k) % m, (j + shift) % l);
          if (self_paired) paired_arcs.emplace(u, v);
          edges.emplace_back(std::min(u, v), std::max(u, v));
        }
      }
    }
  }
  for (auto [u, v] : paired_arcs) {
    if (!paired_arcs.contains({v, u})) {
      throw std::logic_error("build_metacirculant: adjacency relation is not symmetric");
    }
  }

  std::vector<VertexLabel> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < l; ++j) labels[static_cast<std::size_t>(index(i, j))] = VertexLabel{i, j};
  }
  return SimpleGraph(n, edges, std::move(labels));
}

/// Common vertex degree from the set sizes. With `bordered` the edge to v_inf is included.
inline int expected_valency(const MetacirculantSpec& spec, bool bordered) {
  auto size = [&](int k) { return static_cast<int>(spec.s_sets[static_cast<std::size_t>(k)].size()); };
  int deg = size(0);
  for (int k = 1; k <= spec.half(); ++k) {
    deg += (spec.m % 2 == 0 && k == spec.half()) ? size(k) : 2 * size(k);
  }
  return bordered ? deg + 1 : deg;
}

}  // namespace metacode

#endif  // METACODE_METACIRCULANT_HPP
