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

#ifndef METACODE_ADDITIVE_CODE_HPP
#define METACODE_ADDITIVE_CODE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metacode/gf4.hpp"
#include "metacode/graph.hpp"
#include "metacode/metacirculant.hpp"

namespace metacode {

/// F_2-span of a list of generators over GF(4)^n. Graph codes have n generators.
class AdditiveCode {
 public:
  AdditiveCode() = default;
  AdditiveCode(std::size_t n, std::vector<GF4Vector> generators) : n_(n), gens_(std::move(generators)) {
    for (const auto& g : gens_) {
      if (g.size() != n_) throw std::invalid_argument("AdditiveCode: generator length mismatch");
    }
  }

  std::size_t length() const { return n_; }
  std::size_t dimension() const { return gens_.size(); }  // over F_2, assuming independence
  const std::vector<GF4Vector>& generators() const { return gens_; }
  const GF4Vector& generator(std::size_t i) const { return gens_[i]; }

  bool operator==(const AdditiveCode&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<GF4Vector> gens_;
};

/// Rows of Gamma + w*I.
inline AdditiveCode graph_code(const SimpleGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<GF4Vector> gens;
  gens.reserve(n);
  for (int u = 0; u < g.size(); ++u) {
    auto row = g.row(u);
    std::vector<std::uint64_t> a(row.size(), 0);
    a[static_cast<std::size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
    gens.emplace_back(n, std::move(a), std::vector<std::uint64_t>(row.begin(), row.end()));
  }
  return AdditiveCode(n, std::move(gens));
}

/// Rank over F_2 of the generators viewed as 2n-bit vectors.
inline std::size_t f2_rank(const AdditiveCode& c) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& g : c.generators()) {
    std::vector<std::uint64_t> r(g.plane_a().begin(), g.plane_a().end());
    r.insert(r.end(), g.plane_b().begin(), g.plane_b().end());
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t words = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [&](const auto& r) { return (r[w] & bit) != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && (rows[i][w] & bit) != 0) {
        for (std::size_t x = 0; x < words; ++x) rows[i][x] ^= rows[rank][x];
      }
    }
    ++rank;
  }
  return rank;
}

struct SelfDualityCertificate {
  bool self_dual = false;
  std::size_t rank = 0;
  std::vector<std::pair<std::size_t, std::size_t>> non_orthogonal;  // 0-based generator pairs, i <= j
};

/// Self-dual iff all generator pairs are trace-orthogonal and there are n independent generators.
inline SelfDualityCertificate is_self_dual(const AdditiveCode& c) {
  SelfDualityCertificate cert;
  const auto& gens = c.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      if (trace_hermitian_ip(gens[i], gens[j])) cert.non_orthogonal.emplace_back(i, j);
    }
  }
  cert.rank = f2_rank(c);
  cert.self_dual = cert.non_orthogonal.empty() && cert.rank == c.length() && gens.size() == c.length();
  return cert;
}

enum class TypeClass { kTypeI, kTypeII };

inline const char* to_string(TypeClass t) { return t == TypeClass::kTypeII ? "Type II" : "Type I"; }

/// A graph code is Type II iff every vertex has odd degree.
inline TypeClass classify_by_degrees(const SimpleGraph& g) {
  for (int u = 0; u < g.size(); ++u) {
    if (g.degree(u) % 2 == 0) return TypeClass::kTypeI;
  }
  return TypeClass::kTypeII;
}

/// Delta_S = |S_0| + 1 (m odd) or |S_0| + |S_{m/2}| + 1 (m even).
inline int delta_s(const MetacirculantSpec& spec) {
  int delta = static_cast<int>(spec.s_sets.at(0).size()) + 1;
  if (spec.m % 2 == 0) delta += static_cast<int>(spec.s_sets.at(static_cast<std::size_t>(spec.half())).size());
  return delta;
}

/// Type of the bordered metacirculant's graph code: Type II iff Delta_S and m*l are both odd.
inline TypeClass classify_by_theorem(const MetacirculantSpec& spec) {
  return (delta_s(spec) % 2 == 1 && spec.order() % 2 == 1) ? TypeClass::kTypeII : TypeClass::kTypeI;
}

}  // namespace metacode

#endif  // METACODE_ADDITIVE_CODE_HPP
