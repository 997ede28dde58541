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

#ifndef METACODE_GRAPH_HPP
#define METACODE_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace metacode {

/// Where a vertex came from: block i, offset j of a metacirculant, or the border vertex.
struct VertexLabel {
  static constexpr int kBorder = -1;
  int block = kBorder;
  int offset = 0;

  bool is_border() const { return block == kBorder; }
  bool operator==(const VertexLabel&) const = default;
};

/// 0-based undirected edge, first < second.
using Edge = std::pair<int, int>;

/// Undirected simple graph stored as a symmetric bit matrix with zero diagonal.
/// Vertices are 0-based internally; every external format uses 1-based indices.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Throws std::invalid_argument on a self-loop or an out-of-range endpoint.
  /// Repeated edges are merged.
  SimpleGraph(int n, std::span<const Edge> edges, std::vector<VertexLabel> labels = {})
      : n_(n), words_(words_per_row(n)), bits_(static_cast<std::size_t>(n) * words_per_row(n), 0),
        labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("SimpleGraph: label count does not match vertex count");
    }
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw std::invalid_argument("SimpleGraph: edge (" + std::to_string(u + 1) + ", " +
                                    std::to_string(v + 1) + ") out of range");
      }
      if (u == v) throw std::invalid_argument("SimpleGraph: self-loop at " + std::to_string(u + 1));
      set_bit(u, v);
      set_bit(v, u);
    }
  }

  int size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(int u, int v) const {
    return ((row(u)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1) != 0;
  }

  /// Row u of the adjacency matrix as little-endian words.
  std::span<const std::uint64_t> row(int u) const {
    return {bits_.data() + static_cast<std::size_t>(u) * words_, words_};
  }

  int degree(int u) const {
    int d = 0;
    for (auto w : row(u)) d += std::popcount(w);
    return d;
  }

  std::vector<int> degrees() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int u = 0; u < n_; ++u) out[static_cast<std::size_t>(u)] = degree(u);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (int u = 0; u < n_; ++u) total += static_cast<std::size_t>(degree(u));
    return total / 2;
  }

  std::vector<int> neighbors(int u) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
      if (adjacent(u, v)) out.push_back(v);
    }
    return out;
  }

  const std::vector<VertexLabel>& labels() const { return labels_; }
  std::optional<VertexLabel> label(int u) const {
    if (labels_.empty()) return std::nullopt;
    return labels_[static_cast<std::size_t>(u)];
  }

  bool is_symmetric_loopless() const {
    for (int u = 0; u < n_; ++u) {
      if (adjacent(u, u)) return false;
      for (int v = u + 1; v < n_; ++v) {
        if (adjacent(u, v) != adjacent(v, u)) return false;
      }
    }
    return true;
  }

  /// Adjacency equality; labels are ignored.
  bool same_adjacency(const SimpleGraph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  static std::size_t words_per_row(int n) { return n <= 0 ? 0 : (static_cast<std::size_t>(n) + 63) / 64; }

 private:
  void set_bit(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1}
                                                                                       << (v % 64);
  }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<VertexLabel> labels_;
};

/// Sorted 0-based edge list with u < v. Add 1 to each endpoint for the external numbering.
inline std::vector<Edge> edge_list(const SimpleGraph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

/// Adds a universal vertex v_inf at index 0; original vertices shift by one.
inline SimpleGraph border(const SimpleGraph& g) {
  const int n = g.size();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) edges.emplace_back(0, v + 1);
  for (auto [u, v] : edge_list(g)) edges.emplace_back(u + 1, v + 1);
  std::vector<VertexLabel> labels;
  if (!g.labels().empty()) {
    labels.push_back(VertexLabel{});
    labels.insert(labels.end(), g.labels().begin(), g.labels().end());
  }
  return SimpleGraph(n + 1, edges, std::move(labels));
}

/// Graph whose vertex p(v) is adjacent to p(u) whenever v is adjacent to u in g.
inline SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(g.size())) {
    throw std::invalid_argument("relabel: permutation size does not match vertex count");
  }
  std::vector<int> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.size() || seen[static_cast<std::size_t>(p)]++) {
      throw std::invalid_argument("relabel: not a permutation");
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : edge_list(g)) {
    int a = perm[static_cast<std::size_t>(u)];
    int b = perm[static_cast<std::size_t>(v)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<VertexLabel> labels;
  if (!g.labels().empty()) {
    labels.resize(g.labels().size());
    for (std::size_t u = 0; u < perm.size(); ++u) {
      labels[static_cast<std::size_t>(perm[u])] = g.labels()[u];
    }
  }
  return SimpleGraph(g.size(), edges, std::move(labels));
}

}  // namespace metacode

#endif  // METACODE_GRAPH_HPP
