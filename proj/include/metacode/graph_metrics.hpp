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

#ifndef METACODE_GRAPH_METRICS_HPP
#define METACODE_GRAPH_METRICS_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "metacode/graph.hpp"

namespace metacode {

struct CliqueResult {
  int size = 0;
  bool exact = true;  // false: node budget ran out, size is only a lower bound
  std::uint64_t nodes = 0;
};

struct GraphMetrics {
  std::vector<int> degree_sequence;
  std::optional<int> valency;   // nullopt: irregular
  std::optional<int> diameter;  // nullopt: disconnected
  std::optional<int> girth;     // nullopt: acyclic
  std::optional<CliqueResult> clique;
  std::size_t edge_count = 0;
};

namespace detail {

using Bits = std::vector<std::uint64_t>;

inline int count(const Bits& b) {
  int c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

// Tomita-style maximum clique: vertices are greedily coloured, and a branch is
// cut once |current| + colour bound cannot beat the incumbent.
class CliqueSearch {
 public:
  CliqueSearch(const SimpleGraph& g, std::uint64_t node_budget) : g_(g), budget_(node_budget) {}

  CliqueResult run() {
    Bits all(g_.words_per_row(), 0);
    for (int v = 0; v < g_.size(); ++v) all[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    if (g_.size() > 0) expand(all, 0);
    return {best_, !exhausted_, nodes_};
  }

 private:
  void expand(const Bits& candidates, int depth) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    colour_sort(candidates, order, bound);
    Bits remaining = candidates;
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (depth + bound[idx] <= best_) return;
      const int v = order[idx];
      Bits next(remaining.size());
      auto row = g_.row(v);
      bool any = false;
      for (std::size_t w = 0; w < next.size(); ++w) {
        next[w] = remaining[w] & row[w];
        any |= next[w] != 0;
      }
      if (!any) {
        best_ = std::max(best_, depth + 1);
      } else {
        expand(next, depth + 1);
        if (exhausted_) return;
      }
      remaining[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  // Greedy sequential colouring; bound[i] is the colour count up to order[i].
  void colour_sort(const Bits& candidates, std::vector<int>& order, std::vector<int>& bound) const {
    Bits uncoloured = candidates;
    int colour = 0;
    while (count(uncoloured) > 0) {
      ++colour;
      Bits q = uncoloured;
      for (std::size_t w = 0; w < q.size(); ++w) {
        while (q[w] != 0) {
          const int v = static_cast<int>(w * 64) + std::countr_zero(q[w]);
          q[w] &= q[w] - 1;
          uncoloured[w] &= ~(std::uint64_t{1} << (v % 64));
          auto row = g_.row(v);
          for (std::size_t x = w; x < q.size(); ++x) q[x] &= ~row[x];
          order.push_back(v);
          bound.push_back(colour);
        }
      }
    }
  }

  const SimpleGraph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int best_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

inline CliqueResult clique_number(const SimpleGraph& g,
                                  std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max()) {
  return detail::CliqueSearch(g, node_budget).run();
}

struct DistanceSummary {
  std::optional<int> diameter;
  std::optional<int> girth;
};

/// One BFS per source. A non-tree edge (u, v) met during the search from s
/// closes a walk of length dist[u] + dist[v] + 1; the minimum over all
/// sources is the girth.
inline DistanceSummary bfs_summary(const SimpleGraph& g) {
  const int n = g.size();
  constexpr int kInf = std::numeric_limits<int>::max();
  int diameter = 0;
  bool connected = true;
  int girth = kInf;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) adj[static_cast<std::size_t>(u)] = g.neighbors(u);

  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    int reached = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      const int du = dist[static_cast<std::size_t>(u)];
      diameter = std::max(diameter, du);
      for (int v : adj[static_cast<std::size_t>(u)]) {
        int& dv = dist[static_cast<std::size_t>(v)];
        if (dv < 0) {
          dv = du + 1;
          parent[static_cast<std::size_t>(v)] = u;
          ++reached;
          q.push(v);
        } else if (parent[static_cast<std::size_t>(u)] != v) {
          girth = std::min(girth, du + dv + 1);
        }
      }
    }
    if (reached != n) connected = false;
  }
  DistanceSummary out;
  if (connected) out.diameter = diameter;
  if (girth != kInf) out.girth = girth;
  return out;
}

inline GraphMetrics metrics(const SimpleGraph& g, bool compute_clique,
                            std::uint64_t clique_budget = std::numeric_limits<std::uint64_t>::max()) {
  GraphMetrics out;
  out.degree_sequence = g.degrees();
  out.edge_count = g.edge_count();
  if (!out.degree_sequence.empty() &&
      std::all_of(out.degree_sequence.begin(), out.degree_sequence.end(),
                  [&](int d) { return d == out.degree_sequence.front(); })) {
    out.valency = out.degree_sequence.front();
  }
  auto summary = bfs_summary(g);
  out.diameter = summary.diameter;
  out.girth = summary.girth;
  if (compute_clique) out.clique = clique_number(g, clique_budget);
  return out;
}

}  // namespace metacode

#endif  // METACODE_GRAPH_METRICS_HPP
