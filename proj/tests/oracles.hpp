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

// Slow, direct reference implementations used to cross-check the library.
// Nothing here touches the bit-packed representation: field elements are the
// integers 0..3 (0, 1, w, w^2) with explicit addition and multiplication
// tables, vectors are std::vector<int>, graphs are dense bool matrices.

#ifndef METACODE_TESTS_ORACLES_HPP
#define METACODE_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "metacode/metacirculant.hpp"

namespace oracle {

// 0 -> 0, 1 -> 1, 2 -> w, 3 -> w^2 = w + 1.
inline constexpr int kAdd[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
inline constexpr int kMul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};

inline int add(int x, int y) { return kAdd[x][y]; }
inline int mul(int x, int y) { return kMul[x][y]; }
inline int square(int x) { return mul(x, x); }

inline int symbol_value(char c) {
  switch (c) {
    case '0': return 0;
    case '1': return 1;
    case 'w': return 2;
    case 'W': return 3;
  }
  throw std::invalid_argument(std::string("bad symbol ") + c);
}

using Vec = std::vector<int>;

inline Vec parse(const std::string& s) {
  Vec v;
  for (char c : s) {
    if (c != ' ') v.push_back(symbol_value(c));
  }
  return v;
}

inline Vec add(const Vec& u, const Vec& v) {
  Vec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = add(u[i], v[i]);
  return r;
}

inline int weight(const Vec& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
}

inline int distance(const Vec& u, const Vec& v) {
  int d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d;
}

/// Sum over j of u_j v_j^2 + u_j^2 v_j, evaluated in the field. Always 0 or 1.
inline int trace_form(const Vec& u, const Vec& v) {
  int acc = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    acc = add(acc, add(mul(u[j], square(v[j])), mul(square(u[j]), v[j])));
  }
  return acc;
}

using Matrix = std::vector<std::vector<bool>>;

/// Rows of A + w I.
inline std::vector<Vec> graph_generators(const Matrix& adj) {
  const std::size_t n = adj.size();
  std::vector<Vec> rows(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = i == j ? 2 : (adj[i][j] ? 1 : 0);
  }
  return rows;
}

/// Weight distribution of the F2-span, built codeword by codeword.
inline std::vector<std::uint64_t> weight_distribution(const std::vector<Vec>& gens, std::size_t n) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << gens.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Vec c(n, 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((mask >> i) & 1U) c = add(c, gens[i]);
    }
    ++counts[static_cast<std::size_t>(weight(c))];
  }
  return counts;
}

inline int min_distance(const std::vector<Vec>& gens, std::size_t n) {
  auto counts = weight_distribution(gens, n);
  for (std::size_t w = 1; w <= n; ++w) {
    if (counts[w] != 0) return static_cast<int>(w);
  }
  return 0;
}

inline int modp(long long x, int l) { return static_cast<int>(((x % l) + l) % l); }

inline int power(int a, int e, int l) {
  int r = 1 % l;
  for (int i = 0; i < e; ++i) r = modp(static_cast<long long>(r) * a, l);
  return r;
}

inline bool contains(const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

inline std::set<int> scaled(const std::vector<int>& s, int f, int l) {
  std::set<int> out;
  for (int x : s) out.insert(modp(static_cast<long long>(x) * f, l));
  return out;
}

/// The validity conditions, checked directly from their statements.
inline bool valid(const metacode::MetacirculantSpec& s) {
  const int l = s.ell;
  const int m = s.m;
  if (std::gcd(modp(s.alpha, l), l) != 1) return false;
  const auto& s0 = s.s_sets[0];
  if (scaled(s0, -1, l) != std::set<int>(s0.begin(), s0.end())) return false;
  if (contains(s0, 0)) return false;
  for (int k = 1; k <= m / 2; ++k) {
    const auto& sk = s.s_sets[static_cast<std::size_t>(k)];
    if (scaled(sk, power(s.alpha, m, l), l) != std::set<int>(sk.begin(), sk.end())) return false;
  }
  if (m % 2 == 0) {
    const auto& sh = s.s_sets[static_cast<std::size_t>(m / 2)];
    if (scaled(sh, power(s.alpha, m / 2, l), l) != scaled(sh, -1, l)) return false;
  }
  return true;
}

/// Adjacency by testing every ordered vertex pair against the rule
/// (i, j) ~ (i + k, h) iff h - j in alpha^i S_k, 0 <= k <= m/2, in either
/// direction. Vertex (i, j) has index i*l + j.
inline Matrix metacirculant(const metacode::MetacirculantSpec& s) {
  const int m = s.m;
  const int l = s.ell;
  const int n = m * l;
  Matrix adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  auto rule = [&](int i, int j, int i2, int h) {
    const int k = modp(i2 - i, m);
    if (k > m / 2) return false;
    return scaled(s.s_sets[static_cast<std::size_t>(k)], power(s.alpha, i, l), l).count(modp(h - j, l)) > 0;
  };
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const int i = u / l, j = u % l, i2 = v / l, h = v % l;
      if (rule(i, j, i2, h) || rule(i2, h, i, j)) adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    }
  }
  return adj;
}

inline Matrix bordered(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix b(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t i = 1; i <= n; ++i) {
    b[0][i] = b[i][0] = true;
    for (std::size_t j = 1; j <= n; ++j) b[i][j] = a[i - 1][j - 1];
  }
  return b;
}

constexpr int kInf = 1 << 28;

inline std::vector<std::vector<int>> all_pairs(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// -1 when disconnected.
inline int diameter(const Matrix& a) {
  int best = 0;
  for (const auto& row : all_pairs(a)) {
    for (int x : row) {
      if (x >= kInf) return -1;
      best = std::max(best, x);
    }
  }
  return best;
}

/// Shortest cycle through edge (u, v) is 1 + dist(u, v) with that edge removed. -1 when acyclic.
inline int girth(Matrix a) {
  const std::size_t n = a.size();
  int best = kInf;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!a[u][v]) continue;
      a[u][v] = a[v][u] = false;
      std::vector<int> dist(n, -1);
      std::queue<std::size_t> q;
      dist[u] = 0;
      q.push(u);
      while (!q.empty()) {
        auto x = q.front();
        q.pop();
        for (std::size_t y = 0; y < n; ++y) {
          if (a[x][y] && dist[y] < 0) {
            dist[y] = dist[x] + 1;
            q.push(y);
          }
        }
      }
      if (dist[v] >= 0) best = std::min(best, dist[v] + 1);
      a[u][v] = a[v][u] = true;
    }
  }
  return best >= kInf ? -1 : best;
}

/// Largest clique by trying every vertex subset. n <= 20.
inline int clique(const Matrix& a) {
  const std::size_t n = a.size();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if (((mask >> j) & 1U) && !a[i][j]) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

/// Random spec with m*l <= max_order that passes `valid`, by rejection.
template <typename Rng>
metacode::MetacirculantSpec random_valid_spec(Rng& rng, int max_order, int min_order = 1) {
  std::uniform_int_distribution<int> order_dist(min_order, max_order);
  while (true) {
    const int order = order_dist(rng);
    std::vector<int> ms;
    for (int m = 1; m <= order; ++m) {
      if (order % m == 0) ms.push_back(m);
    }
    const int m = ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];
    const int l = order / m;
    std::vector<int> units;
    for (int a = 0; a < l; ++a) {
      if (std::gcd(a, l) == 1) units.push_back(a);
    }
    if (units.empty()) units.push_back(0);
    metacode::MetacirculantSpec s;
    s.m = m;
    s.ell = l;
    s.alpha = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
    // Random subsets rarely satisfy the closure conditions; symmetrizing S0
    // and closing the others under the required maps keeps rejection cheap.
    std::bernoulli_distribution coin(0.4);
    for (int k = 0; k <= m / 2; ++k) {
      std::set<int> set;
      for (int x = 0; x < l; ++x) {
        if (coin(rng)) set.insert(x);
      }
      if (k == 0) {
        set.erase(0);
        std::set<int> sym = set;
        for (int x : set) sym.insert(modp(-x, l));
        set = sym;
      } else {
        const bool half = m % 2 == 0 && k == m / 2;
        const int f = half ? modp(-static_cast<long long>(power(s.alpha, m / 2, l)), l) : power(s.alpha, m, l);
        bool grew = true;
        while (grew) {
          grew = false;
          for (int x : std::set<int>(set)) grew |= set.insert(modp(static_cast<long long>(x) * f, l)).second;
        }
      }
      s.s_sets.emplace_back(set.begin(), set.end());
    }
    if (valid(s)) return s;
  }
}

}  // namespace oracle

#endif  // METACODE_TESTS_ORACLES_HPP
