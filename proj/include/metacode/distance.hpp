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

// Minimum distance and weight distribution of additive codes.
//
// The exact engine visits all 2^k F_2-combinations of the k generators. The
// lowest `table_bits` generators are tabulated once (all their combinations,
// built in Gray order); the remaining generators are stepped in Gray order so
// that moving to the next block of codewords costs a single generator XOR.
// Every codeword is then (outer XOR table entry), weighed with one popcount
// per word. Workers take disjoint contiguous ranges of the outer index space
// and start from the Gray codeword of their first index.

#ifndef METACODE_DISTANCE_HPP
#define METACODE_DISTANCE_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "metacode/additive_code.hpp"
#include "metacode/weight_profile.hpp"

namespace metacode {

inline constexpr std::size_t kDefaultExhaustiveLimit = 40;
inline constexpr const char* kExhaustiveLimitEnv = "METACODE_EXHAUSTIVE_LIMIT";

/// Exhaustive limit on the number of generators; METACODE_EXHAUSTIVE_LIMIT overrides the default.
inline std::size_t default_exhaustive_limit() {
  if (const char* env = std::getenv(kExhaustiveLimitEnv)) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(kExhaustiveLimitEnv) + " is not a number: " + env);
    }
  }
  return kDefaultExhaustiveLimit;
}

class InfeasibleEnumeration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExhaustiveOptions {
  std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();  // cap on nonzero codewords visited
  unsigned threads = 1;
  std::size_t exhaustive_limit = default_exhaustive_limit();
  int table_bits = -1;  // -1: pick automatically
};

namespace detail {

// Generators flattened to word arrays: a[i*W + w], b[i*W + w].
struct PackedGenerators {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;

  explicit PackedGenerators(const AdditiveCode& c)
      : k(c.dimension()), n(c.length()), words(words_for_bits(c.length())) {
    a.reserve(k * words);
    b.reserve(k * words);
    for (const auto& g : c.generators()) {
      a.insert(a.end(), g.plane_a().begin(), g.plane_a().end());
      b.insert(b.end(), g.plane_b().begin(), g.plane_b().end());
    }
  }
};

inline std::uint64_t gray(std::uint64_t i) { return i ^ (i >> 1); }

// Interleaved histograms so consecutive equal weights do not serialise on one counter.
constexpr std::size_t kLanes = 4;

template <std::size_t W>
struct SweepWorker {
  const PackedGenerators& gens;
  const std::vector<std::uint64_t>& table_a;
  const std::vector<std::uint64_t>& table_b;
  std::size_t table_size;
  std::size_t table_bits;
  int abort_below;  // 0: never abort
  std::vector<std::uint64_t> hist;    // kLanes interleaved histograms
  std::vector<std::uint16_t> weights;  // weights of one table pass
  bool aborted = false;

  std::size_t stride() const { return gens.n + 1; }

  void run(std::uint64_t begin, std::uint64_t end) {
    hist.assign(kLanes * stride(), 0);
    weights.assign(table_size, 0);
    std::array<std::uint64_t, W> oa{};
    std::array<std::uint64_t, W> ob{};
    const std::uint64_t start = gray(begin);
    for (std::size_t bit = 0; bit < 64 && (start >> bit) != 0; ++bit) {
      if ((start >> bit) & 1) xor_generator(table_bits + bit, oa, ob);
    }
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      weigh_table(oa, ob);
      if (abort_below > 0 && lighter_than_floor(idx == 0)) {
        aborted = true;
        return;
      }
      count_weights();
      if (idx + 1 < end) xor_generator(table_bits + static_cast<std::size_t>(std::countr_zero(idx + 1)), oa, ob);
    }
  }

  void xor_generator(std::size_t g, std::array<std::uint64_t, W>& oa, std::array<std::uint64_t, W>& ob) const {
    for (std::size_t w = 0; w < W; ++w) {
      oa[w] ^= gens.a[g * W + w];
      ob[w] ^= gens.b[g * W + w];
    }
  }

  // Branch-free so the compiler can vectorise it (vpopcntq where available).
  void weigh_table(const std::array<std::uint64_t, W>& oa, const std::array<std::uint64_t, W>& ob) {
    const std::uint64_t* ta = table_a.data();
    const std::uint64_t* tb = table_b.data();
    std::uint16_t* out = weights.data();
    if constexpr (W == 1) {
      const std::uint64_t a0 = oa[0];
      const std::uint64_t b0 = ob[0];
      for (std::size_t e = 0; e < table_size; ++e) {
        out[e] = static_cast<std::uint16_t>(std::popcount((a0 ^ ta[e]) | (b0 ^ tb[e])));
      }
    } else {
      for (std::size_t e = 0; e < table_size; ++e) {
        int wt = 0;
        for (std::size_t w = 0; w < W; ++w) wt += std::popcount((oa[w] ^ ta[e * W + w]) | (ob[w] ^ tb[e * W + w]));
        out[e] = static_cast<std::uint16_t>(wt);
      }
    }
  }

  // Entry 0 of the first outer step is the zero codeword and does not count.
  bool lighter_than_floor(bool skip_first) const {
    std::uint16_t least = std::numeric_limits<std::uint16_t>::max();
    for (std::size_t e = skip_first ? 1 : 0; e < table_size; ++e) least = std::min(least, weights[e]);
    return least < abort_below;
  }

  void count_weights() {
    const std::size_t st = stride();
    std::uint64_t* h = hist.data();
    const std::uint16_t* in = weights.data();
    std::size_t e = 0;
    for (; e + kLanes <= table_size; e += kLanes) {
      ++h[in[e]];
      ++h[st + in[e + 1]];
      ++h[2 * st + in[e + 2]];
      ++h[3 * st + in[e + 3]];
    }
    for (; e < table_size; ++e) ++h[in[e]];
  }

  void fold_into(std::vector<std::uint64_t>& counts) const {
    for (std::size_t lane = 0; lane < kLanes; ++lane) {
      for (std::size_t w = 0; w < stride(); ++w) counts[w] += hist[lane * stride() + w];
    }
  }
};

struct SweepResult {
  std::vector<std::uint64_t> counts;
  bool aborted = false;
};

template <std::size_t W>
SweepResult sweep(const PackedGenerators& gens, std::size_t table_bits, unsigned threads, int abort_below) {
  const std::size_t table_size = std::size_t{1} << table_bits;
  std::vector<std::uint64_t> ta(table_size * W, 0);
  std::vector<std::uint64_t> tb(table_size * W, 0);
  for (std::size_t t = 1; t < table_size; ++t) {
    const auto g = static_cast<std::size_t>(std::countr_zero(t));
    for (std::size_t w = 0; w < W; ++w) {
      ta[t * W + w] = ta[(t - 1) * W + w] ^ gens.a[g * W + w];
      tb[t * W + w] = tb[(t - 1) * W + w] ^ gens.b[g * W + w];
    }
  }
  const std::uint64_t outer = std::uint64_t{1} << (gens.k - table_bits);
  threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, outer)));

  std::vector<SweepWorker<W>> workers(threads, SweepWorker<W>{gens, ta, tb, table_size, table_bits, abort_below, {}, {}});
  auto range_begin = [&](unsigned r) { return outer / threads * r + std::min<std::uint64_t>(r, outer % threads); };
  if (threads == 1) {
    workers[0].run(0, outer);
  } else {
    std::vector<std::thread> pool;
    for (unsigned r = 0; r < threads; ++r) {
      pool.emplace_back([&, r] { workers[r].run(range_begin(r), range_begin(r + 1)); });
    }
    for (auto& th : pool) th.join();
  }

  SweepResult out;
  const std::size_t stride = gens.n + 1;
  out.counts.assign(stride, 0);
  for (const auto& wk : workers) {
    out.aborted |= wk.aborted;
    wk.fold_into(out.counts);
  }
  return out;
}

inline SweepResult dispatch_sweep(const PackedGenerators& gens, std::size_t table_bits, unsigned threads,
                                  int abort_below) {
  switch (gens.words) {
    case 0:
    case 1: return sweep<1>(gens, table_bits, threads, abort_below);
    case 2: return sweep<2>(gens, table_bits, threads, abort_below);
    case 3: return sweep<3>(gens, table_bits, threads, abort_below);
    case 4: return sweep<4>(gens, table_bits, threads, abort_below);
    default: throw InfeasibleEnumeration("exhaustive enumeration supports code length <= 256");
  }
}

inline void check_feasible(const AdditiveCode& c, const ExhaustiveOptions& opt) {
  const std::size_t k = c.dimension();
  if (k > opt.exhaustive_limit || k >= 64) {
    throw InfeasibleEnumeration("exhaustive limit: " + std::to_string(k) + " generators exceeds the limit of " +
                                std::to_string(std::min<std::size_t>(opt.exhaustive_limit, 63)));
  }
  const std::uint64_t nonzero = (std::uint64_t{1} << k) - 1;
  if (nonzero > opt.budget) {
    throw InfeasibleEnumeration("budget exceeded: 2^" + std::to_string(k) + " - 1 codewords exceeds the budget of " +
                                std::to_string(opt.budget));
  }
}

inline std::optional<WeightProfile> run_exhaustive(const AdditiveCode& c, const ExhaustiveOptions& opt,
                                                   int abort_below) {
  check_feasible(c, opt);
  const auto t0 = std::chrono::steady_clock::now();
  PackedGenerators gens(c);
  // An early-abort run wants short outer steps so a light codeword stops it quickly.
  const std::size_t auto_bits = abort_below > 0 ? 10 : 11;
  const std::size_t bits = std::min<std::size_t>(gens.k, opt.table_bits >= 0 ? static_cast<std::size_t>(opt.table_bits) : auto_bits);
  SweepResult r = dispatch_sweep(gens, bits, std::max(1u, opt.threads), abort_below);
  if (r.aborted) return std::nullopt;
  WeightProfile p;
  p.n = c.length();
  p.kind = ProfileKind::kExact;
  p.counts = std::move(r.counts);
  p.min_distance = WeightProfile::least_nonzero_weight(p.counts);
  p.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return p;
}

}  // namespace detail

/// Full weight distribution over all 2^k codewords. Throws InfeasibleEnumeration
/// (naming the limit) when the code is above the exhaustive limit or the budget.
inline WeightProfile min_distance_exact(const AdditiveCode& c, const ExhaustiveOptions& opt = {}) {
  return *detail::run_exhaustive(c, opt, 0);
}

/// Like min_distance_exact, but gives up (nullopt) as soon as a nonzero
/// codeword of weight < floor turns up. A returned profile is complete.
inline std::optional<WeightProfile> min_distance_at_least(const AdditiveCode& c, int floor,
                                                          const ExhaustiveOptions& opt = {}) {
  return detail::run_exhaustive(c, opt, std::max(floor, 1));
}

inline std::uint64_t weight_count_at(const AdditiveCode& c, std::size_t w, const ExhaustiveOptions& opt = {}) {
  return min_distance_exact(c, opt).count(w);
}

struct FewGeneratorScreen {
  int min_weight = std::numeric_limits<int>::max();
  std::vector<std::uint64_t> counts;  // weights of the combinations examined
};

/// Weights of every sum of 1..max_terms distinct generators. Stops early once
/// a weight below stop_below is seen (0 disables that).
inline FewGeneratorScreen few_generator_screen(const AdditiveCode& c, int max_terms = 3, int stop_below = 0) {
  detail::PackedGenerators g(c);
  FewGeneratorScreen out;
  out.counts.assign(c.length() + 1, 0);
  const std::size_t W = g.words;
  std::vector<std::uint64_t> acc_a(3 * W, 0), acc_b(3 * W, 0);
  bool stop = false;
  auto record = [&](const std::uint64_t* pa, const std::uint64_t* pb) {
    int wt = 0;
    for (std::size_t w = 0; w < W; ++w) wt += std::popcount(pa[w] | pb[w]);
    ++out.counts[static_cast<std::size_t>(wt)];
    out.min_weight = std::min(out.min_weight, wt);
    if (stop_below > 0 && wt < stop_below) stop = true;
  };
  auto combine = [&](std::size_t level, const std::uint64_t* pa, const std::uint64_t* pb, std::size_t gen) {
    for (std::size_t w = 0; w < W; ++w) {
      acc_a[level * W + w] = (pa ? pa[w] : 0) ^ g.a[gen * W + w];
      acc_b[level * W + w] = (pb ? pb[w] : 0) ^ g.b[gen * W + w];
    }
  };
  for (std::size_t i = 0; i < g.k && !stop; ++i) {
    combine(0, nullptr, nullptr, i);
    record(&acc_a[0], &acc_b[0]);
    if (max_terms < 2) continue;
    for (std::size_t j = i + 1; j < g.k && !stop; ++j) {
      combine(1, &acc_a[0], &acc_b[0], j);
      record(&acc_a[W], &acc_b[W]);
      if (max_terms < 3) continue;
      for (std::size_t l = j + 1; l < g.k && !stop; ++l) {
        combine(2, &acc_a[W], &acc_b[W], l);
        record(&acc_a[2 * W], &acc_b[2 * W]);
      }
    }
  }
  return out;
}

/// SplitMix64 finaliser; used to derive independent per-sample streams from (seed, index).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct SampleOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  int max_terms = 3;  // singles, pairs and triples are always examined
};

/// Upper bound on d: minimum weight over all 1-, 2- and 3-generator sums plus
/// `samples` uniformly random nonzero combinations. Sample i draws its
/// combination from splitmix64 applied to (seed, i), so the result does not
/// depend on the thread count.
inline WeightProfile min_weight_upper_bound(const AdditiveCode& c, const SampleOptions& opt = {}) {
  if (opt.samples < 1) throw std::invalid_argument("min_weight_upper_bound: samples must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  FewGeneratorScreen screen = few_generator_screen(c, opt.max_terms);
  detail::PackedGenerators g(c);
  const std::size_t W = g.words;
  const std::size_t k = g.k;
  const std::size_t stride = c.length() + 1;

  unsigned threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(opt.threads, opt.samples)));
  std::vector<std::vector<std::uint64_t>> hist(threads, std::vector<std::uint64_t>(stride, 0));
  auto work = [&](unsigned r, std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> ca(W), cb(W);
    auto& h = hist[r];
    for (std::uint64_t s = begin; s < end; ++s) {
      std::uint64_t state = splitmix64(opt.seed ^ splitmix64(s));
      std::fill(ca.begin(), ca.end(), 0);
      std::fill(cb.begin(), cb.end(), 0);
      bool any = false;
      for (std::size_t base = 0; base < k; base += 64) {
        state = splitmix64(state);
        std::uint64_t mask = state;
        if (k - base < 64) mask &= (std::uint64_t{1} << (k - base)) - 1;
        any |= mask != 0;
        while (mask != 0) {
          const std::size_t gi = base + static_cast<std::size_t>(std::countr_zero(mask));
          mask &= mask - 1;
          for (std::size_t w = 0; w < W; ++w) {
            ca[w] ^= g.a[gi * W + w];
            cb[w] ^= g.b[gi * W + w];
          }
        }
      }
      if (!any) continue;
      int wt = 0;
      for (std::size_t w = 0; w < W; ++w) wt += std::popcount(ca[w] | cb[w]);
      ++h[static_cast<std::size_t>(wt)];
    }
  };
  auto range_begin = [&](unsigned r) {
    return opt.samples / threads * r + std::min<std::uint64_t>(r, opt.samples % threads);
  };
  if (threads == 1) {
    work(0, 0, opt.samples);
  } else {
    std::vector<std::thread> pool;
    for (unsigned r = 0; r < threads; ++r) pool.emplace_back(work, r, range_begin(r), range_begin(r + 1));
    for (auto& th : pool) th.join();
  }

  WeightProfile p;
  p.n = c.length();
  p.kind = ProfileKind::kUpperBoundSampled;
  p.counts = screen.counts;
  for (const auto& h : hist) {
    for (std::size_t w = 0; w < stride; ++w) p.counts[w] += h[w];
  }
  p.min_distance = WeightProfile::least_nonzero_weight(p.counts);
  p.seed = opt.seed;
  p.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return p;
}

}  // namespace metacode

#endif  // METACODE_DISTANCE_HPP
