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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "metacode/additive_code.hpp"
#include "metacode/distance.hpp"
#include "metacode/fixtures.hpp"
#include "metacode/io.hpp"
#include "metacode/weight_profile.hpp"
#include "oracles.hpp"

namespace metacode {
namespace {

const MetacirculantSpec kHexacode{2, 3, 1, {{1, 2}, {0}}};

AdditiveCode bordered_code(const MetacirculantSpec& s) { return graph_code(border(build_metacirculant(s))); }

std::vector<oracle::Vec> to_naive(const AdditiveCode& c) {
  std::vector<oracle::Vec> out;
  for (const auto& g : c.generators()) out.push_back(oracle::parse(g.to_symbols()));
  return out;
}

SimpleGraph random_graph(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return SimpleGraph(n, e);
}

// ---- graph_code / self-duality / classification --------------------------

TEST(GraphCode, BorderedHexacodeIsThePrintedMatrix) {
  auto c = bordered_code(kHexacode);
  EXPECT_EQ(format_generator_matrix(c, '\0'), kBorderedHexacodeMatrix);
  EXPECT_EQ(c, parse_generator_matrix(kBorderedHexacodeMatrix));
}

TEST(GraphCode, SingleVertex) {
  auto c = graph_code(SimpleGraph(1, std::vector<Edge>{}));
  ASSERT_EQ(c.dimension(), 1u);
  EXPECT_EQ(c.generator(0).to_symbols(), "w");
}

TEST(GraphCode, HexacodeGeneratorsHaveWeightFour) {
  // Figure edges: each vertex has three neighbours plus the diagonal w.
  std::vector<int> deg(6, 0);
  for (auto [u, v] : hexacode_figure_edges()) ++deg[static_cast<std::size_t>(u - 1)], ++deg[static_cast<std::size_t>(v - 1)];
  auto c = graph_code(build_metacirculant(kHexacode));
  ASSERT_EQ(c.dimension(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(static_cast<int>(weight(c.generator(i))), deg[i] + 1);
    EXPECT_EQ(weight(c.generator(i)), 4u);
    EXPECT_EQ(c.generator(i)[i], GF4Element::omega());
  }
}

TEST(SelfDual, PrintedMatrixAndGraphCodes) {
  EXPECT_TRUE(is_self_dual(parse_generator_matrix(kBorderedHexacodeMatrix)).self_dual);
  for (const auto& f : fixtures()) {
    auto cert = is_self_dual(bordered_code(f.spec));
    EXPECT_TRUE(cert.self_dual) << f.name;
    EXPECT_EQ(cert.rank, static_cast<std::size_t>(f.spec.order() + 1));
  }
}

TEST(SelfDual, AllOnesReplacementOnThreeVertexGraphs) {
  // Every graph on three vertices, each generator in turn replaced by (1,1,1);
  // the certificate must list exactly the pairs the scalar oracle flags.
  bool saw_violation = false;
  const std::vector<Edge> all = {{0, 1}, {0, 2}, {1, 2}};
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<Edge> e;
    for (int b = 0; b < 3; ++b) {
      if ((mask >> b) & 1) e.push_back(all[static_cast<std::size_t>(b)]);
    }
    auto base = graph_code(SimpleGraph(3, e));
    for (std::size_t r = 0; r < 3; ++r) {
      auto gens = base.generators();
      gens[r] = GF4Vector::from_symbols("111");
      AdditiveCode c(3, gens);
      std::vector<std::pair<std::size_t, std::size_t>> expected;
      auto naive = to_naive(c);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) {
          if (oracle::trace_form(naive[i], naive[j]) == 1) expected.emplace_back(i, j);
        }
      }
      auto cert = is_self_dual(c);
      EXPECT_EQ(cert.non_orthogonal, expected);
      if (!expected.empty()) {
        EXPECT_FALSE(cert.self_dual);
        saw_violation = true;
      }
    }
  }
  EXPECT_TRUE(saw_violation);
}

TEST(SelfDual, DependentGeneratorsAreNotSelfDual) {
  auto gens = graph_code(SimpleGraph(3, std::vector<Edge>{})).generators();
  gens[2] = gens[1];
  auto cert = is_self_dual(AdditiveCode(3, gens));
  EXPECT_FALSE(cert.self_dual);
  EXPECT_EQ(cert.rank, 2u);
}

TEST(Classify, Examples) {
  const auto& g93 = fixture("G93");
  const auto& g80 = fixture("G80_1");
  EXPECT_EQ(classify_by_degrees(border(build_metacirculant(g93.spec))), TypeClass::kTypeII);
  EXPECT_EQ(classify_by_degrees(border(build_metacirculant(g80.spec))), TypeClass::kTypeI);
  EXPECT_EQ(classify_by_degrees(border(SimpleGraph(1, std::vector<Edge>{}))), TypeClass::kTypeII);
  EXPECT_EQ(delta_s(g93.spec), 9);
  EXPECT_EQ(classify_by_theorem(g93.spec), TypeClass::kTypeII);
  EXPECT_EQ(delta_s(g80.spec), 12);
  EXPECT_EQ(classify_by_theorem(g80.spec), TypeClass::kTypeI);
  EXPECT_EQ(classify_by_theorem({2, 2, 1, {{1}, {}}}), TypeClass::kTypeI);
  EXPECT_EQ(classify_by_theorem({2, 2, 1, {{}, {0, 1}}}), TypeClass::kTypeI);
}

TEST(AddcodeProperty, GraphCodesOfRandomSpecsAreSelfDualAndClassifyConsistently) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    auto spec = oracle::random_valid_spec(rng, 23);
    auto g = border(build_metacirculant(spec));
    ASSERT_TRUE(is_self_dual(graph_code(g)).self_dual) << format_spec_inline(spec);
    ASSERT_EQ(classify_by_degrees(g), classify_by_theorem(spec)) << format_spec_inline(spec);
  }
}

TEST(AddcodeProperty, TypeIIProfilesHaveOnlyEvenWeights) {
  std::mt19937_64 rng(22);
  int type2 = 0;
  for (int t = 0; t < 400 && type2 < 25; ++t) {
    auto spec = oracle::random_valid_spec(rng, 15);
    if (classify_by_theorem(spec) != TypeClass::kTypeII) continue;
    ++type2;
    auto p = min_distance_exact(bordered_code(spec));
    for (std::size_t w = 1; w < p.counts.size(); w += 2) ASSERT_EQ(p.counts[w], 0u) << format_spec_inline(spec);
  }
  EXPECT_GE(type2, 5);
}

// ---- exact engine -------------------------------------------------------

TEST(ExactDistance, Hexacode) {
  auto p = min_distance_exact(graph_code(build_metacirculant(kHexacode)));
  EXPECT_EQ(p.kind, ProfileKind::kExact);
  EXPECT_EQ(p.min_distance, 4);
  EXPECT_EQ(p.count(0), 1u);
  EXPECT_EQ(p.total(), 64u);
  EXPECT_EQ(p.n, 6u);
}

TEST(ExactDistance, BorderedHexacode) {
  auto p = min_distance_exact(bordered_code(kHexacode));
  EXPECT_EQ(p.min_distance, 3);
  EXPECT_EQ(p.total(), 128u);
}

TEST(ExactDistance, BorderedG28) {
  ExhaustiveOptions opt;
  auto p = min_distance_exact(bordered_code(fixture("G28").spec), opt);
  EXPECT_EQ(p.min_distance, 10);
  EXPECT_EQ(p.total(), std::uint64_t{1} << 29);
  EXPECT_EQ(p.count(0), 1u);
}

TEST(ExactDistance, WeightZeroCountIsOne) {
  EXPECT_EQ(weight_count_at(bordered_code(kHexacode), 0), 1u);
  EXPECT_EQ(weight_count_at(graph_code(SimpleGraph(1, std::vector<Edge>{})), 0), 1u);
}

TEST(ExactDistance, MatchesScalarOracleOnRandomGraphs) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    auto c = graph_code(random_graph(rng, n));
    auto p = min_distance_exact(c);
    ASSERT_EQ(p.counts, oracle::weight_distribution(to_naive(c), c.length()));
    ASSERT_EQ(p.min_distance.value_or(0), oracle::min_distance(to_naive(c), c.length()));
  }
}

TEST(ExactDistance, NonGraphGeneratorsMatchScalarOracle) {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> sym(0, 3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 70)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    std::vector<GF4Vector> gens;
    for (std::size_t i = 0; i < k; ++i) {
      std::string s;
      for (std::size_t j = 0; j < n; ++j) s.push_back("01wW"[sym(rng)]);
      gens.push_back(GF4Vector::from_symbols(s));
    }
    AdditiveCode c(n, gens);
    ASSERT_EQ(min_distance_exact(c).counts, oracle::weight_distribution(to_naive(c), n));
  }
}

TEST(ExactDistance, ThreadCountAndTableSizeDoNotChangeTheProfile) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 10; ++t) {
    auto c = graph_code(random_graph(rng, 18));
    ExhaustiveOptions base;
    base.threads = 1;
    const auto ref = min_distance_exact(c, base).counts;
    for (unsigned threads : {2u, 3u, 8u}) {
      for (int bits : {0, 1, 5, 18}) {
        ExhaustiveOptions opt;
        opt.threads = threads;
        opt.table_bits = bits;
        ASSERT_EQ(min_distance_exact(c, opt).counts, ref) << threads << " threads, " << bits << " bits";
      }
    }
  }
}

TEST(ExactDistance, BudgetExceededNamesTheLimit) {
  ExhaustiveOptions opt;
  opt.budget = 100;
  try {
    min_distance_exact(bordered_code(kHexacode), opt);
    FAIL();
  } catch (const InfeasibleEnumeration& e) {
    EXPECT_NE(std::string(e.what()).find("budget exceeded"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("100"), std::string::npos);
  }
  opt.budget = 127;
  EXPECT_NO_THROW(min_distance_exact(bordered_code(kHexacode), opt));
}

TEST(ExactDistance, ExhaustiveLimitNamesTheLimit) {
  ExhaustiveOptions opt;
  opt.exhaustive_limit = 6;
  try {
    min_distance_exact(bordered_code(kHexacode), opt);
    FAIL();
  } catch (const InfeasibleEnumeration& e) {
    EXPECT_NE(std::string(e.what()).find("exhaustive limit"), std::string::npos);
  }
  EXPECT_THROW(min_distance_exact(bordered_code(fixture("G80_1").spec)), InfeasibleEnumeration);
}

TEST(ExactDistance, EnvironmentOverridesDefaultLimit) {
  ASSERT_EQ(setenv(kExhaustiveLimitEnv, "5", 1), 0);
  EXPECT_EQ(default_exhaustive_limit(), 5u);
  EXPECT_THROW(min_distance_exact(bordered_code(kHexacode)), InfeasibleEnumeration);
  ASSERT_EQ(setenv(kExhaustiveLimitEnv, "many", 1), 0);
  EXPECT_THROW(default_exhaustive_limit(), std::invalid_argument);
  ASSERT_EQ(unsetenv(kExhaustiveLimitEnv), 0);
  EXPECT_EQ(default_exhaustive_limit(), kDefaultExhaustiveLimit);
}

TEST(ExactDistance, AtLeastAbortsOnlyBelowTheFloor) {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 40; ++t) {
    auto c = graph_code(random_graph(rng, 16));
    auto p = min_distance_exact(c);
    const int d = *p.min_distance;
    auto same = min_distance_at_least(c, d);
    ASSERT_TRUE(same.has_value());
    ASSERT_EQ(same->counts, p.counts);
    ASSERT_FALSE(min_distance_at_least(c, d + 1).has_value());
  }
}

// ---- screen and sampled engine ------------------------------------------

TEST(FewGeneratorScreen, CountsEveryShortCombination) {
  std::mt19937_64 rng(27);
  auto c = graph_code(random_graph(rng, 9));
  auto s = few_generator_screen(c, 3);
  std::uint64_t total = 0;
  for (auto x : s.counts) total += x;
  EXPECT_EQ(total, 9u + 36u + 84u);
  auto naive = to_naive(c);
  std::vector<std::uint64_t> expected(10, 0);
  for (std::size_t i = 0; i < 9; ++i) {
    ++expected[static_cast<std::size_t>(oracle::weight(naive[i]))];
    for (std::size_t j = i + 1; j < 9; ++j) {
      auto ij = oracle::add(naive[i], naive[j]);
      ++expected[static_cast<std::size_t>(oracle::weight(ij))];
      for (std::size_t l = j + 1; l < 9; ++l) ++expected[static_cast<std::size_t>(oracle::weight(oracle::add(ij, naive[l])))];
    }
  }
  EXPECT_EQ(s.counts, expected);
}

TEST(SampledBound, Hexacode) {
  auto c = graph_code(build_metacirculant(kHexacode));
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    SampleOptions opt;
    opt.samples = 1;
    opt.seed = seed;
    auto p = min_weight_upper_bound(c, opt);
    EXPECT_GE(*p.min_distance, 4);
    EXPECT_EQ(p.kind, ProfileKind::kUpperBoundSampled);
    EXPECT_EQ(p.seed, seed);
  }
  SampleOptions many;
  many.samples = 20000;
  EXPECT_EQ(*min_weight_upper_bound(c, many).min_distance, 4);
}

TEST(SampledBound, SingleOmegaGenerator) {
  AdditiveCode c(1, {GF4Vector::from_symbols("w")});
  SampleOptions opt;
  opt.samples = 10;
  EXPECT_EQ(min_weight_upper_bound(c, opt).min_distance, 1);
}

TEST(SampledBound, RejectsZeroSamples) {
  SampleOptions opt;
  opt.samples = 0;
  EXPECT_THROW(min_weight_upper_bound(bordered_code(kHexacode), opt), std::invalid_argument);
}

TEST(SampledBound, IndependentOfThreadCount) {
  auto c = bordered_code(fixture("G36_1").spec);
  SampleOptions opt;
  opt.samples = 30011;
  opt.seed = 5;
  opt.threads = 1;
  const auto ref = min_weight_upper_bound(c, opt);
  for (unsigned th : {2u, 4u, 7u}) {
    opt.threads = th;
    EXPECT_TRUE(min_weight_upper_bound(c, opt).same_distribution(ref));
  }
  opt.seed = 6;
  EXPECT_FALSE(min_weight_upper_bound(c, opt).same_distribution(ref));
}

TEST(SampledBound, NeverBelowTrueDistance) {
  std::mt19937_64 rng(28);
  for (int t = 0; t < 40; ++t) {
    auto c = graph_code(random_graph(rng, std::uniform_int_distribution<int>(4, 14)(rng)));
    SampleOptions opt;
    opt.samples = 500;
    opt.seed = static_cast<std::uint64_t>(t);
    const int d = *min_distance_exact(c).min_distance;
    ASSERT_GE(*min_weight_upper_bound(c, opt).min_distance, d);
    // Every combination drawn many times over: the bound is tight.
    opt.samples = 200000;
    if (c.dimension() <= 10) {
      ASSERT_EQ(*min_weight_upper_bound(c, opt).min_distance, d);
    }
  }
}

TEST(SampledBound, ExhaustsSmallSampleSpaces) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    auto c = graph_code(random_graph(rng, 3));
    SampleOptions opt;
    opt.samples = 1;
    EXPECT_EQ(min_weight_upper_bound(c, opt).min_distance, min_distance_exact(c).min_distance);
  }
}

// ---- profiles -----------------------------------------------------------

TEST(Inequivalence, Witnesses) {
  auto hex = min_distance_exact(graph_code(build_metacirculant(kHexacode)));
  auto bhex = min_distance_exact(bordered_code(kHexacode));
  EXPECT_FALSE(inequivalence_witness(hex, hex).has_value());
  auto w = inequivalence_witness(hex, bhex);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->length_differs);

  WeightProfile a = hex, b = hex;
  b.counts[4] -= 1;
  b.counts[6] += 1;
  auto d = inequivalence_witness(a, b);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->weight, 4u);
  EXPECT_EQ(d->count_a, 45u);
  EXPECT_EQ(d->count_b, 44u);
  EXPECT_EQ(d->describe(), "A_4: 45 vs 44");

  SampleOptions opt;
  opt.samples = 5;
  auto sampled = min_weight_upper_bound(graph_code(build_metacirculant(kHexacode)), opt);
  EXPECT_THROW(inequivalence_witness(hex, sampled), std::invalid_argument);
}

TEST(WeightProfile, ExactProfilesSumToAllCodewords) {
  std::mt19937_64 rng(30);
  for (int t = 0; t < 30; ++t) {
    auto spec = oracle::random_valid_spec(rng, 16);
    auto p = min_distance_exact(bordered_code(spec));
    ASSERT_EQ(p.total(), std::uint64_t{1} << (spec.order() + 1));
    ASSERT_EQ(p.count(0), 1u);
    ASSERT_EQ(p.min_distance, WeightProfile::least_nonzero_weight(p.counts));
  }
}

}  // namespace
}  // namespace metacode
