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

#include <random>
#include <string>
#include <vector>

#include "metacode/fixtures.hpp"
#include "metacode/gf4.hpp"
#include "oracles.hpp"

namespace metacode {
namespace {

using E = GF4Element;

std::vector<std::string> hexacode_rows() {
  std::vector<std::string> rows;
  std::string text = kBorderedHexacodeMatrix;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    rows.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return rows;
}

GF4Vector to_packed(const oracle::Vec& v) {
  GF4Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.set(i, E::from_symbol("01wW"[v[i]]));
  return out;
}

oracle::Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(0, 3);
  oracle::Vec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

TEST(GF4Element, FieldRelationOmegaSquaredIsOmegaPlusOne) {
  EXPECT_EQ(E::omega().square(), E::omega() + E::one());
  EXPECT_EQ(E::omega().square(), E::omega_bar());
}

TEST(GF4Element, EveryElementIsItsOwnInverse) {
  for (E x : {E::zero(), E::one(), E::omega(), E::omega_bar()}) EXPECT_EQ(x + x, E::zero());
}

TEST(GF4Element, AdditionMatchesTableOracle) {
  const E all[] = {E::zero(), E::one(), E::omega(), E::omega_bar()};
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) EXPECT_EQ((all[x] + all[y]).symbol(), "01wW"[oracle::add(x, y)]);
  }
}

TEST(GF4Element, ConjugationSquare) {
  EXPECT_EQ(scalar_conj_square(E::zero()), E::zero());
  EXPECT_EQ(scalar_conj_square(E::one()), E::one());
  EXPECT_EQ(scalar_conj_square(E::omega()), E::omega_bar());
  EXPECT_EQ(scalar_conj_square(E::omega_bar()), E::omega());
  for (int x = 0; x < 4; ++x) {
    EXPECT_EQ(scalar_conj_square(E::from_symbol("01wW"[x])).symbol(), "01wW"[oracle::square(x)]);
  }
}

TEST(GF4Element, SymbolsRoundTripAndRejectOthers) {
  for (char c : std::string("01wW")) EXPECT_EQ(E::from_symbol(c).symbol(), c);
  EXPECT_THROW(E::from_symbol('2'), std::invalid_argument);
  EXPECT_THROW(E::from_symbol('x'), std::invalid_argument);
}

TEST(GF4Element, EncodingPairs) {
  EXPECT_FALSE(E::zero().a());
  EXPECT_FALSE(E::zero().b());
  EXPECT_TRUE(E::one().b());
  EXPECT_FALSE(E::one().a());
  EXPECT_TRUE(E::omega().a());
  EXPECT_FALSE(E::omega().b());
  EXPECT_TRUE(E::omega_bar().a());
  EXPECT_TRUE(E::omega_bar().b());
}

TEST(GF4Vector, AddSelfIsZero) {
  auto u = GF4Vector::from_symbols("w1W0wW1");
  EXPECT_EQ(weight(u + u), 0u);
  EXPECT_EQ(u + u, GF4Vector(7));
}

TEST(GF4Vector, OmegaPlusOneIsOmegaBar) {
  EXPECT_EQ(GF4Vector::from_symbols("w") + GF4Vector::from_symbols("1"), GF4Vector::from_symbols("W"));
}

TEST(GF4Vector, SumOfFirstTwoHexacodeRowsHasEvenWeight) {
  const auto rows = hexacode_rows();
  const auto naive = oracle::add(oracle::parse(rows[0]), oracle::parse(rows[1]));
  const auto packed = GF4Vector::from_symbols(rows[0]) + GF4Vector::from_symbols(rows[1]);
  EXPECT_EQ(static_cast<int>(weight(packed)), oracle::weight(naive));
  EXPECT_EQ(weight(packed) % 2, 0u);
}

TEST(GF4Vector, LengthMismatchThrows) {
  GF4Vector a(3), b(4);
  EXPECT_THROW(add(a, b), std::invalid_argument);
  EXPECT_THROW(distance(a, b), std::invalid_argument);
  EXPECT_THROW(trace_hermitian_ip(a, b), std::invalid_argument);
}

TEST(GF4Vector, TrailingBitsMustBeClear) {
  EXPECT_THROW(GF4Vector(3, {0b1000}, {0}), std::invalid_argument);
  EXPECT_THROW(GF4Vector(3, {0}, {std::uint64_t{1} << 63}), std::invalid_argument);
  EXPECT_THROW(GF4Vector(70, {0}, {0}), std::invalid_argument);
  EXPECT_NO_THROW(GF4Vector(64, {~std::uint64_t{0}}, {0}));
}

TEST(GF4Vector, OperationsKeepTrailingBitsClear) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 63u, 64u, 65u, 130u}) {
    auto u = to_packed(random_vec(rng, n));
    auto v = to_packed(random_vec(rng, n));
    auto s = u + v;
    if (n % 64 != 0) {
      const std::uint64_t tail = ~std::uint64_t{0} << (n % 64);
      EXPECT_EQ(s.plane_a().back() & tail, 0u);
      EXPECT_EQ(s.plane_b().back() & tail, 0u);
    }
  }
}

TEST(GF4Vector, SymbolsRoundTrip) {
  auto v = GF4Vector::from_symbols("w 1 W 0");
  EXPECT_EQ(v.size(), 4u);
  EXPECT_EQ(v.to_symbols(), "w1W0");
  EXPECT_EQ(v.to_symbols(' '), "w 1 W 0");
  EXPECT_EQ(v[2], E::omega_bar());
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(GF4Vector(6)), 0u);
  EXPECT_EQ(weight(GF4Vector::from_symbols("w10W")), 3u);
  EXPECT_EQ(weight(GF4Vector::from_symbols(hexacode_rows()[0])), 7u);
}

TEST(Distance, Examples) {
  auto u = GF4Vector::from_symbols("w1W0");
  EXPECT_EQ(distance(u, u), 0u);
  EXPECT_EQ(distance(GF4Vector::from_symbols("10"), GF4Vector::from_symbols("01")), 2u);
  const auto rows = hexacode_rows();
  EXPECT_EQ(static_cast<int>(distance(GF4Vector::from_symbols(rows[1]), GF4Vector::from_symbols(rows[2]))),
            oracle::distance(oracle::parse(rows[1]), oracle::parse(rows[2])));
}

TEST(TraceForm, Examples) {
  EXPECT_TRUE(trace_hermitian_ip(GF4Vector::from_symbols("1"), GF4Vector::from_symbols("w")));
  EXPECT_FALSE(trace_hermitian_ip(GF4Vector::from_symbols("w"), GF4Vector::from_symbols("w")));
  EXPECT_FALSE(trace_hermitian_ip(GF4Vector::from_symbols("1"), GF4Vector::from_symbols("1")));
}

TEST(TraceForm, HexacodeRowsPairwiseOrthogonal) {
  const auto rows = hexacode_rows();
  ASSERT_EQ(rows.size(), 7u);
  for (const auto& r : rows) {
    for (const auto& s : rows) {
      EXPECT_FALSE(trace_hermitian_ip(GF4Vector::from_symbols(r), GF4Vector::from_symbols(s))) << r << " " << s;
    }
  }
}

TEST(GF4Property, PackedWeightMatchesNaiveCount) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> len(1, 150);
  for (int t = 0; t < 10000; ++t) {
    auto v = random_vec(rng, len(rng));
    ASSERT_EQ(static_cast<int>(weight(to_packed(v))), oracle::weight(v));
  }
}

TEST(GF4Property, PackedTraceFormMatchesScalarSum) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> len(1, 150);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = len(rng);
    auto u = random_vec(rng, n);
    auto v = random_vec(rng, n);
    const int scalar = oracle::trace_form(u, v);
    ASSERT_TRUE(scalar == 0 || scalar == 1);
    ASSERT_EQ(trace_hermitian_ip(to_packed(u), to_packed(v)), scalar == 1);
  }
}

TEST(GF4Property, SelfOrthogonalSymmetricBilinear) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> len(1, 100);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = len(rng);
    auto u = to_packed(random_vec(rng, n));
    auto v = to_packed(random_vec(rng, n));
    auto w = to_packed(random_vec(rng, n));
    ASSERT_FALSE(trace_hermitian_ip(u, u));
    ASSERT_EQ(trace_hermitian_ip(u, v), trace_hermitian_ip(v, u));
    ASSERT_EQ(trace_hermitian_ip(u + v, w), trace_hermitian_ip(u, w) != trace_hermitian_ip(v, w));
  }
}

TEST(GF4Property, PackedAdditionMatchesTableOracle) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 2000; ++t) {
    auto u = random_vec(rng, 70);
    auto v = random_vec(rng, 70);
    ASSERT_EQ(to_packed(u) + to_packed(v), to_packed(oracle::add(u, v)));
    ASSERT_EQ(static_cast<int>(distance(to_packed(u), to_packed(v))), oracle::distance(u, v));
  }
}

}  // namespace
}  // namespace metacode
