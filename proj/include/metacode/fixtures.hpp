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

#ifndef METACODE_FIXTURES_HPP
#define METACODE_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metacode/additive_code.hpp"
#include "metacode/fixture_tables.hpp"
#include "metacode/graph.hpp"
#include "metacode/metacirculant.hpp"

namespace metacode {

/// An expected value and where it was published.
template <typename T>
struct Claim {
  T value{};
  const char* source = "";
};

struct Fixture {
  std::string name;
  MetacirculantSpec spec;
  Labeling labeling = Labeling::kBlockMajor;  // numbering used by the published table or figure
  const char* edge_table = nullptr;           // published edge table, if any

  Claim<std::size_t> edge_count;
  std::optional<Claim<int>> valency;
  std::optional<Claim<int>> diameter;
  std::optional<Claim<int>> girth;
  std::optional<Claim<int>> clique;
  Claim<TypeClass> type;  // of the bordered graph code
  Claim<int> distance;    // of the bordered graph code
  std::vector<std::pair<std::size_t, Claim<std::uint64_t>>> weight_counts;  // A_w claims, bordered code
};

namespace detail {

inline Fixture make_fixture(std::string name, MetacirculantSpec spec, Labeling labeling, const char* table,
                            std::size_t edges, const char* edge_source, int valency, int diameter, int girth,
                            int clique, TypeClass type, const char* type_source, int d, const char* d_source) {
  constexpr const char* kProperties = "graph property table";
  Fixture f;
  f.name = std::move(name);
  f.spec = std::move(spec);
  f.labeling = labeling;
  f.edge_table = table;
  f.edge_count = {edges, edge_source};
  f.valency = Claim<int>{valency, kProperties};
  f.diameter = Claim<int>{diameter, kProperties};
  f.girth = Claim<int>{girth, kProperties};
  f.clique = Claim<int>{clique, kProperties};
  f.type = {type, type_source};
  f.distance = {d, d_source};
  return f;
}

}  // namespace detail

/// Hexacode graph edges in the published figure's numbering (1-based, row-major).
inline const std::vector<Edge>& hexacode_figure_edges() {
  static const std::vector<Edge> edges = {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {1, 4}, {2, 5}, {3, 6}};
  return edges;
}

/// Published generator matrix of the bordered hexacode, rows over {0, 1, w, W}.
inline constexpr const char* kBorderedHexacodeMatrix =
    "w111111\n"
    "1w11100\n"
    "11w1010\n"
    "111w001\n"
    "1100w11\n"
    "10101w1\n"
    "100111w\n";

inline constexpr int kHexacodeDistance = 4;  // unbordered (6, 2^6, 4)

inline const std::vector<Fixture>& fixtures() {
  using detail::make_fixture;
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> v;

    Fixture hex;
    hex.name = "hexacode";
    hex.spec = {2, 3, 1, {{1, 2}, {0}}};
    hex.labeling = Labeling::kBlockMajor;
    hex.edge_count = {9, "hexacode figure"};
    hex.valency = Claim<int>{3, "hexacode figure"};
    hex.type = {TypeClass::kTypeI, "bordered code has distance 3"};
    hex.distance = {3, "bordered hexacode example"};
    v.push_back(std::move(hex));

    v.push_back(make_fixture("G28", {2, 14, 13, {{5, 6, 8, 9}, {0, 1, 3, 6, 7, 9, 11}}}, Labeling::kOffsetMajor,
                             tables::kTableG28, 154, "edge table caption", 11, 2, 3, 4, TypeClass::kTypeI,
                             "degree-parity criterion", 10, "(29, 2^29, 10) claim"));

    auto g36_1 = make_fixture("G36_1", {2, 18, 17, {{1, 3, 9, 15, 17}, {2, 6, 8, 11, 15, 16}}},
                              Labeling::kOffsetMajor, tables::kTableG36_1, 198, "edge table caption", 11, 3, 3, 4,
                              TypeClass::kTypeI, "degree-parity criterion", 11, "(37, 2^37, 11) claim");
    g36_1.weight_counts.push_back({11, {252, "(37, 2^37, 11) claim, first code"}});
    v.push_back(std::move(g36_1));

    auto g36_2 = make_fixture("G36_2", {2, 18, 17, {{1, 2, 3, 5, 13, 15, 16, 17}, {0, 1, 2, 3, 5, 8, 9, 11, 12, 13, 15}}},
                              Labeling::kOffsetMajor, tables::kTableG36_2, 342, "edge table caption", 19, 2, 3, 5,
                              TypeClass::kTypeI, "degree-parity criterion", 11, "(37, 2^37, 11) claim");
    g36_2.weight_counts.push_back({11, {270, "(37, 2^37, 11) claim, second code"}});
    v.push_back(std::move(g36_2));

    v.push_back(make_fixture("G80_1",
                             {8, 10, 7, {{1, 4, 6, 9}, {0, 1, 2, 3, 6, 7, 8}, {0, 2, 3, 4, 8, 9}, {0, 6}, {0, 1, 2, 4, 6, 8, 9}}},
                             Labeling::kOffsetMajor, tables::kTableG80_1, 1640, "edge table caption", 41, 2, 3, 8,
                             TypeClass::kTypeI, "(81, 2^81, 20) Type I claim", 20, "(81, 2^81, 20) claim"));
    v.push_back(make_fixture("G80_2",
                             {8, 10, 3, {{4, 5, 6}, {0, 1, 2, 4, 5, 7, 9}, {0, 1, 5, 8, 9}, {0, 2, 3, 7}, {1, 2, 3, 4, 5, 6, 7, 8, 9}}},
                             Labeling::kOffsetMajor, nullptr, 1760, "n * valency / 2 from property table", 44, 2, 3,
                             7, TypeClass::kTypeI, "(81, 2^81, 20) Type I claim", 20, "(81, 2^81, 20) claim"));
    v.push_back(make_fixture(
        "G80_3",
        {10, 8, 5, {{2, 3, 5, 6}, {3}, {2, 4, 6, 7}, {5, 6}, {0, 1, 2, 3, 4, 6}, {0, 2, 5, 6, 7}}},
        Labeling::kOffsetMajor, nullptr, 1400, "n * valency / 2 from property table", 35, 2, 3, 9, TypeClass::kTypeI,
        "(81, 2^81, 20) Type I claim", 20, "(81, 2^81, 20) claim"));
    // The caption's vertex ranges are inconsistent with 31-vertex blocks; the
    // numbering used here is the one under which the listed rows reproduce
    // the construction edge for edge.
    v.push_back(make_fixture("G93",
                             {3, 31, 1, {{10, 12, 13, 15, 16, 18, 19, 21}, {4, 6, 7, 9, 12, 14, 15, 18, 19, 21}}},
                             Labeling::kOffsetMajor, tables::kTableG93, 1302, "edge table caption", 28, 2, 3, 4,
                             TypeClass::kTypeII, "(94, 2^94, 22) Type II claim", 22, "(94, 2^94, 22) claim"));
    return v;
  }();
  return all;
}

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : fixtures()) out.push_back(f.name);
  return out;
}

inline const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  std::string known;
  for (const auto& n : fixture_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace metacode

#endif  // METACODE_FIXTURES_HPP
