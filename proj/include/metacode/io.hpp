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

// Text formats. All vertex indices in files are 1-based.
//
// Spec file (one `key = value` per line, `#` starts a comment):
//
//     m = 2
//     ell = 3
//     alpha = 1
//     S0 = {1, 2}
//     S1 = {0}
//
// The one-line form `G(2, 3, 1, {1, 2}, {0})` is accepted as well.
//
// Edge table: a header `n = N` followed by rows `(i, {j, j, ...})` separated
// by whitespace, commas, semicolons or periods. Rows may span lines. Each
// undirected edge may be listed only once.
//
// Generator matrix: one generator per line over the symbols 0 1 w W, with
// optional whitespace between symbols.

#ifndef METACODE_IO_HPP
#define METACODE_IO_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>
#include "metacode/additive_code.hpp"
#include "metacode/graph.hpp"
#include "metacode/metacirculant.hpp"
#include "metacode/weight_profile.hpp"

namespace metacode {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

// Character cursor that tracks line numbers and skips `#` comments.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space(std::string_view also = "") {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c)) || also.find(c) != std::string_view::npos) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  int line() const { return line_; }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      throw ParseError(line_, std::string("expected '") + c + "'" + (done() ? " at end of input" : std::string(", found '") + peek() + "'"));
    }
    ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_space();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view tok = text_.substr(start, pos_ - start);
    if (tok.empty() || tok == "-" || tok == "+") throw ParseError(line_, "expected an integer");
    try {
      return std::stoll(std::string(tok));
    } catch (const std::out_of_range&) {
      throw ParseError(line_, "integer out of range: " + std::string(tok));
    }
  }
  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  // {a, b, c}
  std::vector<int> int_set() {
    expect('{');
    std::vector<int> out;
    if (accept('}')) return out;
    do {
      out.push_back(static_cast<int>(integer()));
    } while (accept(','));
    expect('}');
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

inline std::string format_set(const ResidueSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + "}";
}

/// G(m, l, alpha, {S0}, {S1}, ...)
inline std::string format_spec_inline(const MetacirculantSpec& spec) {
  std::string out = "G(" + std::to_string(spec.m) + ", " + std::to_string(spec.ell) + ", " + std::to_string(spec.alpha);
  for (const auto& s : spec.s_sets) out += ", " + format_set(s);
  return out + ")";
}

inline std::string format_spec(const MetacirculantSpec& spec) {
  std::string out = "m = " + std::to_string(spec.m) + "\nell = " + std::to_string(spec.ell) +
                    "\nalpha = " + std::to_string(spec.alpha) + "\n";
  for (std::size_t k = 0; k < spec.s_sets.size(); ++k) out += "S" + std::to_string(k) + " = " + format_set(spec.s_sets[k]) + "\n";
  return out;
}

/// Parses either spec form. Sets are sorted; membership and the set
/// conditions are left to validate_spec.
inline MetacirculantSpec parse_spec(std::string_view text) {
  MetacirculantSpec spec;
  detail::Cursor cur(text);
  cur.skip_space();
  if (cur.peek() == 'G') {
    cur.expect('G');
    cur.expect('(');
    spec.m = static_cast<int>(cur.integer());
    cur.expect(',');
    spec.ell = static_cast<int>(cur.integer());
    cur.expect(',');
    spec.alpha = static_cast<int>(cur.integer());
    spec.s_sets.clear();
    while (cur.accept(',')) spec.s_sets.push_back(cur.int_set());
    cur.expect(')');
    cur.skip_space();
    if (!cur.done()) throw ParseError(cur.line(), "trailing text after spec");
  } else {
    std::map<std::size_t, ResidueSet> sets;
    bool have_m = false, have_l = false, have_alpha = false;
    while (true) {
      cur.skip_space();
      if (cur.done()) break;
      const int line = cur.line();
      std::string key = cur.word();
      if (key.empty()) throw ParseError(line, std::string("expected a key, found '") + cur.peek() + "'");
      cur.expect('=');
      if (key == "m") {
        spec.m = static_cast<int>(cur.integer());
        have_m = true;
      } else if (key == "ell" || key == "l") {
        spec.ell = static_cast<int>(cur.integer());
        have_l = true;
      } else if (key == "alpha") {
        spec.alpha = static_cast<int>(cur.integer());
        have_alpha = true;
      } else if ((key[0] == 'S' || key[0] == 's') && key.size() > 1 &&
                 std::all_of(key.begin() + 1, key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        const auto k = static_cast<std::size_t>(std::stoul(key.substr(1)));
        if (sets.contains(k)) throw ParseError(line, "duplicate key " + key);
        sets[k] = cur.int_set();
      } else {
        throw ParseError(line, "unknown key '" + key + "'");
      }
    }
    if (!have_m || !have_l || !have_alpha) throw ParseError(cur.line(), "spec needs m, ell and alpha");
    for (std::size_t k = 0; k < sets.size(); ++k) {
      if (!sets.contains(k)) throw ParseError(cur.line(), "missing S" + std::to_string(k));
      spec.s_sets.push_back(sets[k]);
    }
  }
  for (auto& s : spec.s_sets) std::sort(s.begin(), s.end());
  return spec;
}

/// Rows (i, {j...}) for every vertex with a higher-numbered neighbour.
inline std::string format_edge_table(const SimpleGraph& g) {
  std::string out = "n = " + std::to_string(g.size()) + "\n";
  for (int u = 0; u < g.size(); ++u) {
    std::string row;
    for (int v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) row += (row.empty() ? "" : ", ") + std::to_string(v + 1);
    }
    if (!row.empty()) out += "(" + std::to_string(u + 1) + ", {" + row + "})\n";
  }
  return out;
}

inline SimpleGraph parse_edge_table(std::string_view text) {
  detail::Cursor cur(text);
  cur.skip_space();
  const int header_line = cur.line();
  if (cur.word() != "n") throw ParseError(header_line, "edge table must start with 'n = <vertex count>'");
  cur.accept('=');
  const long long n = cur.integer();
  if (n < 0 || n > 1'000'000) throw ParseError(header_line, "bad vertex count");

  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  while (true) {
    cur.skip_space(",;.");
    if (cur.done()) break;
    const int row_line = cur.line();
    if (cur.peek() != '(') throw ParseError(row_line, std::string("malformed row: expected '(', found '") + cur.peek() + "'");
    cur.expect('(');
    const long long i = cur.integer();
    cur.expect(',');
    const int set_line = cur.line();
    std::vector<int> js = cur.int_set();
    cur.expect(')');
    if (i < 1 || i > n) throw ParseError(row_line, "vertex " + std::to_string(i) + " out of range 1.." + std::to_string(n));
    for (int j : js) {
      if (j < 1 || j > n) throw ParseError(set_line, "vertex " + std::to_string(j) + " out of range 1.." + std::to_string(n));
      if (j == i) throw ParseError(set_line, "self-loop at vertex " + std::to_string(j));
      const std::pair<int, int> e = std::minmax(static_cast<int>(i) - 1, j - 1);
      if (!seen.insert(e).second) {
        throw ParseError(set_line, "duplicate edge (" + std::to_string(e.first + 1) + ", " + std::to_string(e.second + 1) + ")");
      }
      edges.push_back(e);
    }
  }
  return SimpleGraph(static_cast<int>(n), edges);
}

inline std::string format_generator_matrix(const AdditiveCode& c, char separator = ' ') {
  std::string out;
  for (const auto& g : c.generators()) out += g.to_symbols(separator) + "\n";
  return out;
}

inline AdditiveCode parse_generator_matrix(std::string_view text) {
  std::vector<GF4Vector> rows;
  std::size_t n = 0;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line = detail::trim(text.substr(start, end - start));
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line = detail::trim(line.substr(0, hash));
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    GF4Vector row;
    try {
      row = GF4Vector::from_symbols(line);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (rows.empty()) n = row.size();
    if (row.size() != n) {
      throw ParseError(line_no, "row has " + std::to_string(row.size()) + " symbols, expected " + std::to_string(n));
    }
    rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  if (rows.empty()) throw ParseError(line_no, "generator matrix is empty");
  return AdditiveCode(n, std::move(rows));
}

// ---- JSON ---------------------------------------------------------------

inline constexpr const char* kProfileSchema = "metacode.profile/1";

inline nlohmann::json spec_to_json(const MetacirculantSpec& spec) {
  return {{"m", spec.m}, {"ell", spec.ell}, {"alpha", spec.alpha}, {"sets", spec.s_sets}};
}

inline MetacirculantSpec spec_from_json(const nlohmann::json& j) {
  MetacirculantSpec spec;
  spec.m = j.at("m").get<int>();
  spec.ell = j.at("ell").get<int>();
  spec.alpha = j.at("alpha").get<int>();
  spec.s_sets = j.at("sets").get<std::vector<ResidueSet>>();
  return spec;
}

/// Nonzero counts keyed by weight. `with_runtime` is off where output must be reproducible.
inline nlohmann::json profile_to_json(const WeightProfile& p, bool with_runtime = true) {
  nlohmann::json counts = nlohmann::json::object();
  for (std::size_t w = 0; w < p.counts.size(); ++w) {
    if (p.counts[w] != 0) counts[std::to_string(w)] = p.counts[w];
  }
  nlohmann::json j = {{"schema", kProfileSchema}, {"n", p.n}, {"kind", to_string(p.kind)}, {"counts", counts}};
  j["d"] = p.min_distance ? nlohmann::json(*p.min_distance) : nlohmann::json(nullptr);
  if (with_runtime) j["runtime"] = p.runtime_seconds;
  j["seed"] = p.seed ? nlohmann::json(*p.seed) : nlohmann::json(nullptr);
  return j;
}

inline WeightProfile profile_from_json(const nlohmann::json& j) {
  WeightProfile p;
  p.n = j.at("n").get<std::size_t>();
  p.kind = profile_kind_from_string(j.at("kind").get<std::string>());
  p.counts.assign(p.n + 1, 0);
  for (const auto& [w, c] : j.at("counts").items()) {
    const auto weight = static_cast<std::size_t>(std::stoul(w));
    if (weight > p.n) throw std::invalid_argument("profile weight " + w + " exceeds length");
    p.counts[weight] = c.get<std::uint64_t>();
  }
  if (j.contains("d") && !j["d"].is_null()) p.min_distance = j["d"].get<int>();
  if (j.contains("runtime")) p.runtime_seconds = j["runtime"].get<double>();
  if (j.contains("seed") && !j["seed"].is_null()) p.seed = j["seed"].get<std::uint64_t>();
  return p;
}

}  // namespace metacode

#endif  // METACODE_IO_HPP
