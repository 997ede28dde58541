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

#ifndef METACODE_VERIFY_HPP
#define METACODE_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "metacode/additive_code.hpp"
#include "metacode/distance.hpp"
#include "metacode/fixtures.hpp"
#include "metacode/graph_metrics.hpp"
#include "metacode/io.hpp"
#include "metacode/metacirculant.hpp"

namespace metacode {

enum class CheckStatus { kPass, kFail, kSkipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  std::string expected;
  std::string measured;
  std::string source;  // where the expected value comes from
  std::string note;
  double runtime_seconds = 0.0;
};

struct VerificationReport {
  std::string fixture;
  std::string level;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::kFail; });
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

enum class VerifyLevel { kStructural, kFull };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::kStructural;
  unsigned threads = 1;
  std::size_t exhaustive_limit = default_exhaustive_limit();
  std::uint64_t budget = ExhaustiveOptions{}.budget;
  std::uint64_t clique_budget = 200'000'000;
  std::uint64_t samples = 10'000'000;  // sampled consistency check where exact d is out of reach
  std::uint64_t seed = 1;
};

namespace detail {

class ReportBuilder {
 public:
  explicit ReportBuilder(VerificationReport& r) : r_(r) {}

  /// Times `measure`, which fills `measured` and returns pass/fail.
  void run(std::string name, std::string expected, std::string source, const std::function<bool(CheckResult&)>& measure) {
    CheckResult c;
    c.name = std::move(name);
    c.expected = std::move(expected);
    c.source = std::move(source);
    const auto t0 = std::chrono::steady_clock::now();
    c.status = measure(c) ? CheckStatus::kPass : CheckStatus::kFail;
    c.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r_.checks.push_back(std::move(c));
  }

  void skip(std::string name, std::string expected, std::string source, std::string note) {
    CheckResult c;
    c.name = std::move(name);
    c.expected = std::move(expected);
    c.source = std::move(source);
    c.note = std::move(note);
    c.status = CheckStatus::kSkipped;
    r_.checks.push_back(std::move(c));
  }

 private:
  VerificationReport& r_;
};

inline std::string opt_int(const std::optional<int>& v, const char* none) {
  return v ? std::to_string(*v) : std::string(none);
}

}  // namespace detail

/// Structural checks: spec validity, edge count and published table, graph
/// metrics, self-duality and type class. The full level adds exact distance
/// and weight counts when the bordered code is within the exhaustive limit,
/// and a sampled search for lighter codewords otherwise.
inline VerificationReport verify_fixture(const Fixture& fx, const VerifyOptions& opt = {}) {
  VerificationReport report;
  report.fixture = fx.name;
  report.level = opt.level == VerifyLevel::kFull ? "full" : "structural";
  detail::ReportBuilder b(report);

  const auto validity = validate_spec(fx.spec);
  b.run("spec valid", "ok", "fixture spec", [&](CheckResult& c) {
    c.measured = validity.ok() ? "ok" : validity.describe();
    return validity.ok();
  });
  if (!validity.ok()) return report;

  const SimpleGraph g = build_metacirculant(fx.spec, fx.labeling);
  const SimpleGraph gb = border(g);
  const AdditiveCode code = graph_code(gb);

  b.run("edge count", std::to_string(fx.edge_count.value), fx.edge_count.source, [&](CheckResult& c) {
    c.measured = std::to_string(g.edge_count());
    return g.edge_count() == fx.edge_count.value;
  });

  if (fx.edge_table != nullptr) {
    b.run("edge table", "identical adjacency", "published edge table", [&](CheckResult& c) {
      const SimpleGraph t = parse_edge_table(fx.edge_table);
      const bool same = t.size() == g.size() && t.same_adjacency(g);
      c.measured = same ? "identical adjacency" : "differs (" + std::to_string(t.edge_count()) + " table edges)";
      return same;
    });
  }
  if (fx.name == "hexacode") {
    b.run("figure edges", "9 listed edges", "hexacode figure", [&](CheckResult& c) {
      std::vector<Edge> got = edge_list(g);
      for (auto& [u, v] : got) ++u, ++v;
      const bool same = got == [] {
        auto e = hexacode_figure_edges();
        std::sort(e.begin(), e.end());
        return e;
      }();
      c.measured = std::to_string(got.size()) + (same ? " listed edges" : " edges, mismatch");
      return same;
    });
    b.run("generator matrix", "literal 7x7 matrix", "bordered hexacode example", [&](CheckResult& c) {
      const std::string got = format_generator_matrix(code, '\0');
      c.measured = got == kBorderedHexacodeMatrix ? "literal 7x7 matrix" : got;
      return got == kBorderedHexacodeMatrix;
    });
  }

  const GraphMetrics gm = metrics(g, fx.clique.has_value(), opt.clique_budget);
  if (fx.valency) {
    b.run("valency", std::to_string(fx.valency->value), fx.valency->source, [&](CheckResult& c) {
      c.measured = detail::opt_int(gm.valency, "irregular");
      return gm.valency == fx.valency->value && expected_valency(fx.spec, false) == fx.valency->value;
    });
    b.run("edge/valency consistency", std::to_string(fx.edge_count.value), "n * valency / 2", [&](CheckResult& c) {
      const auto prod = static_cast<std::size_t>(fx.spec.order()) * static_cast<std::size_t>(fx.valency->value);
      c.measured = std::to_string(prod / 2);
      return prod % 2 == 0 && prod / 2 == fx.edge_count.value;
    });
  }
  if (fx.diameter) {
    b.run("diameter", std::to_string(fx.diameter->value), fx.diameter->source, [&](CheckResult& c) {
      c.measured = detail::opt_int(gm.diameter, "disconnected");
      return gm.diameter == fx.diameter->value;
    });
  }
  if (fx.girth) {
    b.run("girth", std::to_string(fx.girth->value), fx.girth->source, [&](CheckResult& c) {
      c.measured = detail::opt_int(gm.girth, "acyclic");
      return gm.girth == fx.girth->value;
    });
  }
  if (fx.clique) {
    b.run("clique", std::to_string(fx.clique->value), fx.clique->source, [&](CheckResult& c) {
      c.measured = std::to_string(gm.clique->size) + (gm.clique->exact ? "" : " (lower bound, budget exhausted)");
      return gm.clique->exact && gm.clique->size == fx.clique->value;
    });
  }

  b.run("self-dual", "true", "every graph code is self-dual", [&](CheckResult& c) {
    const auto cert = is_self_dual(code);
    c.measured = cert.self_dual ? "true" : "false (rank " + std::to_string(cert.rank) + ", " +
                                               std::to_string(cert.non_orthogonal.size()) + " non-orthogonal pairs)";
    return cert.self_dual;
  });
  b.run("type by degrees", to_string(fx.type.value), fx.type.source, [&](CheckResult& c) {
    const auto t = classify_by_degrees(gb);
    c.measured = to_string(t);
    return t == fx.type.value;
  });
  b.run("type by theorem", to_string(fx.type.value), fx.type.source, [&](CheckResult& c) {
    const auto t = classify_by_theorem(fx.spec);
    c.measured = to_string(t);
    return t == fx.type.value;
  });

  if (opt.level != VerifyLevel::kFull) return report;

  ExhaustiveOptions eo;
  eo.threads = opt.threads;
  eo.exhaustive_limit = opt.exhaustive_limit;
  eo.budget = opt.budget;
  const std::string d_expected = std::to_string(fx.distance.value);

  std::optional<WeightProfile> exact;
  std::string infeasible;
  try {
    detail::check_feasible(code, eo);
  } catch (const InfeasibleEnumeration& e) {
    infeasible = e.what();
  }

  if (infeasible.empty()) {
    b.run("min distance", d_expected, fx.distance.source, [&](CheckResult& c) {
      exact = min_distance_exact(code, eo);
      c.measured = detail::opt_int(exact->min_distance, "none");
      return exact->min_distance == fx.distance.value;
    });
    for (const auto& [w, claim] : fx.weight_counts) {
      b.run("A_" + std::to_string(w), std::to_string(claim.value), claim.source, [&](CheckResult& c) {
        c.measured = std::to_string(exact->count(w));
        return exact->count(w) == claim.value;
      });
    }
    b.run("type II profile parity", fx.type.value == TypeClass::kTypeII ? "no odd weights" : "some odd weight",
          "Type II iff every weight is even", [&](CheckResult& c) {
            bool odd = false;
            for (std::size_t w = 1; w < exact->counts.size(); w += 2) odd |= exact->counts[w] != 0;
            c.measured = odd ? "some odd weight" : "no odd weights";
            return odd == (fx.type.value == TypeClass::kTypeI);
          });
    if (fx.name == "hexacode") {
      b.run("unbordered min distance", std::to_string(kHexacodeDistance), "(6, 2^6, 4) hexacode", [&](CheckResult& c) {
        const auto p = min_distance_exact(graph_code(g), eo);
        c.measured = detail::opt_int(p.min_distance, "none");
        return p.min_distance == kHexacodeDistance;
      });
    }
  } else {
    b.skip("min distance", d_expected, fx.distance.source, "infeasible: " + infeasible);
    for (const auto& [w, claim] : fx.weight_counts) {
      b.skip("A_" + std::to_string(w), std::to_string(claim.value), claim.source, "infeasible: " + infeasible);
    }
    SampleOptions so;
    so.samples = std::max<std::uint64_t>(1, opt.samples);
    so.seed = opt.seed;
    so.threads = opt.threads;
    b.run("sampled consistency", "no codeword lighter than " + d_expected, fx.distance.source, [&](CheckResult& c) {
      const auto p = min_weight_upper_bound(code, so);
      c.measured = "least weight seen " + detail::opt_int(p.min_distance, "none") + " (upper_bound_sampled, " +
                   std::to_string(so.samples) + " samples, seed " + std::to_string(so.seed) + ")";
      return p.min_distance.value_or(0) >= fx.distance.value;
    });
  }
  return report;
}

inline VerificationReport verify_fixture(std::string_view name, const VerifyOptions& opt = {}) {
  return verify_fixture(fixture(name), opt);
}

inline constexpr const char* kVerifySchema = "metacode.verify/1";

inline nlohmann::json report_to_json(const VerificationReport& r, bool with_runtime = true) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j = {{"name", c.name},         {"status", to_string(c.status)}, {"expected", c.expected},
                        {"measured", c.measured}, {"source", c.source}};
    if (!c.note.empty()) j["note"] = c.note;
    if (with_runtime) j["runtime"] = c.runtime_seconds;
    checks.push_back(std::move(j));
  }
  return {{"schema", kVerifySchema},
          {"fixture", r.fixture},
          {"level", r.level},
          {"passed", r.passed()},
          {"checks", checks}};
}

/// One line per check: status, name, measured vs expected.
inline std::string format_report(const VerificationReport& r) {
  std::string out = "fixture " + r.fixture + " (" + r.level + ")\n";
  for (const auto& c : r.checks) {
    std::string status = to_string(c.status);
    status.resize(8, ' ');
    out += "  " + status + c.name + ": " + (c.measured.empty() ? "-" : c.measured) + " (expected " + c.expected + ")";
    if (!c.note.empty()) out += " [" + c.note + "]";
    out += "\n";
  }
  out += r.passed() ? "result: pass\n" : "result: FAIL\n";
  return out;
}

}  // namespace metacode

#endif  // METACODE_VERIFY_HPP
