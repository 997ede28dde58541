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

// Command-line front end. Data goes to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 check failure, 2 usage or parse error.

#ifndef METACODE_TOOLS_CLI_HPP
#define METACODE_TOOLS_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "metacode.hpp"

namespace metacode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad input from the user; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct Globals {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> exhaustive_limit;

  ExhaustiveOptions exhaustive() const {
    ExhaustiveOptions o;
    o.threads = threads;
    if (budget) o.budget = *budget;
    if (exhaustive_limit) o.exhaustive_limit = *exhaustive_limit;
    return o;
  }
};

inline std::string read_input(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

template <typename F>
auto parse_file(const std::string& path, F parse) {
  const std::string text = read_input(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline MetacirculantSpec load_spec(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return parse_spec(t); });
}

inline SimpleGraph load_graph(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return parse_edge_table(t); });
}

/// An edge table (first token `n`) yields its graph code; anything else is
/// read as a generator matrix.
inline AdditiveCode load_code(const std::string& path) {
  return parse_file(path, [](const std::string& t) {
    std::istringstream in(t);
    std::string line;
    while (std::getline(in, line)) {
      const std::string s = metacode::detail::trim(line.substr(0, line.find('#')));
      if (s.empty()) continue;
      if (s.front() == 'n') return graph_code(parse_edge_table(t));
      break;
    }
    return parse_generator_matrix(t);
  });
}

/// A fixture name, or a spec file when a file of that name exists.
struct Source {
  MetacirculantSpec spec;
  Labeling labeling = Labeling::kBlockMajor;
  const Fixture* fixture = nullptr;
};

inline Source load_source(const std::string& arg) {
  if (std::filesystem::exists(arg)) return Source{load_spec(arg), Labeling::kBlockMajor, nullptr};
  try {
    const Fixture& f = metacode::fixture(arg);
    return Source{f.spec, f.labeling, &f};
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + "; and no file named '" + arg + "' exists");
  }
}

inline Labeling parse_labeling(const std::string& s) {
  if (s == "block") return Labeling::kBlockMajor;
  if (s == "offset") return Labeling::kOffsetMajor;
  throw UsageError("labeling must be 'block' or 'offset'");
}

inline SimpleGraph build_checked(const MetacirculantSpec& spec, Labeling labeling, bool bordered) {
  SimpleGraph g = build_metacirculant(spec, labeling);
  return bordered ? border(g) : g;
}

inline void print_profile(std::ostream& out, const WeightProfile& p, const std::vector<std::size_t>& extra_weights) {
  out << "n = " << p.n << "\n";
  out << "kind = " << to_string(p.kind) << "\n";
  const bool exact = p.kind == ProfileKind::kExact;
  if (p.min_distance) {
    out << (exact ? "d = " : "d_upper_bound = ") << *p.min_distance << "\n";
    if (exact) out << "A_" << *p.min_distance << " = " << p.count(static_cast<std::size_t>(*p.min_distance)) << "\n";
  } else {
    out << (exact ? "d = none" : "d_upper_bound = none") << "\n";
  }
  for (std::size_t w : extra_weights) out << "A_" << w << " = " << p.count(w) << "\n";
  if (p.seed) out << "seed = " << *p.seed << "\n";
  out << (exact ? "weights =" : "sampled_weights =");
  for (std::size_t w = 0; w < p.counts.size(); ++w) {
    if (p.counts[w] != 0) out << ' ' << w << ':' << p.counts[w];
  }
  out << "\n";
}

inline void print_metrics(std::ostream& out, const GraphMetrics& m) {
  out << "vertices = " << m.degree_sequence.size() << "\n";
  out << "edges = " << m.edge_count << "\n";
  out << "valency = " << (m.valency ? std::to_string(*m.valency) : "irregular") << "\n";
  out << "diameter = " << (m.diameter ? std::to_string(*m.diameter) : "disconnected") << "\n";
  out << "girth = " << (m.girth ? std::to_string(*m.girth) : "acyclic") << "\n";
  if (m.clique) {
    out << "clique = " << m.clique->size << (m.clique->exact ? "" : " (lower bound: node budget exhausted)") << "\n";
  }
  out << "degrees =";
  for (int d : m.degree_sequence) out << ' ' << d;
  out << "\n";
}

inline nlohmann::json metrics_to_json(const GraphMetrics& m) {
  auto opt = [](const std::optional<int>& v, const char* none) { return v ? nlohmann::json(*v) : nlohmann::json(none); };
  nlohmann::json j = {{"vertices", m.degree_sequence.size()},
                      {"edges", m.edge_count},
                      {"valency", opt(m.valency, "irregular")},
                      {"diameter", opt(m.diameter, "disconnected")},
                      {"girth", opt(m.girth, "acyclic")},
                      {"degrees", m.degree_sequence}};
  if (m.clique) j["clique"] = {{"size", m.clique->size}, {"exact", m.clique->exact}};
  return j;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"metacode: metacirculant graphs and self-dual additive codes over GF(4)", "metacode"};
  app.require_subcommand(1);
  app.fallthrough();

  detail::Globals g;
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Cap on codewords visited by exhaustive enumeration");
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--exhaustive-limit", g.exhaustive_limit,
                 std::string("Largest dimension enumerated exhaustively (default from ") + kExhaustiveLimitEnv +
                     ", else " + std::to_string(kDefaultExhaustiveLimit) + ")");

  std::function<int()> action;

  // validate
  std::string spec_path;
  auto* validate = app.add_subcommand("validate", "Check a spec file against the metacirculant conditions");
  validate->add_option("specfile", spec_path)->required();
  validate->callback([&] {
    action = [&] {
      const auto spec = detail::load_spec(spec_path);
      const auto report = validate_spec(spec);
      if (report.ok()) {
        out << "ok " << format_spec_inline(spec) << "\n";
        return kExitOk;
      }
      out << "invalid " << format_spec_inline(spec) << "\n";
      for (const auto& v : report.violations) {
        out << "violation: " << condition_name(v.condition) << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
      }
      return kExitCheckFailed;
    };
  });

  // build-graph
  bool bordered = false;
  std::string labeling = "block";
  auto* build = app.add_subcommand("build-graph", "Print the edge table of a spec's graph");
  build->add_option("specfile", spec_path)->required();
  build->add_flag("--bordered", bordered, "Add the universal vertex (numbered 1)");
  build->add_option("--labeling", labeling, "Vertex numbering: block (i*l+j+1) or offset (j*m+i+1)")
      ->check(CLI::IsMember({"block", "offset"}));
  build->callback([&] {
    action = [&] {
      const auto spec = detail::load_spec(spec_path);
      out << format_edge_table(detail::build_checked(spec, detail::parse_labeling(labeling), bordered));
      return kExitOk;
    };
  });

  // metrics
  std::string graph_path;
  bool no_clique = false;
  bool as_json = false;
  std::uint64_t clique_budget = 1'000'000'000;
  auto* met = app.add_subcommand("metrics", "Degree sequence, diameter, girth and clique number of an edge table");
  met->add_option("graph", graph_path)->required();
  met->add_flag("--no-clique", no_clique, "Skip the clique search");
  met->add_option("--clique-budget", clique_budget, "Branch-and-bound node budget");
  met->add_flag("--json", as_json, "JSON output");
  met->callback([&] {
    action = [&] {
      const auto m = metrics(detail::load_graph(graph_path), !no_clique, clique_budget);
      if (as_json) {
        out << detail::metrics_to_json(m).dump(2) << "\n";
      } else {
        detail::print_metrics(out, m);
      }
      return kExitOk;
    };
  });

  // code
  char separator = '\0';
  bool spaced = false;
  auto* code = app.add_subcommand("code", "Print the generator matrix of an edge table's graph code");
  code->add_option("graph", graph_path)->required();
  code->add_flag("--spaced", spaced, "Separate symbols with spaces");
  code->callback([&] {
    action = [&] {
      const auto c = graph_code(detail::load_graph(graph_path));
      separator = spaced ? ' ' : '\0';
      out << format_generator_matrix(c, separator);
      const auto cert = is_self_dual(c);
      err << "self-dual: " << (cert.self_dual ? "true" : "false") << "\n";
      return cert.self_dual ? kExitOk : kExitCheckFailed;
    };
  });

  // distance
  std::string code_path;
  bool exact_flag = false;
  std::optional<std::uint64_t> sample_count;
  std::vector<std::size_t> weights;
  auto* dist = app.add_subcommand("distance", "Minimum distance of a generator matrix or edge table's code");
  dist->add_option("code", code_path)->required();
  auto* exact_opt = dist->add_flag("--exact", exact_flag, "Exhaustive Gray-code enumeration (default)");
  dist->add_option("--sample", sample_count, "Sampled upper bound from N random combinations")->excludes(exact_opt);
  dist->add_option("--weight", weights, "Also report A_w for these weights");
  dist->add_flag("--json", as_json, "Print the profile as JSON");
  dist->callback([&] {
    action = [&] {
      const auto c = detail::load_code(code_path);
      WeightProfile p;
      if (sample_count) {
        SampleOptions so;
        so.samples = *sample_count;
        so.seed = g.seed.value_or(0);
        so.threads = g.threads;
        if (so.samples < 1) throw UsageError("--sample needs N >= 1");
        p = min_weight_upper_bound(c, so);
      } else {
        p = min_distance_exact(c, g.exhaustive());
      }
      if (as_json) {
        out << profile_to_json(p).dump(2) << "\n";
      } else {
        detail::print_profile(out, p, weights);
      }
      err << "runtime: " << std::fixed << std::setprecision(3) << p.runtime_seconds << " s\n";
      return kExitOk;
    };
  });

  // classify
  auto* cls = app.add_subcommand("classify", "Type I/II of the bordered graph code, by theorem and by degrees");
  cls->add_option("specfile", spec_path)->required();
  cls->callback([&] {
    action = [&] {
      const auto spec = detail::load_spec(spec_path);
      const auto gb = detail::build_checked(spec, Labeling::kBlockMajor, true);
      const auto by_theorem = classify_by_theorem(spec);
      const auto by_degrees = classify_by_degrees(gb);
      out << "n = " << gb.size() << "\n";
      out << "delta_s = " << delta_s(spec) << "\n";
      out << "by_theorem = " << to_string(by_theorem) << "\n";
      out << "by_degrees = " << to_string(by_degrees) << "\n";
      if (by_theorem != by_degrees) {
        err << "classification mismatch\n";
        return kExitCheckFailed;
      }
      return kExitOk;
    };
  });

  // search
  std::string config_path;
  std::string resume_path;
  auto* search = app.add_subcommand("search", "Randomized search for high-distance bordered metacirculant codes");
  search->add_option("configfile", config_path)->required();
  search->add_option("--resume", resume_path, "Continue from a checkpoint file");
  search->callback([&] {
    action = [&] {
      SearchConfig cfg = detail::parse_file(config_path, [](const std::string& t) { return parse_search_config(t); });
      if (g.seed) cfg.seed = *g.seed;
      if (g.budget) cfg.budget = *g.budget;
      if (g.exhaustive_limit) cfg.exhaustive_limit = *g.exhaustive_limit;
      if (app.get_option("--threads")->count() > 0) cfg.threads = g.threads;
      RunOptions run;
      if (!resume_path.empty()) {
        run.resume = detail::parse_file(resume_path, [](const std::string& t) { return parse_checkpoint(t); });
      }
      SearchResult res;
      try {
        res = run_search(cfg, run);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const std::string lines = format_results_jsonl(res.records);
      if (cfg.results_path.empty()) {
        out << lines;
      } else {
        std::ofstream f(cfg.results_path, std::ios::binary | std::ios::trunc);
        f << lines;
        if (!f) {
          err << "error: cannot write results to " << cfg.results_path << "\n";
          out << lines;
          return kExitCheckFailed;
        }
      }
      err << "trials: " << res.next_trial << "/" << cfg.trials << ", records: " << res.stats.evaluated;
      for (const auto& [reason, count] : res.stats.rejected) err << ", rejected (" << reason << "): " << count;
      err << "\n";
      if (!res.records.empty()) {
        const auto& best = res.records.front();
        err << "best: " << format_spec_inline(best.spec) << " d = " << best.d_result.min_distance.value_or(0) << " ("
            << to_string(best.d_result.kind) << ")\n";
      }
      if (res.error) {
        err << "error: " << *res.error << "\n";
        return kExitCheckFailed;
      }
      return kExitOk;
    };
  });

  // verify
  std::string fixture_name;
  bool full = false;
  std::optional<std::uint64_t> samples;
  auto* ver = app.add_subcommand("verify", "Check a built-in fixture against its published values");
  ver->add_option("fixture", fixture_name, "One of: " + [] {
    std::string s;
    for (const auto& n : fixture_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }())->required();
  ver->add_flag("--full", full, "Also run distance checks");
  ver->add_option("--samples", samples, "Random codewords for the sampled consistency check");
  ver->add_flag("--json", as_json, "Print the report as JSON");
  ver->callback([&] {
    action = [&] {
      const Fixture* f = nullptr;
      try {
        f = &fixture(fixture_name);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      VerifyOptions vo;
      vo.level = full ? VerifyLevel::kFull : VerifyLevel::kStructural;
      vo.threads = g.threads;
      const auto eo = g.exhaustive();
      vo.exhaustive_limit = eo.exhaustive_limit;
      vo.budget = eo.budget;
      if (samples) vo.samples = *samples;
      if (g.seed) vo.seed = *g.seed;
      const auto report = verify_fixture(*f, vo);
      out << (as_json ? report_to_json(report).dump(2) + "\n" : format_report(report));
      return report.passed() ? kExitOk : kExitCheckFailed;
    };
  });

  // export
  std::string what;
  std::string source;
  auto* exp = app.add_subcommand("export", "Export an edge table, generator matrix, profile or report");
  exp->add_option("what", what, "edges | matrix | profile | report")
      ->required()
      ->check(CLI::IsMember({"edges", "matrix", "profile", "report"}));
  exp->add_option("source", source, "Fixture name or spec file")->required();
  exp->add_flag("--bordered", bordered, "Use the bordered graph (always on for profile and report)");
  exp->add_flag("--full", full, "Full verification level for report");
  exp->callback([&] {
    action = [&] {
      const auto src = detail::load_source(source);
      if (what == "edges") {
        out << format_edge_table(detail::build_checked(src.spec, src.labeling, bordered));
      } else if (what == "matrix") {
        out << format_generator_matrix(graph_code(detail::build_checked(src.spec, src.labeling, bordered)), '\0');
      } else if (what == "profile") {
        const auto c = graph_code(detail::build_checked(src.spec, src.labeling, true));
        out << profile_to_json(min_distance_exact(c, g.exhaustive()), false).dump(2) << "\n";
      } else {
        if (src.fixture == nullptr) throw UsageError("report needs a fixture name");
        VerifyOptions vo;
        vo.level = full ? VerifyLevel::kFull : VerifyLevel::kStructural;
        vo.threads = g.threads;
        vo.exhaustive_limit = g.exhaustive().exhaustive_limit;
        vo.budget = g.exhaustive().budget;
        if (g.seed) vo.seed = *g.seed;
        const auto report = verify_fixture(*src.fixture, vo);
        out << report_to_json(report, false).dump(2) << "\n";
        return report.passed() ? kExitOk : kExitCheckFailed;
      }
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const InfeasibleEnumeration& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace metacode::cli

#endif  // METACODE_TOOLS_CLI_HPP
