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

#ifndef METACODE_SEARCH_HPP
#define METACODE_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "metacode/additive_code.hpp"
#include "metacode/distance.hpp"
#include "metacode/io.hpp"
#include "metacode/metacirculant.hpp"
#include "metacode/weight_profile.hpp"

namespace metacode {

// ---- orbit closure ------------------------------------------------------

struct OrbitClosure {
  ResidueSet elements;
  bool dropped_zero = false;  // 0 was requested but excluded
};

/// Smallest superset of `seeds` closed under x -> u*x, where u = multiplier or
/// -multiplier when `negate` is set. With `exclude_zero`, 0 is dropped and
/// reported.
inline OrbitClosure orbit_closure(const ResidueSet& seeds, int multiplier, bool negate, int ell,
                                  bool exclude_zero = false) {
  if (ell < 1) throw std::invalid_argument("orbit_closure: modulus must be positive");
  if (std::gcd(mod(multiplier, ell), ell) != 1) throw std::invalid_argument("orbit_closure: multiplier is not a unit");
  const int u = mod(negate ? -static_cast<long long>(multiplier) : multiplier, ell);
  std::vector<bool> in(static_cast<std::size_t>(ell), false);
  OrbitClosure out;
  for (int s : seeds) {
    int x = mod(s, ell);
    if (exclude_zero && x == 0) {
      out.dropped_zero = true;
      continue;
    }
    while (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = true;
      x = mod(static_cast<long long>(x) * u, ell);
    }
  }
  for (int x = 0; x < ell; ++x) {
    if (in[static_cast<std::size_t>(x)]) out.elements.push_back(x);
  }
  return out;
}

/// Partition of Z_l (or Z_l \ {0}) into orbits of x -> u*x.
inline std::vector<ResidueSet> orbits(int multiplier, bool negate, int ell, bool exclude_zero) {
  std::vector<bool> seen(static_cast<std::size_t>(ell), false);
  std::vector<ResidueSet> out;
  for (int x = exclude_zero ? 1 : 0; x < ell; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    auto orbit = orbit_closure({x}, multiplier, negate, ell).elements;
    for (int y : orbit) seen[static_cast<std::size_t>(y)] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

inline std::vector<int> units_mod(int ell) {
  std::vector<int> out;
  for (int a = 0; a < ell; ++a) {
    if (std::gcd(a, ell) == 1) out.push_back(a);
  }
  if (ell == 1) out = {0};
  return out;
}

// ---- configuration ------------------------------------------------------

enum class AlphaPolicy { kAllUnits, kRandomUnits };
enum class DistanceEngine { kExact, kSampled };

struct SearchConfig {
  int n = 0;
  bool bordered = true;
  std::vector<std::pair<int, int>> factorizations;  // (m, l); empty: every m*l = n - bordered
  AlphaPolicy alpha_policy = AlphaPolicy::kRandomUnits;
  double density_min = 0.3;
  double density_max = 0.7;
  int filter_weight = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  DistanceEngine engine = DistanceEngine::kExact;
  std::uint64_t samples = 100'000;  // sampled engine only
  std::size_t top_k = 10;
  std::uint64_t checkpoint_interval = 1000;
  std::string checkpoint_path;
  std::string results_path;
  unsigned threads = 1;
  std::uint64_t budget = ExhaustiveOptions{}.budget;
  std::size_t exhaustive_limit = default_exhaustive_limit();
  bool record_timestamps = false;

  int order() const { return bordered ? n - 1 : n; }
};

/// Every (m, l) with m*l = order; m = 1 gives plain circulants.
inline std::vector<std::pair<int, int>> all_factorizations(int order) {
  std::vector<std::pair<int, int>> out;
  for (int m = 1; m <= order; ++m) {
    if (order % m == 0) out.emplace_back(m, order / m);
  }
  return out;
}

inline std::vector<std::pair<int, int>> effective_factorizations(const SearchConfig& cfg) {
  return cfg.factorizations.empty() ? all_factorizations(cfg.order()) : cfg.factorizations;
}

inline void check_config(const SearchConfig& cfg) {
  if (cfg.n < (cfg.bordered ? 2 : 1)) throw std::invalid_argument("search config: n too small");
  for (auto [m, l] : cfg.factorizations) {
    if (m < 1 || l < 1 || m * l != cfg.order()) {
      throw std::invalid_argument("search config: factorization (" + std::to_string(m) + ", " + std::to_string(l) +
                                  ") does not multiply to " + std::to_string(cfg.order()));
    }
  }
  if (!(cfg.density_min >= 0.0 && cfg.density_max <= 1.0 && cfg.density_min <= cfg.density_max)) {
    throw std::invalid_argument("search config: density must satisfy 0 <= min <= max <= 1");
  }
  if (cfg.top_k == 0) throw std::invalid_argument("search config: top_k must be positive");
  if (cfg.checkpoint_interval == 0) throw std::invalid_argument("search config: checkpoint_interval must be positive");
  if (cfg.engine == DistanceEngine::kSampled && cfg.samples == 0) {
    throw std::invalid_argument("search config: samples must be positive");
  }
}

/// Parses `key = value` lines; `#` starts a comment.
inline SearchConfig parse_search_config(std::string_view text) {
  SearchConfig cfg;
  bool have_n = false;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto to_u64 = [&](const std::string& v) -> std::uint64_t {
    std::size_t pos = 0;
    unsigned long long x = 0;
    try {
      if (!v.empty() && v.front() == '-') throw std::invalid_argument("negative");
      x = std::stoull(v, &pos);
    } catch (const std::exception&) {
      throw ParseError(line_no, "expected a non-negative integer, found '" + v + "'");
    }
    if (pos != v.size()) throw ParseError(line_no, "trailing characters in '" + v + "'");
    return x;
  };
  auto to_double = [&](const std::string& v) {
    std::size_t pos = 0;
    double x = 0;
    try {
      x = std::stod(v, &pos);
    } catch (const std::exception&) {
      throw ParseError(line_no, "expected a number, found '" + v + "'");
    }
    if (pos != v.size()) throw ParseError(line_no, "trailing characters in '" + v + "'");
    return x;
  };
  auto to_bool = [&](const std::string& v) {
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw ParseError(line_no, "expected true or false, found '" + v + "'");
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = detail::trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate key '" + key + "'");
    if (key == "n") {
      cfg.n = static_cast<int>(to_u64(value));
      have_n = true;
    } else if (key == "bordered") {
      cfg.bordered = to_bool(value);
    } else if (key == "factorizations") {
      cfg.factorizations.clear();
      if (value == "auto") continue;
      detail::Cursor cur(value);
      while (true) {
        cur.skip_space(",;");
        if (cur.done()) break;
        try {
          cur.expect('(');
          const auto m = cur.integer();
          cur.expect(',');
          const auto l = cur.integer();
          cur.expect(')');
          cfg.factorizations.emplace_back(static_cast<int>(m), static_cast<int>(l));
        } catch (const ParseError& e) {
          throw ParseError(line_no, std::string("factorizations: ") + e.what());
        }
      }
    } else if (key == "alpha_policy") {
      if (value == "all") {
        cfg.alpha_policy = AlphaPolicy::kAllUnits;
      } else if (value == "random") {
        cfg.alpha_policy = AlphaPolicy::kRandomUnits;
      } else {
        throw ParseError(line_no, "alpha_policy must be 'all' or 'random'");
      }
    } else if (key == "density") {
      const auto comma = value.find(',');
      if (comma == std::string::npos) {
        cfg.density_min = cfg.density_max = to_double(value);
      } else {
        cfg.density_min = to_double(detail::trim(value.substr(0, comma)));
        cfg.density_max = to_double(detail::trim(value.substr(comma + 1)));
      }
    } else if (key == "filter_weight") {
      cfg.filter_weight = static_cast<int>(to_u64(value));
    } else if (key == "trials") {
      cfg.trials = to_u64(value);
    } else if (key == "seed") {
      cfg.seed = to_u64(value);
    } else if (key == "engine") {
      if (value == "exact") {
        cfg.engine = DistanceEngine::kExact;
      } else if (value == "sampled") {
        cfg.engine = DistanceEngine::kSampled;
      } else {
        throw ParseError(line_no, "engine must be 'exact' or 'sampled'");
      }
    } else if (key == "samples") {
      cfg.samples = to_u64(value);
    } else if (key == "top_k") {
      cfg.top_k = to_u64(value);
    } else if (key == "checkpoint_interval") {
      cfg.checkpoint_interval = to_u64(value);
    } else if (key == "checkpoint") {
      cfg.checkpoint_path = value;
    } else if (key == "results") {
      cfg.results_path = value;
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(std::max<std::uint64_t>(1, to_u64(value)));
    } else if (key == "budget") {
      cfg.budget = to_u64(value);
    } else if (key == "exhaustive_limit") {
      cfg.exhaustive_limit = to_u64(value);
    } else if (key == "record_timestamps") {
      cfg.record_timestamps = to_bool(value);
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  if (!have_n) throw ParseError(line_no, "missing required key 'n'");
  try {
    check_config(cfg);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
  return cfg;
}

/// Canonical text of the settings that determine which specs are drawn and how
/// they are judged. Paths, threads and the trial count are excluded.
inline std::string config_fingerprint(const SearchConfig& cfg) {
  std::ostringstream o;
  o << "n=" << cfg.n << ";bordered=" << cfg.bordered << ";fact=";
  for (auto [m, l] : effective_factorizations(cfg)) o << '(' << m << ',' << l << ')';
  o << ";alpha=" << (cfg.alpha_policy == AlphaPolicy::kAllUnits ? "all" : "random") << ";density="
    << std::setprecision(17) << cfg.density_min << ',' << cfg.density_max << ";filter=" << cfg.filter_weight
    << ";seed=" << cfg.seed << ";engine=" << (cfg.engine == DistanceEngine::kExact ? "exact" : "sampled")
    << ";samples=" << cfg.samples << ";top_k=" << cfg.top_k;
  return o.str();
}

// ---- sampling -----------------------------------------------------------

/// SplitMix64 stream keyed by (seed, trial); bounded draws use rejection so
/// results do not depend on the standard library implementation.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial) : state_(splitmix64(seed ^ splitmix64(trial ^ 0x5eed5eed5eedULL))) {}

  std::uint64_t next() {
    state_ = splitmix64(state_);
    return state_;
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Draws a spec that satisfies every validity condition by construction: each
/// S_k is a union of whole orbits of the map that its condition requires it to
/// be closed under, each orbit kept with probability rho.
inline MetacirculantSpec sample_spec(const SearchConfig& cfg, std::uint64_t trial) {
  const auto facts = effective_factorizations(cfg);
  if (facts.empty()) throw std::invalid_argument("sample_spec: no factorizations");
  TrialRng rng(cfg.seed, trial);

  std::size_t fi = 0;
  int alpha = 1;
  if (cfg.alpha_policy == AlphaPolicy::kAllUnits) {
    // Round-robin over every (factorization, unit) pair.
    std::vector<std::pair<std::size_t, int>> pairs;
    for (std::size_t f = 0; f < facts.size(); ++f) {
      for (int u : units_mod(facts[f].second)) pairs.emplace_back(f, u);
    }
    const auto& p = pairs[trial % pairs.size()];
    fi = p.first;
    alpha = p.second;
  } else {
    fi = rng.below(facts.size());
    const auto units = units_mod(facts[fi].second);
    alpha = units[rng.below(units.size())];
  }
  const auto [m, ell] = facts[fi];
  const double rho = cfg.density_min + (cfg.density_max - cfg.density_min) * rng.unit();

  MetacirculantSpec spec;
  spec.m = m;
  spec.ell = ell;
  spec.alpha = alpha;
  const int h = m / 2;
  for (int k = 0; k <= h; ++k) {
    std::vector<ResidueSet> parts;
    if (k == 0) {
      parts = orbits(1, true, ell, true);
    } else if (m % 2 == 0 && k == h) {
      parts = orbits(pow_mod(alpha, h, ell), true, ell, false);
    } else {
      parts = orbits(pow_mod(alpha, m, ell), false, ell, false);
    }
    ResidueSet s;
    for (const auto& orbit : parts) {
      if (rng.unit() < rho) s.insert(s.end(), orbit.begin(), orbit.end());
    }
    std::sort(s.begin(), s.end());
    spec.s_sets.push_back(std::move(s));
  }
  return spec;
}

// ---- evaluation ---------------------------------------------------------

struct SearchRecord {
  MetacirculantSpec spec;
  WeightProfile d_result;
  std::uint64_t trial = 0;
  std::optional<std::string> timestamp;  // only with record_timestamps
};

struct Rejected {
  std::string reason;  // "filter", "exhaustive limit", "invalid spec"
};

using Evaluation = std::variant<SearchRecord, Rejected>;

/// Total order: exact before sampled, larger d, fewer weight-d words, then
/// lexicographic spec, then trial.
inline bool ranks_before(const SearchRecord& x, const SearchRecord& y) {
  const bool xe = x.d_result.kind == ProfileKind::kExact;
  const bool ye = y.d_result.kind == ProfileKind::kExact;
  if (xe != ye) return xe;
  const int dx = x.d_result.min_distance.value_or(0);
  const int dy = y.d_result.min_distance.value_or(0);
  if (dx != dy) return dx > dy;
  const auto ax = x.d_result.count(static_cast<std::size_t>(dx));
  const auto ay = y.d_result.count(static_cast<std::size_t>(dy));
  if (ax != ay) return ax < ay;
  if (auto c = x.spec <=> y.spec; c != 0) return c < 0;
  return x.trial < y.trial;
}

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream o;
  o << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return o.str();
}

/// `threads` is the worker count handed to the distance engine.
inline Evaluation evaluate(const MetacirculantSpec& spec, const SearchConfig& cfg, std::uint64_t trial = 0,
                           unsigned threads = 1) {
  if (!validate_spec(spec).ok()) return Rejected{"invalid spec"};
  SimpleGraph g = build_metacirculant(spec);
  if (cfg.bordered) g = border(g);
  const AdditiveCode code = graph_code(g);

  if (cfg.filter_weight > 0) {
    const auto screen = few_generator_screen(code, 3, cfg.filter_weight);
    if (screen.min_weight < cfg.filter_weight) return Rejected{"filter"};
  }

  SearchRecord rec;
  rec.spec = spec;
  rec.trial = trial;
  if (cfg.engine == DistanceEngine::kExact) {
    ExhaustiveOptions opt;
    opt.budget = cfg.budget;
    opt.threads = threads;
    opt.exhaustive_limit = cfg.exhaustive_limit;
    std::optional<WeightProfile> p;
    try {
      p = min_distance_at_least(code, cfg.filter_weight, opt);
    } catch (const InfeasibleEnumeration&) {
      return Rejected{"exhaustive limit"};
    }
    if (!p) return Rejected{"filter"};
    rec.d_result = std::move(*p);
  } else {
    SampleOptions opt;
    opt.samples = cfg.samples;
    opt.seed = splitmix64(cfg.seed ^ splitmix64(trial));
    opt.threads = threads;
    rec.d_result = min_weight_upper_bound(code, opt);
    if (rec.d_result.min_distance.value_or(0) < cfg.filter_weight) return Rejected{"filter"};
  }
  if (cfg.record_timestamps) rec.timestamp = utc_timestamp();
  return rec;
}

// ---- serialization ------------------------------------------------------

inline constexpr const char* kRecordSchema = "metacode.search-record/1";
inline constexpr const char* kCheckpointSchema = "metacode.checkpoint/1";

inline nlohmann::json record_to_json(const SearchRecord& r) {
  nlohmann::json j = {{"schema", kRecordSchema},
                      {"trial", r.trial},
                      {"spec", spec_to_json(r.spec)},
                      {"spec_text", format_spec_inline(r.spec)},
                      {"result", profile_to_json(r.d_result, false)}};
  if (r.timestamp) j["timestamp"] = *r.timestamp;
  return j;
}

inline SearchRecord record_from_json(const nlohmann::json& j) {
  SearchRecord r;
  r.trial = j.at("trial").get<std::uint64_t>();
  r.spec = spec_from_json(j.at("spec"));
  r.d_result = profile_from_json(j.at("result"));
  if (j.contains("timestamp")) r.timestamp = j["timestamp"].get<std::string>();
  return r;
}

/// One record per line, best first.
inline std::string format_results_jsonl(const std::vector<SearchRecord>& records) {
  std::string out;
  for (const auto& r : records) out += record_to_json(r).dump() + "\n";
  return out;
}

struct SearchStats {
  std::uint64_t evaluated = 0;  // records produced
  std::map<std::string, std::uint64_t> rejected;

  bool operator==(const SearchStats&) const = default;
};

struct Checkpoint {
  std::uint64_t seed = 0;
  std::uint64_t next_trial = 0;
  std::string fingerprint;
  SearchStats stats;
  std::vector<SearchRecord> records;
};

inline std::string format_checkpoint(const Checkpoint& c) {
  std::ostringstream o;
  o << "# metacode search checkpoint\n";
  o << "schema = " << kCheckpointSchema << "\n";
  o << "seed = " << c.seed << "\n";
  o << "next_trial = " << c.next_trial << "\n";
  o << "fingerprint = " << c.fingerprint << "\n";
  o << "evaluated = " << c.stats.evaluated << "\n";
  for (const auto& [reason, count] : c.stats.rejected) o << "rejected = " << nlohmann::json(reason).dump() << " " << count << "\n";
  for (const auto& r : c.records) o << "record = " << record_to_json(r).dump() << "\n";
  return o.str();
}

inline Checkpoint parse_checkpoint(std::string_view text) {
  Checkpoint c;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool schema_ok = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    try {
      if (key == "schema") {
        if (value != kCheckpointSchema) throw ParseError(line_no, "unsupported checkpoint schema '" + value + "'");
        schema_ok = true;
      } else if (key == "seed") {
        c.seed = std::stoull(value);
      } else if (key == "next_trial") {
        c.next_trial = std::stoull(value);
      } else if (key == "fingerprint") {
        c.fingerprint = value;
      } else if (key == "evaluated") {
        c.stats.evaluated = std::stoull(value);
      } else if (key == "rejected") {
        const auto close = value.rfind('"');
        if (close == std::string::npos) throw ParseError(line_no, "malformed rejected line");
        const auto reason = nlohmann::json::parse(value.substr(0, close + 1)).get<std::string>();
        c.stats.rejected[reason] = std::stoull(detail::trim(value.substr(close + 1)));
      } else if (key == "record") {
        c.records.push_back(record_from_json(nlohmann::json::parse(value)));
      } else {
        throw ParseError(line_no, "unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_no, std::string("bad value for '") + key + "': " + e.what());
    }
  }
  if (!schema_ok) throw ParseError(line_no, "checkpoint has no schema line");
  return c;
}

// ---- driver -------------------------------------------------------------

struct SearchResult {
  std::vector<SearchRecord> records;  // top-K, best first
  SearchStats stats;
  std::uint64_t next_trial = 0;
  std::optional<std::string> error;  // set when the run stopped early; records are still valid

  bool complete(const SearchConfig& cfg) const { return !error && next_trial >= cfg.trials; }
};

namespace detail {

inline void merge_top_k(std::vector<SearchRecord>& top, std::vector<SearchRecord> incoming, std::size_t k) {
  for (auto& r : incoming) top.push_back(std::move(r));
  std::sort(top.begin(), top.end(), ranks_before);
  if (top.size() > k) top.resize(k);
}

inline bool write_text_file(const std::string& path, const std::string& text, std::string& error) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      error = "cannot open '" + tmp + "' for writing";
      return false;
    }
    out << text;
    out.flush();
    if (!out) {
      error = "write to '" + tmp + "' failed";
      return false;
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    error = "cannot rename '" + tmp + "' to '" + path + "'";
    return false;
  }
  return true;
}

}  // namespace detail

struct RunOptions {
  std::optional<Checkpoint> resume;
  std::uint64_t stop_after = 0;  // stop once next_trial reaches this (0: run to the end); used to test resumption
};

/// Runs trials [start, cfg.trials) in chunks of checkpoint_interval. Trials in
/// a chunk run concurrently, each drawing its randomness from (seed, trial), so
/// the outcome does not depend on the thread count. A checkpoint is written
/// after every chunk when a path is configured; a write failure stops the run
/// and is reported in `error` with everything found so far.
inline SearchResult run_search(const SearchConfig& cfg, const RunOptions& run = {}) {
  check_config(cfg);
  SearchResult res;
  const std::string fingerprint = config_fingerprint(cfg);
  if (run.resume) {
    if (run.resume->seed != cfg.seed || run.resume->fingerprint != fingerprint) {
      throw std::invalid_argument("checkpoint was written by a different search configuration");
    }
    res.records = run.resume->records;
    std::sort(res.records.begin(), res.records.end(), ranks_before);
    res.stats = run.resume->stats;
    res.next_trial = run.resume->next_trial;
  }
  const std::uint64_t end = run.stop_after > 0 ? std::min(run.stop_after, cfg.trials) : cfg.trials;
  const unsigned workers = std::max(1u, cfg.threads);

  while (res.next_trial < end) {
    // Chunks are aligned to multiples of the interval so a resumed run
    // checkpoints at the same trial indices as an uninterrupted one.
    const std::uint64_t chunk_end =
        std::min(end, (res.next_trial / cfg.checkpoint_interval + 1) * cfg.checkpoint_interval);
    const std::uint64_t count = chunk_end - res.next_trial;
    std::vector<Evaluation> out(count);
    std::atomic<std::uint64_t> cursor{0};
    auto work = [&] {
      for (std::uint64_t i = cursor++; i < count; i = cursor++) {
        const std::uint64_t t = res.next_trial + i;
        out[i] = evaluate(sample_spec(cfg, t), cfg, t, 1);
      }
    };
    const unsigned nthreads = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
    if (nthreads <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < nthreads; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    std::vector<SearchRecord> found;
    for (auto& e : out) {
      if (auto* r = std::get_if<SearchRecord>(&e)) {
        ++res.stats.evaluated;
        found.push_back(std::move(*r));
      } else {
        ++res.stats.rejected[std::get<Rejected>(e).reason];
      }
    }
    detail::merge_top_k(res.records, std::move(found), cfg.top_k);
    res.next_trial = chunk_end;

    if (!cfg.checkpoint_path.empty()) {
      Checkpoint c{cfg.seed, res.next_trial, fingerprint, res.stats, res.records};
      std::string err;
      if (!detail::write_text_file(cfg.checkpoint_path, format_checkpoint(c), err)) {
        res.error = "checkpoint write failed: " + err;
        return res;
      }
    }
  }
  return res;
}

}  // namespace metacode

#endif  // METACODE_SEARCH_HPP
