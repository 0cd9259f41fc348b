// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submax/instance_io.hpp"
#include "submax/offline.hpp"
#include "submax/streaming.hpp"
#include "submax/validators.hpp"

namespace submax {

struct ExperimentConfig {
  std::vector<std::string> algorithms = {"sample-greedy"};
  std::optional<double> q;
  std::optional<double> c;
  std::string mode;  // "", "monotone", "general", "linear"
  std::uint64_t master_seed = 0;
  int trials = 1;
  int boost_r = 1;  // best-of-r repetitions per trial
  std::string expectation = "single";  // "single", "exact", "mc:N"
  std::optional<std::uint64_t> permute_seed;
  std::optional<std::string> stream_order_file;
  double epsilon = 0.0;
  std::optional<bool> lazy;
  // Brute-force OPT (and the ratio column) is computed when n is at most this.
  int opt_threshold = 14;
};

struct ResultRecord {
  std::string instance_id;
  std::string algorithm;
  Json config_echo;
  std::uint64_t seed = 0;
  int trial = 0;
  double value = 0.0;
  std::optional<double> std_error;  // Monte-Carlo expectation mode only
  std::optional<double> opt_value;
  std::optional<double> ratio_vs_opt;
  std::uint64_t value_queries = 0;
  std::uint64_t independence_queries = 0;
  int peak_stored_elements = 0;
  bool guarantees_void = false;
  double wall_ms = 0.0;

  Json to_json() const {
    Json j;
    j["instance"] = instance_id;
    j["algorithm"] = algorithm;
    j["config"] = config_echo;
    j["seed"] = seed;
    j["trial"] = trial;
    j["value"] = value;
    if (std_error) j["std_error"] = *std_error;
    if (opt_value) j["opt_value"] = *opt_value;
    if (ratio_vs_opt) j["ratio_vs_opt"] = *ratio_vs_opt;
    j["value_queries"] = value_queries;
    j["independence_queries"] = independence_queries;
    j["peak_stored_elements"] = peak_stored_elements;
    j["guarantees_void"] = guarantees_void;
    j["wall_ms"] = wall_ms;
    return j;
  }
};

namespace detail {

inline ObjectiveClass resolve_objective_class(const Instance& inst, const std::string& mode) {
  if (mode.empty()) return inst.objective_class;
  return objective_class_from_string(mode);
}

inline StreamingConfig::Mode resolve_stream_mode(const Instance& inst, const std::string& mode) {
  if (mode == "monotone") return StreamingConfig::Mode::Monotone;
  if (mode == "general") return StreamingConfig::Mode::General;
  if (mode == "linear" || mode.empty()) {
    ObjectiveClass cls = mode.empty() ? inst.objective_class : ObjectiveClass::Linear;
    if (cls == ObjectiveClass::SubmodularMonotone) return StreamingConfig::Mode::Monotone;
    if (cls == ObjectiveClass::Linear && inst.objective->claims_monotone())
      return StreamingConfig::Mode::Monotone;
  }
  return StreamingConfig::Mode::General;
}

inline Json config_echo(const ExperimentConfig& cfg, const std::string& algorithm, double q,
                        double c) {
  Json j;
  j["algorithm"] = algorithm;
  j["q"] = q;
  if (c > 0.0) j["c"] = c;
  j["mode"] = cfg.mode;
  j["epsilon"] = cfg.epsilon;
  j["trials"] = cfg.trials;
  j["boost_r"] = cfg.boost_r;
  j["expectation"] = cfg.expectation;
  if (cfg.permute_seed) j["permute_stream"] = *cfg.permute_seed;
  return j;
}

}  // namespace detail

// Executes one algorithm on one instance per the experiment configuration and
// emits one record per trial (or a single record in an expectation mode).
inline std::vector<ResultRecord> run_experiment(const Instance& inst,
                                                const ExperimentConfig& cfg,
                                                const std::string& algorithm) {
  int n = inst.size();
  bool offline = algorithm == "sample-greedy" || algorithm == "vanilla-greedy";
  bool streaming = algorithm == "sample-streaming";
  if (!offline && !streaming)
    throw std::invalid_argument("unknown algorithm: " + algorithm);

  const Matchoid* matchoid = nullptr;
  if (streaming) {
    matchoid = dynamic_cast<const Matchoid*>(inst.constraint.get());
    if (!matchoid)
      throw std::invalid_argument("sample-streaming requires a matchoid constraint");
  }

  OfflineConfig off;
  off.q = cfg.q;
  off.objective_class = detail::resolve_objective_class(inst, cfg.mode);
  off.epsilon = cfg.epsilon;
  off.lazy_evaluation = cfg.lazy;

  StreamingConfig str;
  str.q = cfg.q;
  str.c = cfg.c;
  str.mode = detail::resolve_stream_mode(inst, cfg.mode);
  str.epsilon = cfg.epsilon;

  StreamOrder order = StreamOrder::index_order(n);
  if (cfg.stream_order_file) order = load_permutation(*cfg.stream_order_file, n);
  else if (cfg.permute_seed) order = StreamOrder::permuted(n, *cfg.permute_seed);

  double q = 1.0;
  double c = 0.0;
  if (algorithm == "sample-greedy") q = off.resolved_q(inst.declared_p);
  if (streaming) {
    c = str.resolved_c(inst.declared_p);
    q = str.resolved_q(inst.declared_p);
  }

  std::optional<std::pair<ElementSet, double>> opt;
  if (n <= cfg.opt_threshold) opt = brute_force_opt(*inst.objective, *inst.constraint);

  auto fill_common = [&](ResultRecord& rec) {
    rec.instance_id = inst.id;
    rec.algorithm = algorithm;
    rec.config_echo = detail::config_echo(cfg, algorithm, q, c);
    if (opt) {
      rec.opt_value = opt->second;
      if (opt->second > 0.0) rec.ratio_vs_opt = rec.value / opt->second;
    }
  };

  auto run_once = [&](std::uint64_t seed) -> RunReport {
    if (algorithm == "sample-greedy") {
      OfflineConfig one = off;
      one.seed = seed;
      return sample_greedy_with_bits(*inst.objective, *inst.constraint,
                                     draw_sample_bits(n, q, seed), one);
    }
    if (algorithm == "vanilla-greedy")
      return vanilla_greedy(*inst.objective, *inst.constraint, off);
    StreamingConfig one = str;
    one.seed = seed;
    return sample_streaming_with_bits(*inst.objective, *matchoid, draw_sample_bits(n, q, seed),
                                      one, order);
  };

  std::vector<ResultRecord> records;

  if (cfg.expectation == "exact") {
    auto started = std::chrono::steady_clock::now();
    double expectation;
    if (offline) {
      OfflineConfig one = off;
      one.q = q;
      expectation = exact_expectation_sample_greedy(*inst.objective, *inst.constraint, one);
    } else {
      StreamingConfig one = str;
      one.q = q;
      expectation = exact_expectation_sample_streaming(*inst.objective, *matchoid, one, &order);
    }
    ResultRecord rec;
    rec.value = expectation;
    fill_common(rec);
    rec.seed = cfg.master_seed;
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            started).count();
    records.push_back(std::move(rec));
    return records;
  }

  if (cfg.expectation.rfind("mc:", 0) == 0) {
    int runs = std::stoi(cfg.expectation.substr(3));
    auto started = std::chrono::steady_clock::now();
    auto estimate = monte_carlo_expectation(n, q, cfg.master_seed, runs,
                                            [&](const SampleBits& bits) {
                                              if (offline) {
                                                OfflineConfig one = off;
                                                return sample_greedy_with_bits(
                                                           *inst.objective, *inst.constraint,
                                                           bits, one).value;
                                              }
                                              return sample_streaming_with_bits(
                                                         *inst.objective, *matchoid, bits, str,
                                                         order).value;
                                            });
    ResultRecord rec;
    rec.value = estimate.mean;
    rec.std_error = estimate.std_error;
    fill_common(rec);
    rec.seed = cfg.master_seed;
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            started).count();
    records.push_back(std::move(rec));
    return records;
  }

  if (cfg.expectation != "single")
    throw std::invalid_argument("unknown expectation mode: " + cfg.expectation);

  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto started = std::chrono::steady_clock::now();
    RunReport best;
    std::uint64_t value_queries = 0;
    std::uint64_t independence_queries = 0;
    std::uint64_t trial_seed = 0;
    for (int rep = 0; rep < std::max(1, cfg.boost_r); ++rep) {
      std::uint64_t seed = split_seed(
          cfg.master_seed,
          static_cast<std::uint64_t>(trial) * static_cast<std::uint64_t>(std::max(1, cfg.boost_r)) +
              static_cast<std::uint64_t>(rep));
      RunReport rep_report = run_once(seed);
      value_queries += rep_report.value_queries;
      independence_queries += rep_report.independence_queries;
      if (rep == 0 || rep_report.value > best.value) {
        best = std::move(rep_report);
        trial_seed = seed;
      }
    }
    ResultRecord rec;
    rec.value = best.value;
    fill_common(rec);
    rec.seed = trial_seed;
    rec.trial = trial;
    rec.value_queries = value_queries;
    rec.independence_queries = independence_queries;
    rec.peak_stored_elements = best.peak_stored_elements;
    rec.guarantees_void = best.guarantees_void;
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            started).count();
    records.push_back(std::move(rec));
  }
  return records;
}

inline std::vector<ResultRecord> run_experiment(const Instance& inst,
                                                const ExperimentConfig& cfg) {
  std::vector<ResultRecord> all;
  for (const std::string& algorithm : cfg.algorithms) {
    auto part = run_experiment(inst, cfg, algorithm);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

// ---- Algorithm comparison under shared seeds. The first algorithm in the
// ---- list serves as the baseline for the ratio columns.

struct ComparisonRow {
  std::string algorithm;
  double value = 0.0;
  double value_ratio = 1.0;
  std::uint64_t value_queries = 0;
  double value_query_ratio = 1.0;
  std::uint64_t independence_queries = 0;
  double independence_query_ratio = 1.0;
  int peak_stored_elements = 0;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;

  std::string to_csv() const {
    std::ostringstream out;
    out << "algorithm,value,value_ratio,value_queries,value_query_ratio,"
           "independence_queries,independence_query_ratio,peak_stored_elements\n";
    for (const auto& r : rows) {
      out << r.algorithm << ',' << r.value << ',' << r.value_ratio << ',' << r.value_queries
          << ',' << r.value_query_ratio << ',' << r.independence_queries << ','
          << r.independence_query_ratio << ',' << r.peak_stored_elements << '\n';
    }
    return out.str();
  }

  Json to_json() const {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["algorithm"] = r.algorithm;
      j["value"] = r.value;
      j["value_ratio"] = r.value_ratio;
      j["value_queries"] = r.value_queries;
      j["value_query_ratio"] = r.value_query_ratio;
      j["independence_queries"] = r.independence_queries;
      j["independence_query_ratio"] = r.independence_query_ratio;
      j["peak_stored_elements"] = r.peak_stored_elements;
      arr.push_back(std::move(j));
    }
    return arr;
  }
};

inline ComparisonTable compare(const std::vector<std::string>& algorithms, const Instance& inst,
                               ExperimentConfig cfg) {
  if (algorithms.empty()) throw std::invalid_argument("compare: no algorithms given");
  cfg.expectation = "single";
  ComparisonTable table;
  for (const std::string& algorithm : algorithms) {
    auto records = run_experiment(inst, cfg, algorithm);
    double value = 0.0;
    std::uint64_t vq = 0, iq = 0;
    int peak = 0;
    for (const auto& rec : records) {
      value = std::max(value, rec.value);
      vq += rec.value_queries;
      iq += rec.independence_queries;
      peak = std::max(peak, rec.peak_stored_elements);
    }
    ComparisonRow row;
    row.algorithm = algorithm;
    row.value = value;
    row.value_queries = vq;
    row.independence_queries = iq;
    row.peak_stored_elements = peak;
    table.rows.push_back(row);
  }
  const ComparisonRow& base = table.rows.front();
  for (auto& row : table.rows) {
    row.value_ratio = base.value != 0.0 ? row.value / base.value : 1.0;
    row.value_query_ratio =
        base.value_queries != 0 ? static_cast<double>(row.value_queries) / base.value_queries : 1.0;
    row.independence_query_ratio =
        base.independence_queries != 0
            ? static_cast<double>(row.independence_queries) / base.independence_queries
            : 1.0;
  }
  return table;
}

// ---- Invariant audit suite. Each check is deterministic; failures carry a
// ---- machine-readable artifact (instance id, seed, coin mask).

struct AuditCheck {
  std::string name;
  bool pass = true;
  std::string detail;
  Json artifact;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string summary() const {
    std::ostringstream out;
    for (const auto& c : checks)
      out << (c.pass ? "[pass] " : "[FAIL] ") << c.name
          << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    return out.str();
  }
};

namespace detail {

inline void record(AuditReport& report, const std::string& name, bool pass,
                   const std::string& detail = "", Json artifact = Json::object()) {
  report.checks.push_back({name, pass, pass ? "" : detail, std::move(artifact)});
}

inline Json failure_artifact(const std::string& instance_id, std::uint64_t seed,
                             std::uint64_t bits_mask = 0) {
  Json j;
  j["instance"] = instance_id;
  j["seed"] = seed;
  j["bits_mask"] = bits_mask;
  return j;
}

// Small deterministic corpus reused by the module audits.
inline std::vector<Instance> audit_corpus() {
  std::vector<Instance> corpus;
  corpus.push_back(generate_instance("coverage+uniform", 7, 11));
  corpus.push_back(generate_instance("cut+genre-limits", 7, 12));
  corpus.push_back(generate_instance("modular+knapsack", 7, 13));
  corpus.push_back(generate_instance("logdet+matchoid", 6, 14));
  return corpus;
}

inline void audit_core(AuditReport& report) {
  {
    SampleBits a = draw_sample_bits(64, 0.5, 7);
    SampleBits b = draw_sample_bits(64, 0.5, 7);
    record(report, "core/sample-bits-deterministic", a.bits == b.bits);
    record(report, "core/sample-bits-q1-all-ones", draw_sample_bits(32, 1.0, 9).ones() == 32);
    SampleBits wide = draw_sample_bits(10000, 0.25, 123);
    double mean = static_cast<double>(wide.ones()) / 10000.0;
    double sigma = std::sqrt(0.25 * 0.75 / 10000.0);
    record(report, "core/sample-bits-concentration", std::abs(mean - 0.25) <= 3.0 * sigma,
           "mean " + std::to_string(mean));
  }
  {
    ModularFunction f({1.0, 2.0, 3.0, 4.0});
    ValueOracle oracle(f);
    ElementSet s{0, 2};
    for (int i = 0; i < 5; ++i) oracle.marginal(1, s);
    record(report, "core/query-accounting-two-per-marginal", oracle.query_count() == 10);
  }
  for (const Instance& inst : audit_corpus()) {
    if (inst.size() > 8) continue;
    auto sub = validate_submodular(*inst.objective);
    record(report, "core/submodular:" + inst.id, sub.ok, sub.detail,
           failure_artifact(inst.id, 0));
    auto prefix = validate_arrival_prefix_monotone(*inst.objective);
    record(report, "core/arrival-prefix-monotone:" + inst.id, prefix.ok, prefix.detail,
           failure_artifact(inst.id, 0));
  }
}

inline void audit_constraints(AuditReport& report) {
  {
    UniformMatroid uniform(8, 3);
    auto v = validate_matroid(uniform);
    record(report, "constraints/uniform-axioms", v.ok, v.detail);
    record(report, "constraints/uniform-extendibility-1", measure_extendibility(uniform) == 1);
  }
  {
    PartitionMatroid part(8, {{0, 1, 2}, {3, 4}, {5, 6, 7}}, {1, 1, 2});
    auto v = validate_matroid(part);
    record(report, "constraints/partition-axioms", v.ok, v.detail);
    record(report, "constraints/partition-extendibility-1", measure_extendibility(part) == 1);
  }
  {
    GraphicMatroid graphic(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto v = validate_matroid(graphic);
    record(report, "constraints/graphic-axioms", v.ok, v.detail);
    record(report, "constraints/graphic-extendibility-1", measure_extendibility(graphic) == 1);
  }
  for (const Instance& inst : audit_corpus()) {
    if (inst.size() > 10) continue;
    auto down = validate_downward_closed(*inst.constraint);
    record(report, "constraints/downward-closed:" + inst.id, down.ok, down.detail,
           failure_artifact(inst.id, 0));
    int measured = measure_extendibility(*inst.constraint);
    record(report, "constraints/extendibility-within-declared:" + inst.id,
           measured <= inst.declared_p,
           "measured " + std::to_string(measured) + " declared " + std::to_string(inst.declared_p),
           failure_artifact(inst.id, 0));
  }
  {
    bool rejected = false;
    try {
      PartitionMatroid corrupted(4, {{0, 1}, {1, 2, 3}}, {1, 1});
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    record(report, "constraints/overlapping-blocks-rejected", rejected);
  }
  {
    Rng rng(31);
    auto matchoid = random_matchoid(8, 2, rng);
    ElementSet s;
    for (int u = 0; u < 8 && s.size() < 3; ++u)
      if (matchoid->independent(s.with(u))) s.insert(u);
    bool ok = true;
    for (int u = 0; u < 8; ++u) {
      if (s.contains(u)) continue;
      ok = ok && static_cast<int>(matchoid_violated_members(*matchoid, s, u).size()) <=
                     matchoid->extendibility();
    }
    record(report, "constraints/violated-members-at-most-p", ok);
  }
}

inline void audit_objectives(AuditReport& report) {
  for (const Instance& inst : audit_corpus()) {
    if (inst.size() > 8) continue;
    if (inst.objective->claims_nonnegative()) {
      auto nn = validate_nonnegative(*inst.objective);
      record(report, "objectives/nonnegative:" + inst.id, nn.ok, nn.detail);
    }
    if (inst.objective->claims_monotone()) {
      auto mono = validate_monotone(*inst.objective);
      record(report, "objectives/monotone:" + inst.id, mono.ok, mono.detail);
    }
  }
  {
    Rng rng(77);
    auto cut = random_cut(6, rng, 0.0);
    std::vector<double> weights;
    for (int i = 0; i < 6; ++i) {
      double row = 0.0;
      for (int j = 0; j < 6; ++j) row += cut->similarity()(i, j);
      weights.push_back(row);
    }
    ModularFunction modular(weights);
    bool same = true;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      ElementSet s = ElementSet::from_mask(mask);
      same = same && cut->value(s) == modular.value(s);
    }
    record(report, "objectives/cut-lambda0-is-modular", same);
  }
  {
    Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(3, 3);
    LogDetDPP dpp(eye, 1.0);
    record(report, "objectives/logdet-empty-zero", dpp.value(ElementSet{}) == 0.0);
  }
}

inline void audit_offline(AuditReport& report) {
  for (const Instance& inst : audit_corpus()) {
    if (inst.size() > 8) continue;
    int n = inst.size();
    auto opt = brute_force_opt(*inst.objective, *inst.constraint);
    OfflineConfig cfg;
    cfg.objective_class = inst.objective_class;
    bool sequences_match = true;
    bool structure_ok = true;
    std::uint64_t bad_mask = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      SampleBits bits = SampleBits::from_mask(n, mask, 0.5);
      RunReport direct = sample_greedy_with_bits(*inst.objective, *inst.constraint, bits, cfg);
      EquivalentGreedyRun twin = equivalent_sample_greedy_with_bits(
          *inst.objective, *inst.constraint, bits, cfg, opt.first);
      if (direct.selection_sequence != twin.report.selection_sequence) {
        sequences_match = false;
        bad_mask = mask;
        break;
      }
      ElementSet final_tracker = twin.trace.records.empty()
                                     ? opt.first
                                     : twin.trace.records.back().tracker_after;
      for (const auto& rec : twin.trace.records)
        if (!inst.constraint->independent(rec.tracker_after)) structure_ok = false;
      if (!twin.report.solution.is_subset_of(final_tracker)) structure_ok = false;
      if (!structure_ok) {
        bad_mask = mask;
        break;
      }
    }
    record(report, "offline/pathwise-equivalence:" + inst.id, sequences_match, "",
           failure_artifact(inst.id, 0, bad_mask));
    record(report, "offline/tracker-structure:" + inst.id, structure_ok, "",
           failure_artifact(inst.id, 0, bad_mask));
  }
}

inline void audit_streaming(AuditReport& report) {
  for (const Instance& inst : audit_corpus()) {
    auto matchoid = std::dynamic_pointer_cast<const Matchoid>(inst.constraint);
    if (!matchoid || inst.size() > 8) continue;
    int n = inst.size();
    StreamingConfig cfg;
    cfg.mode = inst.objective_class == ObjectiveClass::SubmodularMonotone
                   ? StreamingConfig::Mode::Monotone
                   : StreamingConfig::Mode::General;
    StreamOrder order = StreamOrder::index_order(n);
    double q = cfg.resolved_q(matchoid->extendibility());
    double c = cfg.resolved_c(matchoid->extendibility());
    bool prefixes_match = true;
    bool audits_ok = true;
    std::uint64_t bad_mask = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      SampleBits bits = SampleBits::from_mask(n, mask, q);
      std::vector<ElementSet> prefixes;
      sample_streaming_with_bits(*inst.objective, *matchoid, bits, cfg, order, &prefixes);
      auto [rep, state] =
          equivalent_sample_streaming_with_bits(*inst.objective, *matchoid, bits, cfg, order);
      if (prefixes != state.prefix_solutions) {
        prefixes_match = false;
        bad_mask = mask;
        break;
      }
      auto audit = streaming_invariant_audit(state, *inst.objective, *matchoid, c, order);
      if (!audit.ok()) {
        audits_ok = false;
        bad_mask = mask;
        break;
      }
    }
    record(report, "streaming/pathwise-equivalence:" + inst.id, prefixes_match, "",
           failure_artifact(inst.id, 0, bad_mask));
    record(report, "streaming/per-run-audits:" + inst.id, audits_ok, "",
           failure_artifact(inst.id, 0, bad_mask));
  }
}

}  // namespace detail

// Runs the selected module suites. scope: comma-separated subset of
// {core, constraints, objectives, offline, streaming} or "all"; an empty
// scope selects nothing and passes vacuously.
inline AuditReport audit_suite(const std::string& scope) {
  AuditReport report;
  std::set<std::string> want;
  std::stringstream ss(scope);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) want.insert(token);
  }
  bool all = want.count("all") > 0;
  if (all || want.count("core")) detail::audit_core(report);
  if (all || want.count("constraints")) detail::audit_constraints(report);
  if (all || want.count("objectives")) detail::audit_objectives(report);
  if (all || want.count("offline")) detail::audit_offline(report);
  if (all || want.count("streaming")) detail::audit_streaming(report);
  return report;
}

}  // namespace submax
