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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "submax/submax.hpp"

namespace {

// "kind:key=value,key=value" — the generated-instance descriptor.
submax::Instance parse_generate(const std::string& descriptor, std::uint64_t seed) {
  std::string kind = descriptor;
  submax::GeneratorParams params;
  auto colon = descriptor.find(':');
  if (colon != std::string::npos) {
    kind = descriptor.substr(0, colon);
    std::stringstream ss(descriptor.substr(colon + 1));
    std::string pair;
    while (std::getline(ss, pair, ',')) {
      auto eq = pair.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--generate: expected key=value, got '" + pair + "'");
      params[pair.substr(0, eq)] = std::stod(pair.substr(eq + 1));
    }
  }
  int n = static_cast<int>(params.count("n") ? params.at("n") : 20);
  params.erase("n");
  std::uint64_t inst_seed = params.count("seed")
                                ? static_cast<std::uint64_t>(params.at("seed"))
                                : seed;
  params.erase("seed");
  return submax::generate_instance(kind, n, inst_seed, params);
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ','))
    if (!token.empty()) out.push_back(token);
  return out;
}

void write_trace(const submax::Instance& inst, const submax::ExperimentConfig& cfg,
                 const std::string& algorithm, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open trace file: " + path);
  int n = inst.size();
  if (algorithm == "sample-streaming") {
    auto matchoid = std::dynamic_pointer_cast<const submax::Matchoid>(inst.constraint);
    if (!matchoid) throw std::invalid_argument("sample-streaming requires a matchoid constraint");
    submax::StreamingConfig str;
    str.q = cfg.q;
    str.c = cfg.c;
    str.mode = submax::detail::resolve_stream_mode(inst, cfg.mode);
    str.epsilon = cfg.epsilon;
    str.seed = cfg.master_seed;
    submax::StreamOrder order = submax::StreamOrder::index_order(n);
    if (cfg.permute_seed) order = submax::StreamOrder::permuted(n, *cfg.permute_seed);
    auto [report, state] = submax::equivalent_sample_streaming(
        *inst.objective, *matchoid, str, cfg.permute_seed ? &order : nullptr);
    for (const auto& event : state.events) {
      submax::Json line;
      line["position"] = event.position;
      line["element"] = event.element;
      line["bit"] = event.bit;
      line["marginal"] = event.marginal;
      line["exchange_value"] = event.exchange_value;
      line["evictees"] = submax::detail::element_set_to_json(event.exchange.evictees);
      line["accepted"] = event.accepted;
      out << line.dump() << '\n';
    }
    return;
  }
  submax::OfflineConfig off;
  off.q = cfg.q;
  off.objective_class = submax::detail::resolve_objective_class(inst, cfg.mode);
  off.epsilon = cfg.epsilon;
  off.seed = cfg.master_seed;
  if (algorithm == "vanilla-greedy") off.q = 1.0;
  std::optional<submax::ElementSet> opt;
  if (n <= cfg.opt_threshold)
    opt = submax::brute_force_opt(*inst.objective, *inst.constraint).first;
  auto run = submax::equivalent_sample_greedy(*inst.objective, *inst.constraint, off, opt);
  if (run.trace.instrumented) {
    for (const auto& rec : run.trace.records) {
      submax::Json line;
      line["element"] = rec.element;
      line["bit"] = rec.bit;
      line["marginal"] = rec.marginal;
      line["gain"] = rec.gain;
      line["solution_before"] = submax::detail::element_set_to_json(rec.solution_before);
      line["removed_from_tracker"] = submax::detail::element_set_to_json(rec.removed);
      out << line.dump() << '\n';
    }
  } else {
    // No brute-force OPT at this size: log the selection order only.
    int iteration = 0;
    for (submax::Element u : run.report.selection_sequence) {
      submax::Json line;
      line["iteration"] = iteration++;
      line["element"] = u;
      line["accepted"] = true;
      out << line.dump() << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subsampled greedy and streaming maximization of submodular functions"};

  std::string instance_path, generate_desc, algorithm = "sample-greedy";
  std::string mode, expectation = "single", out_path, trace_path, audit_scope, stream_file;
  std::optional<double> q, c;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> permute_seed;
  int trials = 1, boost = 1;
  bool lazy = false, no_lazy = false;

  app.add_option("--instance", instance_path, "Instance JSON file");
  app.add_option("--generate", generate_desc,
                 "Synthetic instance descriptor kind:key=value,... (kinds: coverage+uniform, "
                 "cut+genre-limits, logdet+matchoid, modular+knapsack)");
  app.add_option("--algorithm", algorithm,
                 "sample-greedy | vanilla-greedy | sample-streaming, or a comma list to compare");
  app.add_option("--q", q, "Sampling probability override");
  app.add_option("--c", c, "Streaming acceptance parameter override");
  app.add_option("--mode", mode, "monotone | general | linear (default: derived from objective)");
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--trials", trials, "Number of trials");
  app.add_option("--boost", boost, "Best-of-r repetitions per trial");
  app.add_option("--expectation", expectation, "single | mc:N | exact");
  app.add_option("--permute-stream", permute_seed, "Replay the stream under a seeded permutation");
  app.add_option("--stream-file", stream_file, "Stream order file, one element index per line");
  app.add_option("--epsilon", epsilon, "Comparison tolerance (default 0: exact float compare)");
  app.add_flag("--lazy", lazy, "Enable lazy evaluation for greedy scans");
  app.add_flag("--no-lazy", no_lazy, "Disable lazy evaluation (overrides the vanilla default)");
  app.add_option("--trace", trace_path, "Write a per-iteration event log (JSON lines)");
  app.add_option("--out", out_path, "Write result records (JSON lines) here instead of stdout");
  app.add_option("--audit", audit_scope,
                 "Run the invariant audit suite over the given scope "
                 "(comma list of core,constraints,objectives,offline,streaming or 'all')");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.count("--audit")) {
      submax::AuditReport report = submax::audit_suite(audit_scope);
      std::cout << report.summary();
      std::cout << (report.all_pass() ? "AUDIT PASS" : "AUDIT FAIL") << " ("
                << report.checks.size() << " checks)\n";
      return report.all_pass() ? 0 : 1;
    }

    if (instance_path.empty() == generate_desc.empty()) {
      std::cerr << "error: exactly one of --instance or --generate is required\n";
      return 2;
    }

    submax::Instance inst = instance_path.empty() ? parse_generate(generate_desc, seed)
                                                  : submax::load_instance(instance_path);

    submax::ExperimentConfig cfg;
    cfg.algorithms = split_list(algorithm);
    cfg.q = q;
    cfg.c = c;
    cfg.mode = mode;
    cfg.master_seed = seed;
    cfg.trials = trials;
    cfg.boost_r = boost;
    cfg.expectation = expectation;
    cfg.permute_seed = permute_seed;
    if (!stream_file.empty()) cfg.stream_order_file = stream_file;
    cfg.epsilon = epsilon;
    if (lazy) cfg.lazy = true;
    if (no_lazy) cfg.lazy = false;

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw std::runtime_error("cannot open output file: " + out_path);
      out = &file;
    }

    if (cfg.algorithms.size() > 1) {
      submax::ComparisonTable table = submax::compare(cfg.algorithms, inst, cfg);
      *out << table.to_json().dump() << '\n';
      std::cerr << table.to_csv();
    } else {
      for (const auto& rec : submax::run_experiment(inst, cfg))
        *out << rec.to_json().dump() << '\n';
    }

    if (!trace_path.empty()) write_trace(inst, cfg, cfg.algorithms.front(), trace_path);
    return 0;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
