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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/element_set.hpp"
#include "submax/expectation.hpp"
#include "submax/oracles.hpp"
#include "submax/random.hpp"
#include "submax/run_report.hpp"

namespace submax {

struct StreamingConfig {
  enum class Mode { Monotone, General };

  std::optional<double> c;  // default: 1 (monotone mode), sqrt(1 + 1/p) (general mode)
  std::optional<double> q;  // default: 1 / ((1+c) p + 1)
  Mode mode = Mode::General;
  double epsilon = 0.0;
  std::uint64_t seed = 0;

  double resolved_c(int p) const {
    if (c) {
      if (!(*c > 0.0)) throw std::invalid_argument("StreamingConfig: c must be > 0");
      return *c;
    }
    if (p < 1) throw std::invalid_argument("StreamingConfig: matchoid parameter must be >= 1");
    return mode == Mode::Monotone ? 1.0 : std::sqrt(1.0 + 1.0 / p);
  }

  double resolved_q(int p) const {
    if (q) {
      if (!(*q > 0.0) || *q > 1.0)
        throw std::invalid_argument("StreamingConfig: q must lie in (0, 1]");
      return *q;
    }
    if (p < 1) throw std::invalid_argument("StreamingConfig: matchoid parameter must be >= 1");
    return 1.0 / ((1.0 + resolved_c(p)) * p + 1.0);
  }
};

// Evictees proposed for an arriving element: per violated member matroid, the
// candidate set X_ℓ and the chosen минimizer x_ℓ. Kept for tests and audits.
struct ExchangeResult {
  ElementSet evictees;  // U
  struct MemberExchange {
    int member = -1;
    ElementSet candidates;  // X_ℓ
    Element chosen = -1;    // x_ℓ
  };
  std::vector<MemberExchange> member_exchanges;
};

// For each member matroid that rejects S + u, the cheapest element of S (by
// arrival marginal, earliest index on ties) whose removal restores that
// member. Queries every member individually, never short-circuiting; each
// member-matroid probe is charged to the independence oracle.
inline ExchangeResult exchange_candidate(ValueOracle& f, const Matchoid& matchoid,
                                         IndependenceOracle& ind, const ElementSet& solution,
                                         Element u, const StreamOrder& order) {
  ExchangeResult result;
  ElementSet grown = solution.with(u);
  for (int ell = 0; ell < matchoid.member_count(); ++ell) {
    ind.charge(1);
    if (matchoid.member_independent(ell, grown)) continue;
    ExchangeResult::MemberExchange exchange;
    exchange.member = ell;
    for (Element x : solution) {
      ind.charge(1);
      if (matchoid.member_independent(ell, solution.without(x).with(u)))
        exchange.candidates.insert(x);
    }
    if (exchange.candidates.empty())
      throw std::logic_error("exchange_candidate: violated member with no exchange candidate");
    double best_value = 0.0;
    for (Element x : exchange.candidates) {
      double v = arrival_marginal(f, x, solution, order);
      if (exchange.chosen < 0 || v < best_value) {
        exchange.chosen = x;
        best_value = v;
      }
    }
    result.evictees.insert(exchange.chosen);
    result.member_exchanges.push_back(std::move(exchange));
  }
  return result;
}

inline ExchangeResult exchange_candidate(const SetFunction& f, const Matchoid& matchoid,
                                         const ElementSet& solution, Element u) {
  ValueOracle value(f);
  IndependenceOracle ind(matchoid);
  return exchange_candidate(value, matchoid, ind, solution, u,
                            StreamOrder::index_order(matchoid.ground_size()));
}

// One processed element of the instrumented stream.
struct StreamEvent {
  Element element = -1;
  int position = 0;  // arrival position, 0-based
  ElementSet solution_before;
  ExchangeResult exchange;
  double marginal = 0.0;        // f(u | S)
  double exchange_value = 0.0;  // f(U : S)
  bool threshold_passed = false;
  bool bit = false;
  bool accepted = false;
};

// State carried by the instrumented streaming run.
struct StreamState {
  ElementSet solution;             // S_n
  ElementSet union_of_solutions;   // A = union of all S_i
  ElementSet rejected_by_coin;     // R
  // d(i) per element, 1-based arrival positions: the position whose arrival
  // evicted the element; own position if never added; n+1 if never evicted.
  std::vector<int> removal_position;
  std::vector<ElementSet> prefix_solutions;  // S_0 .. S_n
  std::vector<StreamEvent> events;           // one per element that reached the exchange
  int peak_stored_elements = 0;
};

namespace detail {

struct StreamCounters {
  ValueOracle value;
  IndependenceOracle ind;
  std::uint64_t member_queries_before = 0;
};

inline RunReport finish_stream_report(std::string name, ValueOracle& value,
                                      IndependenceOracle& ind, const ElementSet& solution,
                                      const std::vector<Element>& sequence, int peak,
                                      const SampleBits& bits, double c, bool nonneg) {
  RunReport report;
  report.algorithm = std::move(name);
  report.solution = solution;
  report.selection_sequence = sequence;
  report.value = value.evaluate(solution);
  report.final_reevaluation_queries = 1;
  report.value_queries = value.query_count();
  report.independence_queries = ind.query_count();
  report.peak_stored_elements = peak;
  report.guarantees_void = !nonneg;
  report.seed = bits.seed;
  report.q = bits.q;
  report.c = c;
  return report;
}

}  // namespace detail

// Streaming with subsampling: flip the element's coin first (skipping costs
// zero oracle queries), then exchange and accept when the arriving marginal
// beats (1 + c) times the evictees' arrival value.
inline RunReport sample_streaming_with_bits(const SetFunction& f, const Matchoid& matchoid,
                                            const SampleBits& bits, const StreamingConfig& cfg,
                                            const StreamOrder& order,
                                            std::vector<ElementSet>* prefixes = nullptr) {
  int n = matchoid.ground_size();
  if (f.ground_size() != n)
    throw std::invalid_argument("sample_streaming: objective/constraint ground size mismatch");
  if (bits.size() != n || order.size() != n)
    throw std::invalid_argument("sample_streaming: bits/order size mismatch");
  double c = cfg.resolved_c(matchoid.extendibility());
  Tolerance tol{cfg.epsilon};

  ValueOracle value(f);
  IndependenceOracle ind(matchoid);
  ElementSet solution;
  std::vector<Element> sequence;
  int peak = 0;
  if (prefixes) {
    prefixes->clear();
    prefixes->push_back(solution);
  }

  for (int pos = 0; pos < n; ++pos) {
    Element u = order.sequence[static_cast<std::size_t>(pos)];
    if (bits[u]) {
      peak = std::max(peak, solution.size() + 1);
      ExchangeResult exchange = exchange_candidate(value, matchoid, ind, solution, u, order);
      double marginal = value.marginal(u, solution);
      double exchange_value = arrival_marginal_sum(value, exchange.evictees, solution, order);
      if (tol.at_least(marginal, (1.0 + c) * exchange_value)) {
        solution = solution.set_minus(exchange.evictees).with(u);
        sequence.push_back(u);
      }
    }
    if (prefixes) prefixes->push_back(solution);
  }
  peak = std::max(peak, solution.size());

  return detail::finish_stream_report("sample-streaming", value, ind, solution, sequence, peak,
                                      bits, c, f.claims_nonnegative());
}

inline RunReport sample_streaming(const SetFunction& f, const Matchoid& matchoid,
                                  const StreamingConfig& cfg,
                                  const StreamOrder* order = nullptr) {
  int n = matchoid.ground_size();
  double q = cfg.resolved_q(matchoid.extendibility());
  SampleBits bits = draw_sample_bits(n, q, cfg.seed);
  StreamOrder default_order = order ? StreamOrder{} : StreamOrder::index_order(n);
  return sample_streaming_with_bits(f, matchoid, bits, cfg, order ? *order : default_order);
}

// Instrumented variant: the exchange and threshold run before the coin, and
// elements that pass the threshold but lose the coin are recorded in R. With
// the same coins the solutions match sample_streaming prefix by prefix.
inline std::pair<RunReport, StreamState> equivalent_sample_streaming_with_bits(
    const SetFunction& f, const Matchoid& matchoid, const SampleBits& bits,
    const StreamingConfig& cfg, const StreamOrder& order) {
  int n = matchoid.ground_size();
  if (f.ground_size() != n)
    throw std::invalid_argument("equivalent_sample_streaming: ground size mismatch");
  if (bits.size() != n || order.size() != n)
    throw std::invalid_argument("equivalent_sample_streaming: bits/order size mismatch");
  double c = cfg.resolved_c(matchoid.extendibility());
  Tolerance tol{cfg.epsilon};

  ValueOracle value(f);
  IndependenceOracle ind(matchoid);
  StreamState state;
  state.removal_position.assign(static_cast<std::size_t>(n), 0);
  state.prefix_solutions.push_back(state.solution);
  std::vector<Element> sequence;

  for (int pos = 0; pos < n; ++pos) {
    Element u = order.sequence[static_cast<std::size_t>(pos)];
    int pos1 = pos + 1;
    state.removal_position[static_cast<std::size_t>(u)] = pos1;  // refined below when added
    state.peak_stored_elements = std::max(state.peak_stored_elements, state.solution.size() + 1);

    StreamEvent event;
    event.element = u;
    event.position = pos;
    event.solution_before = state.solution;
    event.exchange = exchange_candidate(value, matchoid, ind, state.solution, u, order);
    event.marginal = value.marginal(u, state.solution);
    event.exchange_value = arrival_marginal_sum(value, event.exchange.evictees, state.solution, order);
    event.threshold_passed = tol.at_least(event.marginal, (1.0 + c) * event.exchange_value);
    event.bit = bits[u];
    if (event.threshold_passed) {
      if (bits[u]) {
        event.accepted = true;
        for (Element evicted : event.exchange.evictees)
          state.removal_position[static_cast<std::size_t>(evicted)] = pos1;
        state.solution = state.solution.set_minus(event.exchange.evictees).with(u);
        state.union_of_solutions.insert(u);
        state.removal_position[static_cast<std::size_t>(u)] = n + 1;  // until evicted
        sequence.push_back(u);
      } else {
        state.rejected_by_coin.insert(u);
      }
    }
    state.events.push_back(std::move(event));
    state.prefix_solutions.push_back(state.solution);
  }
  state.peak_stored_elements = std::max(state.peak_stored_elements, state.solution.size());

  RunReport report = detail::finish_stream_report("equivalent-sample-streaming", value, ind,
                                                  state.solution, sequence,
                                                  state.peak_stored_elements, bits, c,
                                                  f.claims_nonnegative());
  return {std::move(report), std::move(state)};
}

inline std::pair<RunReport, StreamState> equivalent_sample_streaming(
    const SetFunction& f, const Matchoid& matchoid, const StreamingConfig& cfg,
    const StreamOrder* order = nullptr) {
  int n = matchoid.ground_size();
  double q = cfg.resolved_q(matchoid.extendibility());
  SampleBits bits = draw_sample_bits(n, q, cfg.seed);
  StreamOrder default_order = order ? StreamOrder{} : StreamOrder::index_order(n);
  return equivalent_sample_streaming_with_bits(f, matchoid, bits, cfg,
                                               order ? *order : default_order);
}

// Post-run audit of a completed instrumented stream. The two value bounds
// hold for non-negative submodular objectives; for objectives that do not
// claim non-negativity the value checks are skipped and the audit is stamped
// "guarantees void". Structural checks (independence of every prefix,
// exchange soundness) run either way.
struct StreamingAudit {
  bool applicable = true;  // false: objective does not claim non-negativity
  bool evictee_marginal_bound_ok = true;  // f(A\S_n : S_n) <= f(S_n)/c + tol
  bool union_value_bound_ok = true;       // f(A) <= (c+1)/c f(S_n) + tol
  bool arrival_observation_ok = true;     // f(B | A\B) <= f(B : A) for B = A\S_n
  bool prefixes_independent_ok = true;
  bool exchanges_sound_ok = true;
  double evictee_marginal_sum = 0.0;
  double solution_value = 0.0;
  double union_value = 0.0;
  std::string detail;

  bool ok() const {
    return evictee_marginal_bound_ok && union_value_bound_ok && arrival_observation_ok &&
           prefixes_independent_ok && exchanges_sound_ok;
  }
};

inline StreamingAudit streaming_invariant_audit(const StreamState& state, const SetFunction& f,
                                                const Matchoid& matchoid, double c,
                                                const StreamOrder& order,
                                                double tolerance = 1e-9) {
  StreamingAudit audit;
  ValueOracle value(f);

  for (const ElementSet& prefix : state.prefix_solutions)
    if (!matchoid.independent(prefix)) {
      audit.prefixes_independent_ok = false;
      audit.detail += "dependent prefix solution " + prefix.to_string() + "; ";
    }
  int p = matchoid.extendibility();
  for (const StreamEvent& event : state.events) {
    if (event.exchange.evictees.size() > p) {
      audit.exchanges_sound_ok = false;
      audit.detail += "exchange for element " + std::to_string(event.element) +
                      " evicts more than p elements; ";
    }
    ElementSet swapped = event.solution_before.set_minus(event.exchange.evictees)
                             .with(event.element);
    if (!matchoid.independent(swapped)) {
      audit.exchanges_sound_ok = false;
      audit.detail += "exchange for element " + std::to_string(event.element) +
                      " does not restore independence; ";
    }
  }

  if (!f.claims_nonnegative()) {
    audit.applicable = false;
    audit.detail += "objective does not claim non-negativity: value bounds skipped; ";
    return audit;
  }

  ElementSet outside = state.union_of_solutions.set_minus(state.solution);
  audit.evictee_marginal_sum = arrival_marginal_sum(value, outside, state.solution, order);
  audit.solution_value = value.evaluate(state.solution);
  audit.union_value = value.evaluate(state.union_of_solutions);

  if (audit.evictee_marginal_sum > audit.solution_value / c + tolerance) {
    audit.evictee_marginal_bound_ok = false;
    audit.detail += "f(A\\S:S) exceeds f(S)/c; ";
  }
  if (audit.union_value > (c + 1.0) / c * audit.solution_value + tolerance) {
    audit.union_value_bound_ok = false;
    audit.detail += "f(A) exceeds (c+1)/c f(S); ";
  }
  // f(B | A\B) <= f(B : A) with B the evicted elements and A the union set.
  double direct = value.set_marginal(outside, state.solution);
  double arrival = arrival_marginal_sum(value, outside, state.union_of_solutions, order);
  if (direct > arrival + tolerance) {
    audit.arrival_observation_ok = false;
    audit.detail += "f(B | A\\B) exceeds f(B : A); ";
  }
  return audit;
}

// E[f(S_n)] by total enumeration of the coin vectors.
inline double exact_expectation_sample_streaming(const SetFunction& f, const Matchoid& matchoid,
                                                 const StreamingConfig& cfg,
                                                 const StreamOrder* order = nullptr) {
  int n = matchoid.ground_size();
  double q = cfg.resolved_q(matchoid.extendibility());
  StreamOrder default_order = order ? StreamOrder{} : StreamOrder::index_order(n);
  const StreamOrder& use = order ? *order : default_order;
  return enumerate_expectation(n, q, [&](const SampleBits& bits) {
    return sample_streaming_with_bits(f, matchoid, bits, cfg, use).value;
  });
}

}  // namespace submax
