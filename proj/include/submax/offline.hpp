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
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/expectation.hpp"
#include "submax/generators.hpp"
#include "submax/oracles.hpp"
#include "submax/random.hpp"
#include "submax/run_report.hpp"

namespace submax {

struct OfflineConfig {
  std::optional<double> q;  // default 1/(p+1), or 1/p for linear objectives
  ObjectiveClass objective_class = ObjectiveClass::SubmodularNonMonotone;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::optional<bool> lazy_evaluation;  // defaults: off for sampled runs, on for vanilla

  double resolved_q(int p) const {
    if (q) {
      if (!(*q > 0.0) || *q > 1.0)
        throw std::invalid_argument("OfflineConfig: q must lie in (0, 1]");
      return *q;
    }
    if (p < 1)
      throw std::invalid_argument("OfflineConfig: constraint extendibility must be >= 1");
    return objective_class == ObjectiveClass::Linear ? 1.0 / p : 1.0 / (p + 1);
  }
};

// Per-iteration record of the instrumented greedy. `removed` and the tracker
// fields are only meaningful when an optimal set was supplied.
struct OfflineTraceRecord {
  Element element = -1;
  ElementSet solution_before;  // S_u
  bool bit = false;            // the element's coin; acceptance == bit
  double marginal = 0.0;       // f(u | S_u) at consideration
  double gain = 0.0;           // G_u: marginal when accepted, else 0
  ElementSet removed;          // O_u
  ElementSet tracker_after;    // O at the end of the iteration
  bool newly_tracked = false;  // Y_u: accepted while not in O
};

struct OfflineTrace {
  bool instrumented = false;
  ElementSet initial_opt;
  std::vector<OfflineTraceRecord> records;
};

struct EquivalentGreedyRun {
  RunReport report;
  OfflineTrace trace;
};

// Smallest O_u ⊆ (O ∪ {u}) \ (S ∪ {u}) such that (O ∪ {u}) \ O_u is
// independent, searched in increasing cardinality with lexicographic
// tie-breaking. Requires O independent, S ⊆ O and S + u independent.
inline ElementSet smallest_removal_set(IndependenceOracle& oracle, const ElementSet& tracked,
                                       const ElementSet& solution, Element u) {
  ElementSet grown = tracked.with(u);
  ElementSet keep = solution.with(u);
  std::vector<Element> pool = grown.set_minus(keep).items();
  int m = static_cast<int>(pool.size());
  for (int size = 0; size <= m; ++size) {
    // Combinations of `size` indices in lexicographic order.
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      ElementSet removal;
      for (int i : idx) removal.insert(pool[static_cast<std::size_t>(i)]);
      if (oracle.is_independent(grown.set_minus(removal))) return removal;
      int pos = size - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - size + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  throw std::logic_error("smallest_removal_set: no removal restores independence");
}

inline ElementSet smallest_removal_set(const IndependenceSystem& sys, const ElementSet& tracked,
                                       const ElementSet& solution, Element u) {
  IndependenceOracle oracle(sys);
  return smallest_removal_set(oracle, tracked, solution, u);
}

namespace detail {

struct GreedyPick {
  Element element;
  double gain;
};

// One greedy scan: the earliest maximizer of f(u | S) among candidates with
// S + u independent and positive marginal. Candidates that joined S or became
// infeasible are dropped from the pool (both are permanent in a
// downward-closed system).
inline std::optional<GreedyPick> greedy_scan(ValueOracle& f, IndependenceOracle& ind,
                                             const ElementSet& solution,
                                             std::vector<Element>& pool, const Tolerance& tol) {
  std::optional<GreedyPick> best;
  std::vector<Element> keep;
  keep.reserve(pool.size());
  for (Element u : pool) {
    if (solution.contains(u)) continue;
    if (!ind.is_independent(solution.with(u))) continue;
    keep.push_back(u);
    double gain = f.marginal(u, solution);
    if (!tol.strictly_positive(gain)) continue;
    if (!best || gain > best->gain) best = GreedyPick{u, gain};
  }
  pool.swap(keep);
  return best;
}

// Lazy variant of the repeated scan: a max-heap of stale upper bounds,
// refreshed on pop. Ordering is (gain desc, index asc), so fresh pops agree
// with the eager scan's tie-breaking whenever f is submodular.
class LazyGreedySelector {
 public:
  LazyGreedySelector(ValueOracle& f, IndependenceOracle& ind, const Tolerance& tol)
      : f_(&f), ind_(&ind), tol_(tol) {}

  void seed(const std::vector<Element>& pool, const ElementSet& solution) {
    for (Element u : pool) heap_.push({f_->marginal(u, solution), u, epoch_});
  }

  std::optional<GreedyPick> next(const ElementSet& solution) {
    ++epoch_;
    while (!heap_.empty()) {
      Entry top = heap_.top();
      heap_.pop();
      if (solution.contains(top.element)) continue;
      if (!ind_->is_independent(solution.with(top.element))) continue;
      if (top.epoch == epoch_) {
        if (!tol_.strictly_positive(top.bound)) return std::nullopt;
        return GreedyPick{top.element, top.bound};
      }
      heap_.push({f_->marginal(top.element, solution), top.element, epoch_});
    }
    return std::nullopt;
  }

 private:
  struct Entry {
    double bound;
    Element element;
    std::uint64_t epoch;
    bool operator<(const Entry& other) const {
      if (bound != other.bound) return bound < other.bound;
      return element > other.element;  // smaller index wins ties
    }
  };
  ValueOracle* f_;
  IndependenceOracle* ind_;
  Tolerance tol_;
  std::priority_queue<Entry> heap_;
  std::uint64_t epoch_ = 0;
};

}  // namespace detail

// Algorithm: subsample the ground set with the per-element coins, then run
// the greedy scan over the sampled elements until no candidate has a positive
// marginal and a feasible insertion.
inline RunReport sample_greedy_with_bits(const SetFunction& f, const IndependenceSystem& sys,
                                         const SampleBits& bits, const OfflineConfig& cfg = {}) {
  int n = sys.ground_size();
  if (f.ground_size() != n)
    throw std::invalid_argument("sample_greedy: objective/constraint ground size mismatch");
  if (bits.size() != n) throw std::invalid_argument("sample_greedy: bit vector size mismatch");

  ValueOracle value(f);
  IndependenceOracle ind(sys);
  Tolerance tol{cfg.epsilon};

  std::vector<Element> pool;
  for (int u = 0; u < n; ++u)
    if (bits[u]) pool.push_back(u);

  RunReport report;
  report.algorithm = "sample-greedy";
  report.seed = bits.seed;
  report.q = bits.q;
  report.peak_stored_elements = n;  // offline: the whole ground set is held

  ElementSet solution;
  bool lazy = cfg.lazy_evaluation.value_or(false);
  if (lazy) {
    detail::LazyGreedySelector selector(value, ind, tol);
    selector.seed(pool, solution);
    while (auto pick = selector.next(solution)) {
      solution.insert(pick->element);
      report.selection_sequence.push_back(pick->element);
    }
  } else {
    while (auto pick = detail::greedy_scan(value, ind, solution, pool, tol)) {
      solution.insert(pick->element);
      report.selection_sequence.push_back(pick->element);
      std::erase(pool, pick->element);
    }
  }

  report.solution = solution;
  report.value = value.evaluate(solution);
  report.final_reevaluation_queries = 1;
  report.value_queries = value.query_count();
  report.independence_queries = ind.query_count();
  report.guarantees_void = !f.claims_nonnegative();
  return report;
}

inline RunReport sample_greedy(const SetFunction& f, const IndependenceSystem& sys,
                               const OfflineConfig& cfg) {
  double q = cfg.resolved_q(sys.extendibility());
  return sample_greedy_with_bits(f, sys, draw_sample_bits(sys.ground_size(), q, cfg.seed), cfg);
}

// The q = 1 baseline. Lazy evaluation defaults on here; it changes only the
// query counts, not the solution, for genuinely submodular objectives.
inline RunReport vanilla_greedy(const SetFunction& f, const IndependenceSystem& sys,
                                OfflineConfig cfg = {}) {
  if (!cfg.lazy_evaluation) cfg.lazy_evaluation = true;
  RunReport report =
      sample_greedy_with_bits(f, sys, SampleBits::all_ones(sys.ground_size()), cfg);
  report.algorithm = "vanilla-greedy";
  report.q = 1.0;
  return report;
}

// Instrumented greedy over the full ground set, sampling each chosen element.
// With fixed coins its selection sequence matches sample_greedy exactly; the
// auxiliary tracker O (seeded with a supplied optimal set) never influences
// the run.
inline EquivalentGreedyRun equivalent_sample_greedy_with_bits(
    const SetFunction& f, const IndependenceSystem& sys, const SampleBits& bits,
    const OfflineConfig& cfg = {}, const std::optional<ElementSet>& opt = std::nullopt) {
  int n = sys.ground_size();
  if (f.ground_size() != n)
    throw std::invalid_argument("equivalent_sample_greedy: ground size mismatch");
  if (bits.size() != n)
    throw std::invalid_argument("equivalent_sample_greedy: bit vector size mismatch");

  ValueOracle value(f);
  IndependenceOracle ind(sys);
  Tolerance tol{cfg.epsilon};

  EquivalentGreedyRun run;
  run.report.algorithm = "equivalent-sample-greedy";
  run.report.seed = bits.seed;
  run.report.q = bits.q;
  run.report.peak_stored_elements = n;
  run.trace.instrumented = opt.has_value();

  ElementSet tracked;  // O
  if (opt) {
    if (!sys.independent(*opt))
      throw std::invalid_argument("equivalent_sample_greedy: supplied opt is dependent");
    tracked = *opt;
    run.trace.initial_opt = *opt;
  }

  std::vector<Element> pool;
  pool.reserve(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) pool.push_back(u);

  ElementSet solution;
  while (auto pick = detail::greedy_scan(value, ind, solution, pool, tol)) {
    Element u = pick->element;
    OfflineTraceRecord record;
    record.element = u;
    record.solution_before = solution;
    record.marginal = pick->gain;
    record.bit = bits[u];

    if (bits[u]) {
      record.gain = pick->gain;
      if (opt) {
        record.newly_tracked = !tracked.contains(u);
        ElementSet tracked_before = tracked;
        solution.insert(u);
        tracked.insert(u);
        record.removed = smallest_removal_set(ind, tracked_before, record.solution_before, u);
        tracked = tracked.set_minus(record.removed);
      } else {
        solution.insert(u);
      }
      run.report.selection_sequence.push_back(u);
    } else if (opt) {
      if (tracked.contains(u)) record.removed = ElementSet{u};
      tracked = tracked.set_minus(record.removed);
    }
    record.tracker_after = tracked;
    if (run.trace.instrumented) run.trace.records.push_back(std::move(record));
    std::erase(pool, u);
  }

  run.report.solution = solution;
  run.report.value = value.evaluate(solution);
  run.report.final_reevaluation_queries = 1;
  run.report.value_queries = value.query_count();
  run.report.independence_queries = ind.query_count();
  run.report.guarantees_void = !f.claims_nonnegative();
  return run;
}

inline EquivalentGreedyRun equivalent_sample_greedy(
    const SetFunction& f, const IndependenceSystem& sys, const OfflineConfig& cfg,
    const std::optional<ElementSet>& opt = std::nullopt) {
  double q = cfg.resolved_q(sys.extendibility());
  return equivalent_sample_greedy_with_bits(
      f, sys, draw_sample_bits(sys.ground_size(), q, cfg.seed), cfg, opt);
}

// Exact maximizer of f over the independence system by full enumeration.
// Ties go to the lexicographically smallest solution.
inline std::pair<ElementSet, double> brute_force_opt(const SetFunction& f,
                                                     const IndependenceSystem& sys) {
  int n = sys.ground_size();
  if (n > 20) throw std::invalid_argument("brute_force_opt: refused for n > 20");
  ElementSet best;
  double best_value = f.value(best);
  if (!sys.independent(best))
    throw std::invalid_argument("brute_force_opt: empty set is dependent");
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    ElementSet s = ElementSet::from_mask(mask);
    if (!sys.independent(s)) continue;
    double v = f.value(s);
    if (v > best_value ||
        (v == best_value && ElementSet::lex_less(s, best))) {
      best = std::move(s);
      best_value = v;
    }
  }
  return {best, best_value};
}

// E[f(S)] of the subsampled greedy by total enumeration of the coin vectors.
inline double exact_expectation_sample_greedy(const SetFunction& f,
                                              const IndependenceSystem& sys,
                                              const OfflineConfig& cfg) {
  double q = cfg.resolved_q(sys.extendibility());
  return enumerate_expectation(sys.ground_size(), q, [&](const SampleBits& bits) {
    return sample_greedy_with_bits(f, sys, bits, cfg).value;
  });
}

}  // namespace submax
