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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <memory>

#include "submax/expectation.hpp"
#include "submax/generators.hpp"
#include "submax/offline.hpp"

using namespace submax;

namespace {

// The two-element coverage instance from the worked example: f({a}) = 2,
// f({b}) = 1, f({a,b}) = 2 under a cardinality-1 cap.
struct TinyCoverage {
  std::shared_ptr<WeightedCoverage> f = std::make_shared<WeightedCoverage>(
      2, std::vector<std::vector<int>>{{0, 1}, {1}}, std::vector<double>{1.0, 1.0});
  std::shared_ptr<UniformMatroid> sys = std::make_shared<UniformMatroid>(2, 1);
};

// Enumerates independent sets in descending mask order: an independently
// coded twin of brute_force_opt for the cross-check.
std::pair<ElementSet, double> opt_by_reverse_enumeration(const SetFunction& f,
                                                         const IndependenceSystem& sys) {
  int n = sys.ground_size();
  ElementSet best;
  double best_value = f.value(best);
  bool have = sys.independent(best);
  REQUIRE(have);
  for (std::uint64_t mask = (std::uint64_t{1} << n) - 1; mask > 0; --mask) {
    ElementSet s = ElementSet::from_mask(mask);
    if (!sys.independent(s)) continue;
    double v = f.value(s);
    if (v > best_value || (v == best_value && ElementSet::lex_less(s, best))) {
      best = s;
      best_value = v;
    }
  }
  return {best, best_value};
}

}  // namespace

TEST_CASE("sample greedy on the empty ground set") {
  ModularFunction f(std::vector<double>{});
  UniformMatroid sys(0, 0);
  OfflineConfig cfg;
  cfg.q = 0.5;
  RunReport report = sample_greedy(f, sys, cfg);
  CHECK(report.solution.empty());
  CHECK(report.value == 0.0);
}

TEST_CASE("sample greedy with q = 1 is top-k on modular weights") {
  ModularFunction f({3.0, 2.0, 1.0});
  UniformMatroid sys(3, 2);
  OfflineConfig cfg;
  cfg.q = 1.0;
  RunReport report = sample_greedy(f, sys, cfg);
  CHECK(report.solution == ElementSet{0, 1});
  CHECK(report.value == 5.0);
  CHECK(report.selection_sequence == std::vector<Element>{0, 1});

  RunReport vanilla = vanilla_greedy(f, sys);
  CHECK(vanilla.solution == report.solution);
  CHECK(vanilla.value == 5.0);
}

TEST_CASE("exact expectation of the worked coverage example is 5/4") {
  TinyCoverage tiny;
  OfflineConfig cfg;
  cfg.q = 0.5;

  // Hand enumeration of the four coin vectors: 0, 2, 1, 2 -> mean 5/4.
  double expected = 0.25 * (0.0 + 2.0 + 1.0 + 2.0);
  CHECK(exact_expectation_sample_greedy(*tiny.f, *tiny.sys, cfg) == expected);

  auto [opt, opt_value] = brute_force_opt(*tiny.f, *tiny.sys);
  CHECK(opt == ElementSet{0});
  CHECK(opt_value == 2.0);
  // p = 1: the guarantee E[f(S)] >= f(OPT)/(p+1) = 1 holds.
  CHECK(expected >= opt_value / 2.0);
}

TEST_CASE("exact expectation with q = 1 equals the deterministic run") {
  Rng rng(7);
  auto f = random_coverage(8, rng);
  auto sys = random_matroid(8, rng);
  OfflineConfig cfg;
  cfg.q = 1.0;
  CHECK(exact_expectation_sample_greedy(*f, *sys, cfg) == sample_greedy(*f, *sys, cfg).value);
}

TEST_CASE("exact expectation refuses large ground sets and falls back to Monte Carlo") {
  ModularFunction f(std::vector<double>(15, 1.0));
  UniformMatroid sys(15, 3);
  OfflineConfig cfg;
  cfg.q = 0.5;
  CHECK_THROWS_AS(exact_expectation_sample_greedy(f, sys, cfg), std::invalid_argument);

  TinyCoverage tiny;
  OfflineConfig tiny_cfg;
  tiny_cfg.q = 0.5;
  double exact = exact_expectation_sample_greedy(*tiny.f, *tiny.sys, tiny_cfg);
  auto estimate = monte_carlo_expectation(2, 0.5, 13, 4000, [&](const SampleBits& bits) {
    return sample_greedy_with_bits(*tiny.f, *tiny.sys, bits, tiny_cfg).value;
  });
  CHECK(estimate.runs == 4000);
  CHECK(std::abs(estimate.mean - exact) <= 5.0 * estimate.std_error + 1e-12);
  CHECK_THROWS_AS(monte_carlo_expectation(2, 0.5, 13, 1,
                                          [](const SampleBits&) { return 0.0; }),
                  std::invalid_argument);
}

TEST_CASE("default q follows the objective class") {
  OfflineConfig cfg;
  cfg.objective_class = ObjectiveClass::SubmodularNonMonotone;
  CHECK(cfg.resolved_q(3) == 0.25);
  cfg.objective_class = ObjectiveClass::SubmodularMonotone;
  CHECK(cfg.resolved_q(3) == 0.25);
  cfg.objective_class = ObjectiveClass::Linear;
  CHECK(cfg.resolved_q(4) == 0.25);
  CHECK_THROWS_AS(cfg.resolved_q(0), std::invalid_argument);
  cfg.q = 1.5;
  CHECK_THROWS_AS(cfg.resolved_q(2), std::invalid_argument);
}

TEST_CASE("equivalent greedy with all-ones coins reproduces vanilla greedy") {
  Rng rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_cut(7, rng);
    auto sys = random_matroid(7, rng);
    SampleBits ones = SampleBits::all_ones(7);
    RunReport vanilla = vanilla_greedy(*f, *sys);
    EquivalentGreedyRun twin = equivalent_sample_greedy_with_bits(*f, *sys, ones);
    CHECK(twin.report.solution == vanilla.solution);
    CHECK(twin.report.value == vanilla.value);
    CHECK(twin.trace.records.empty());  // not instrumented without an OPT set
  }
}

TEST_CASE("pathwise equivalence under every coin vector on a small instance") {
  Rng rng(31);
  auto f = random_cut(7, rng);
  auto sys = random_matchoid(7, 2, rng);
  auto opt = brute_force_opt(*f, *sys);
  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    SampleBits bits = SampleBits::from_mask(7, mask, 0.5);
    RunReport direct = sample_greedy_with_bits(*f, *sys, bits);
    EquivalentGreedyRun twin = equivalent_sample_greedy_with_bits(*f, *sys, bits, {}, opt.first);
    CHECK(direct.selection_sequence == twin.report.selection_sequence);
    CHECK(direct.solution == twin.report.solution);
  }
}

TEST_CASE("instrumented run maintains the structural properties") {
  Rng rng(41);
  auto f = random_coverage(8, rng);
  auto sys = random_matroid(8, rng);
  auto [opt, opt_value] = brute_force_opt(*f, *sys);
  SampleBits bits = draw_sample_bits(8, 0.5, 97);
  EquivalentGreedyRun run = equivalent_sample_greedy_with_bits(*f, *sys, bits, {}, opt);

  ElementSet considered;
  ElementSet solution_so_far;
  for (const auto& rec : run.trace.records) {
    CHECK(rec.solution_before == solution_so_far);
    if (rec.bit) solution_so_far.insert(rec.element);
    considered.insert(rec.element);
    // The tracker stays independent and the solution stays inside it.
    CHECK(sys->independent(rec.tracker_after));
    CHECK(solution_so_far.is_subset_of(rec.tracker_after));
    // Tracker elements outside the solution are still unconsidered.
    CHECK_FALSE(rec.tracker_after.set_minus(solution_so_far).intersects(considered));
  }

  // Gains telescope to f(S) - f(empty), exactly (dyadic weights).
  double gain_sum = 0.0;
  for (const auto& rec : run.trace.records) gain_sum += rec.gain;
  CHECK(gain_sum == run.report.value - f->value(ElementSet{}));

  // Rejecting a dependent OPT seed.
  ElementSet dependent = ElementSet::full(8);
  if (!sys->independent(dependent))
    CHECK_THROWS_AS(equivalent_sample_greedy_with_bits(*f, *sys, bits, {}, dependent),
                    std::invalid_argument);
}

TEST_CASE("termination leaves no sampled feasible element with positive marginal") {
  Rng rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_cut(8, rng);
    auto sys = random_matroid(8, rng);
    SampleBits bits = draw_sample_bits(8, 0.5, 1000 + static_cast<std::uint64_t>(trial));
    RunReport report = sample_greedy_with_bits(*f, *sys, bits);
    for (int v = 0; v < 8; ++v) {
      if (!bits[v] || report.solution.contains(v)) continue;
      if (!sys->independent(report.solution.with(v))) continue;
      CHECK(f->value(report.solution.with(v)) - f->value(report.solution) <= 0.0);
    }
  }
}

TEST_CASE("smallest removal set") {
  UniformMatroid sys(4, 2);

  // The tracker already contains u: nothing to remove.
  CHECK(smallest_removal_set(sys, ElementSet{0, 1}, ElementSet{1}, 0) == ElementSet{});
  // Inserting a third element into a full tracker: lexicographic singleton.
  CHECK(smallest_removal_set(sys, ElementSet{0, 1}, ElementSet{}, 2) == ElementSet{0});

  // Matroids only ever need singleton removals.
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    auto matroid = random_matroid(7, rng);
    ElementSet tracked;
    for (int u = 0; u < 7; ++u)
      if (rng.bernoulli(0.5) && matroid->independent(tracked.with(u))) tracked.insert(u);
    ElementSet sol;
    for (Element u : tracked)
      if (rng.bernoulli(0.4)) sol.insert(u);
    for (int u = 0; u < 7; ++u) {
      if (sol.contains(u) || !matroid->independent(sol.with(u))) continue;
      ElementSet removed = smallest_removal_set(*matroid, tracked, sol, u);
      CHECK(removed.size() <= 1);
      CHECK(matroid->independent(tracked.with(u).set_minus(removed)));
      CHECK_FALSE(removed.intersects(sol.with(u)));
    }
  }
}

TEST_CASE("brute force opt") {
  ModularFunction f({3.0, 2.0, 1.0});
  UniformMatroid sys(3, 2);
  auto [opt, value] = brute_force_opt(f, sys);
  CHECK(opt == ElementSet{0, 1});
  CHECK(value == 5.0);

  ModularFunction empty_f(std::vector<double>{});
  UniformMatroid empty_sys(0, 0);
  auto [eopt, evalue] = brute_force_opt(empty_f, empty_sys);
  CHECK(eopt.empty());
  CHECK(evalue == 0.0);

  ModularFunction big(std::vector<double>(21, 1.0));
  UniformMatroid big_sys(21, 2);
  CHECK_THROWS_AS(brute_force_opt(big, big_sys), std::invalid_argument);

  // Cross-check against an independently ordered enumeration.
  Rng rng(83);
  for (int trial = 0; trial < 8; ++trial) {
    auto obj = random_cut(7, rng);
    auto constraint = random_matchoid(7, 2, rng);
    auto a = brute_force_opt(*obj, *constraint);
    auto b = opt_by_reverse_enumeration(*obj, *constraint);
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);
  }
}

TEST_CASE("lazy and eager vanilla greedy agree on submodular objectives") {
  Rng rng(91);
  for (int trial = 0; trial < 6; ++trial) {
    auto f = trial % 2 == 0 ? std::shared_ptr<SetFunction>(random_cut(9, rng))
                            : std::shared_ptr<SetFunction>(random_coverage(9, rng));
    auto sys = random_matroid(9, rng);
    OfflineConfig eager;
    eager.lazy_evaluation = false;
    OfflineConfig lazy;
    lazy.lazy_evaluation = true;
    RunReport a = vanilla_greedy(*f, *sys, eager);
    RunReport b = vanilla_greedy(*f, *sys, lazy);
    CHECK(a.solution == b.solution);
    CHECK(a.value == b.value);
  }
}

TEST_CASE("a multi-genre element blocks vanilla greedy but not the sampled variant") {
  // Element 0 belongs to all three genres (caps 1); elements 1..12 split
  // into the genres, 4 each. Weights 5 vs 4.75: greedy always grabs element 0
  // and ends at value 5, while subsampling usually skips it.
  const int n = 13;
  std::vector<double> weights(n, 4.75);
  weights[0] = 5.0;
  ModularFunction f(weights);

  ElementSet genre_a{0, 1, 2, 3, 4};
  ElementSet genre_b{0, 5, 6, 7, 8};
  ElementSet genre_c{0, 9, 10, 11, 12};
  std::vector<Matchoid::Member> members;
  for (const ElementSet& g : {genre_a, genre_b, genre_c})
    members.push_back({std::make_shared<UniformMatroid>(n, 1), g});
  Matchoid matchoid(n, std::move(members));
  CHECK(matchoid.extendibility() == 3);

  RunReport vanilla = vanilla_greedy(f, matchoid);
  CHECK(vanilla.solution == ElementSet{0});
  CHECK(vanilla.value == 5.0);

  auto [opt, opt_value] = brute_force_opt(f, matchoid);
  CHECK(opt_value == 3 * 4.75);

  OfflineConfig cfg;
  cfg.objective_class = ObjectiveClass::Linear;  // q = 1/p = 1/3
  double expectation = exact_expectation_sample_greedy(f, matchoid, cfg);

  // Independent oracle: element 0 sampled (probability q) pins the value at
  // 5; otherwise each genre contributes 4.75 when any of its 4 elements is
  // sampled.
  double q = 1.0 / 3.0;
  double p_genre_hit = 1.0 - std::pow(1.0 - q, 4);
  double by_formula = q * 5.0 + (1.0 - q) * 3.0 * 4.75 * p_genre_hit;
  CHECK(expectation == Catch::Approx(by_formula).epsilon(1e-12));
  CHECK(expectation > vanilla.value);
}

TEST_CASE("oracle budget stays within 2 |N'| (k+1) plus the flagged final evaluate") {
  Rng rng(111);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = random_coverage(9, rng);
    auto sys = random_matroid(9, rng);
    SampleBits bits = draw_sample_bits(9, 0.5, 500 + static_cast<std::uint64_t>(trial));
    RunReport report = sample_greedy_with_bits(*f, *sys, bits);
    int k = 0;  // largest independent set, by enumeration
    for (std::uint64_t mask = 0; mask < 512; ++mask) {
      ElementSet s = ElementSet::from_mask(mask);
      if (sys->independent(s)) k = std::max(k, s.size());
    }
    std::uint64_t budget =
        2ull * static_cast<std::uint64_t>(bits.ones()) * static_cast<std::uint64_t>(k + 1);
    CHECK(report.value_queries - report.final_reevaluation_queries <= budget);
    CHECK(report.peak_stored_elements >= report.solution.size());
  }
}

TEST_CASE("runs on the plain log-det variant carry the guarantees-void stamp") {
  Eigen::MatrixXd kernel = Eigen::MatrixXd::Identity(4, 4) * 0.5;
  LogDetDPP plain(kernel, 1.0, LogDetDPP::Variant::Plain);
  UniformMatroid sys(4, 2);
  OfflineConfig cfg;
  cfg.q = 1.0;
  RunReport report = sample_greedy(plain, sys, cfg);
  CHECK(report.guarantees_void);

  LogDetDPP reg(Eigen::MatrixXd::Identity(4, 4), 1.0);
  CHECK_FALSE(sample_greedy(reg, sys, cfg).guarantees_void);
}

TEST_CASE("identical seed and config reproduce the run exactly") {
  Rng rng(123);
  auto f = random_cut(10, rng);
  auto sys = random_matchoid(10, 2, rng);
  OfflineConfig cfg;
  cfg.objective_class = ObjectiveClass::SubmodularNonMonotone;
  cfg.seed = 777;
  RunReport a = sample_greedy(*f, *sys, cfg);
  RunReport b = sample_greedy(*f, *sys, cfg);
  CHECK(a.solution == b.solution);
  CHECK(a.value == b.value);
  CHECK(a.value_queries == b.value_queries);
  CHECK(a.independence_queries == b.independence_queries);
  CHECK(a.selection_sequence == b.selection_sequence);
}
