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

#include "submax/constraints.hpp"
#include "submax/generators.hpp"
#include "submax/objectives.hpp"
#include "submax/validators.hpp"

using namespace submax;

namespace {

// Determinant by Laplace expansion; the independent oracle for the log-det
// evaluations on tiny sets.
double det_by_expansion(const Eigen::MatrixXd& m) {
  int n = static_cast<int>(m.rows());
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  double total = 0.0;
  double sign = 1.0;
  for (int col = 0; col < n; ++col) {
    Eigen::MatrixXd minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int out = 0;
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor(i - 1, out++) = m(i, j);
      }
    }
    total += sign * m(0, col) * det_by_expansion(minor);
    sign = -sign;
  }
  return total;
}

// The cut value written out as the literal double sum.
double cut_by_double_sum(const Eigen::MatrixXd& s, const ElementSet& relevant, double lambda,
                         const ElementSet& subset) {
  double first = 0.0;
  for (Element i : subset)
    for (Element j : relevant) first += s(i, j);
  double second = 0.0;
  for (Element i : subset)
    for (Element j : subset) second += s(i, j);
  return first - lambda * second;
}

}  // namespace

TEST_CASE("modular function") {
  ModularFunction f({1.0, -2.0, 4.0});
  CHECK(f.value(ElementSet{}) == 0.0);
  CHECK(f.value(ElementSet{0, 2}) == 5.0);
  CHECK_FALSE(f.claims_nonnegative());
  ModularFunction g({1.0, 2.0});
  CHECK(g.claims_nonnegative());
  CHECK(g.claims_monotone());
}

TEST_CASE("recommendation cut: two-element worked example evaluates to zero") {
  Eigen::MatrixXd s(2, 2);
  s << 0, 1, 1, 0;
  RecommendationCut cut(s, ElementSet{0, 1}, 1.0);
  CHECK(cut.value(ElementSet{}) == 0.0);
  double expected = cut_by_double_sum(s, ElementSet{0, 1}, 1.0, ElementSet{0, 1});
  CHECK(expected == 0.0);
  CHECK(cut.value(ElementSet{0, 1}) == expected);
  CHECK_FALSE(cut.claims_monotone());
  CHECK(cut.claims_nonnegative());  // relevant set covers the ground set
}

TEST_CASE("recommendation cut matches the literal double sum on random instances") {
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    auto cut = random_cut(6, rng);
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      ElementSet s = ElementSet::from_mask(mask);
      CHECK(cut->value(s) ==
            cut_by_double_sum(cut->similarity(), cut->relevant(), cut->lambda(), s));
    }
  }
}

TEST_CASE("recommendation cut validation") {
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(RecommendationCut(asym, ElementSet{0}, 0.5), std::invalid_argument);
  Eigen::MatrixXd neg(2, 2);
  neg << 0, -1, -1, 0;
  CHECK_THROWS_AS(RecommendationCut(neg, ElementSet{0}, 0.5), std::invalid_argument);
  Eigen::MatrixXd ok(2, 2);
  ok << 0, 1, 1, 0;
  CHECK_THROWS_AS(RecommendationCut(ok, ElementSet{0}, 1.5), std::invalid_argument);
}

TEST_CASE("cut with lambda 0 collapses to a modular function") {
  Rng rng(11);
  auto cut = random_cut(7, rng, 0.0);
  std::vector<double> weights;
  for (int i = 0; i < 7; ++i) {
    double row = 0.0;
    for (Element j : cut->relevant()) row += cut->similarity()(i, j);
    weights.push_back(row);
  }
  ModularFunction modular(weights);
  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    ElementSet s = ElementSet::from_mask(mask);
    CHECK(cut->value(s) == modular.value(s));
  }
}

TEST_CASE("log-det: identity kernel doubles to 2 ln 2") {
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(2, 2);
  LogDetDPP dpp(eye, 1.0);
  CHECK(dpp.value(ElementSet{}) == 0.0);
  CHECK(dpp.value(ElementSet{0, 1}) == Catch::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("log-det agrees with Laplace expansion for |S| <= 4") {
  std::vector<std::vector<double>> points = {{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {3, 0}};
  Eigen::MatrixXd kernel = gaussian_kernel(points, 1.5);
  for (auto variant : {LogDetDPP::Variant::Regularized, LogDetDPP::Variant::Plain}) {
    LogDetDPP dpp(kernel, 0.75, variant);
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      ElementSet s = ElementSet::from_mask(mask);
      if (s.size() > 4) continue;
      int k = s.size();
      Eigen::MatrixXd sub(k, k);
      const auto& idx = s.items();
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          sub(a, b) = kernel(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
      if (variant == LogDetDPP::Variant::Regularized)
        sub = 0.75 * sub + Eigen::MatrixXd::Identity(k, k);
      double expected = std::log(det_by_expansion(sub));
      CHECK(dpp.value(s) == Catch::Approx(expected).epsilon(1e-10).margin(1e-12));
    }
  }
}

TEST_CASE("log-det flags and PSD validation") {
  Eigen::MatrixXd not_psd(2, 2);
  not_psd << 1, 2, 2, 1;  // eigenvalues 3 and -1
  CHECK_THROWS_AS(LogDetDPP(not_psd, 1.0), std::invalid_argument);

  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(3, 3);
  LogDetDPP plain(eye * 0.5, 1.0, LogDetDPP::Variant::Plain);
  CHECK_FALSE(plain.claims_nonnegative());
  CHECK(plain.value(ElementSet{0, 1}) < 0.0);  // log det(0.5 I) = 2 log 0.5
  LogDetDPP reg(eye, 1.0);
  CHECK(reg.claims_nonnegative());
  CHECK(reg.claims_monotone());
  CHECK_THROWS_AS(LogDetDPP(eye, 0.0), std::invalid_argument);
}

TEST_CASE("gaussian kernel values") {
  double h = 2.0;
  std::vector<std::vector<double>> points = {{0, 0}, {0, 0}, {h, 0}, {2 * h, 0}};
  Eigen::MatrixXd k = gaussian_kernel(points, h);
  CHECK(k(0, 1) == 1.0);                                       // coincident points
  CHECK(k(0, 2) == Catch::Approx(std::exp(-1.0)).epsilon(1e-14));  // d = h
  CHECK(k(0, 3) == Catch::Approx(std::exp(-4.0)).epsilon(1e-14));  // d = 2h
  CHECK(k(2, 2) == 1.0);
  CHECK_THROWS_AS(gaussian_kernel(points, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_kernel(points, -1.0), std::invalid_argument);
}

TEST_CASE("every shipped objective is submodular (exhaustive, n <= 8)") {
  Rng rng(2026);
  CHECK(validate_submodular(*random_modular(7, rng, false)).ok);
  CHECK(validate_submodular(*random_coverage(7, rng)).ok);
  CHECK(validate_submodular(*random_cut(7, rng)).ok);

  std::vector<std::vector<double>> points;
  for (int i = 0; i < 6; ++i) points.push_back({rng.uniform(0, 10), rng.uniform(0, 10)});
  LogDetDPP regularized(gaussian_kernel(points, 5.0), 1.0);
  CHECK(validate_submodular(regularized).ok);
  CHECK(validate_monotone(regularized).ok);
  CHECK(validate_nonnegative(regularized).ok);

  Eigen::MatrixXd plain_kernel = gaussian_kernel(points, 5.0) +
                                 Eigen::MatrixXd::Identity(6, 6) * 0.5;
  LogDetDPP plain(plain_kernel, 1.0, LogDetDPP::Variant::Plain);
  CHECK(validate_submodular(plain).ok);

  CHECK(validate_monotone(*random_coverage(7, rng)).ok);
}

TEST_CASE("generate_instance: determinism and the empty instance") {
  Instance a = generate_instance("coverage+uniform", 9, 5);
  Instance b = generate_instance("coverage+uniform", 9, 5);
  for (std::uint64_t mask = 0; mask < 512; mask += 7) {
    ElementSet s = ElementSet::from_mask(mask & 0x1FF);
    CHECK(a.objective->value(s) == b.objective->value(s));
    CHECK(a.constraint->independent(s) == b.constraint->independent(s));
  }

  Instance empty = generate_instance("coverage+uniform", 0, 1);
  CHECK(empty.size() == 0);
  CHECK(empty.objective->value(ElementSet{}) == 0.0);
  CHECK(empty.constraint->independent(ElementSet{}));

  CHECK_THROWS_AS(generate_instance("no-such-kind", 5, 1), std::invalid_argument);
}

TEST_CASE("generate_instance: genre limits compose into a small-p extendible system") {
  // 3 genre caps plus one global cap: measured extendibility stays within 4.
  Instance inst = generate_instance("cut+genre-limits", 7, 21, {{"genres", 3}});
  CHECK(inst.declared_p <= 4);
  CHECK(measure_extendibility(*inst.constraint) <= 4);
  CHECK(validate_downward_closed(*inst.constraint).ok);
}

TEST_CASE("generate_instance: logdet regions give a matchoid with p = max multiplicity") {
  Instance inst = generate_instance("logdet+matchoid", 8, 33, {{"regions", 4}});
  auto matchoid = std::dynamic_pointer_cast<const Matchoid>(inst.constraint);
  REQUIRE(matchoid);
  std::vector<int> multiplicity(8, 0);
  for (int ell = 0; ell < matchoid->member_count(); ++ell)
    for (Element u : matchoid->member(ell).ground) ++multiplicity[static_cast<std::size_t>(u)];
  int max_mult = 0;
  for (int m : multiplicity) max_mult = std::max(max_mult, m);
  CHECK(matchoid->extendibility() == max_mult);
  CHECK(inst.declared_p == std::max(1, max_mult));
  CHECK(inst.objective->claims_monotone());
}

TEST_CASE("generate_instance: modular+knapsack is a linear-class instance") {
  Instance inst = generate_instance("modular+knapsack", 9, 44);
  CHECK(inst.objective_class == ObjectiveClass::Linear);
  CHECK(inst.objective->claims_nonnegative());
  CHECK(inst.declared_p >= 1);
  CHECK(inst.declared_p <= 3);
  CHECK(validate_downward_closed(*inst.constraint).ok);
}
