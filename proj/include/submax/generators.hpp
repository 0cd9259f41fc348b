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

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/element_set.hpp"
#include "submax/objectives.hpp"
#include "submax/random.hpp"

namespace submax {

// objective_class picks the default sampling probability of the offline
// algorithm: 1/(p+1) for the submodular classes, 1/p for linear.
enum class ObjectiveClass { SubmodularNonMonotone, SubmodularMonotone, Linear };

inline std::string to_string(ObjectiveClass c) {
  switch (c) {
    case ObjectiveClass::SubmodularNonMonotone: return "submodular-nonmonotone";
    case ObjectiveClass::SubmodularMonotone: return "submodular-monotone";
    case ObjectiveClass::Linear: return "linear";
  }
  return "submodular-nonmonotone";
}

inline ObjectiveClass objective_class_from_string(const std::string& s) {
  if (s == "submodular-nonmonotone" || s == "general") return ObjectiveClass::SubmodularNonMonotone;
  if (s == "submodular-monotone" || s == "monotone") return ObjectiveClass::SubmodularMonotone;
  if (s == "linear") return ObjectiveClass::Linear;
  throw std::invalid_argument("unknown objective class: " + s);
}

inline ObjectiveClass classify_objective(const SetFunction& f) {
  if (f.kind() == "modular") return ObjectiveClass::Linear;
  if (f.claims_monotone()) return ObjectiveClass::SubmodularMonotone;
  return ObjectiveClass::SubmodularNonMonotone;
}

// A loaded or generated problem: an objective, a constraint, and the
// descriptor data the harness needs to pick defaults and verify claims.
struct Instance {
  GroundSet ground;
  std::shared_ptr<const SetFunction> objective;
  std::shared_ptr<const IndependenceSystem> constraint;
  int declared_p = 1;
  ObjectiveClass objective_class = ObjectiveClass::SubmodularNonMonotone;
  std::string id;

  int size() const { return ground.size(); }
};

using GeneratorParams = std::map<std::string, double>;

namespace detail {

inline double param(const GeneratorParams& params, const std::string& name, double fallback) {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

inline int iparam(const GeneratorParams& params, const std::string& name, int fallback) {
  return static_cast<int>(param(params, name, static_cast<double>(fallback)));
}

}  // namespace detail

// ---- Random building blocks, reused by the instance kinds and by the
// ---- audit/test corpora. All weights are dyadic rationals (multiples of
// ---- 1/4) so that float arithmetic on shipped instances is exact.

inline std::shared_ptr<ModularFunction> random_modular(int n, Rng& rng, bool nonnegative = true) {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    w[static_cast<std::size_t>(i)] = rng.dyadic(nonnegative ? 0.0 : -4.0, 8.0);
  return std::make_shared<ModularFunction>(std::move(w));
}

inline std::shared_ptr<WeightedCoverage> random_coverage(int n, Rng& rng) {
  int universe = std::max(1, 2 * n);
  std::vector<std::vector<int>> covers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int degree = rng.uniform_int(1, std::max(1, universe / 3));
    for (int d = 0; d < degree; ++d)
      covers[static_cast<std::size_t>(i)].push_back(rng.uniform_int(0, universe - 1));
  }
  std::vector<double> weights(static_cast<std::size_t>(universe));
  for (int j = 0; j < universe; ++j)
    weights[static_cast<std::size_t>(j)] = static_cast<double>(rng.uniform_int(1, 4));
  return std::make_shared<WeightedCoverage>(universe, std::move(covers), std::move(weights));
}

inline std::shared_ptr<RecommendationCut> random_cut(int n, Rng& rng, double lambda = -1.0) {
  if (lambda < 0.0) {
    static const double kChoices[] = {0.25, 0.5, 0.75, 1.0};
    lambda = kChoices[rng.uniform_int(0, 3)];
  }
  Eigen::MatrixXd s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      double v = rng.dyadic(0.0, 4.0);
      s(i, j) = v;
      s(j, i) = v;
    }
  return std::make_shared<RecommendationCut>(std::move(s), ElementSet::full(n), lambda);
}

inline std::shared_ptr<IndependenceSystem> random_matroid(int n, Rng& rng) {
  switch (rng.uniform_int(0, 2)) {
    case 0:
      return std::make_shared<UniformMatroid>(n, rng.uniform_int(1, std::max(1, n / 2)));
    case 1: {
      int block_count = rng.uniform_int(1, std::max(1, n / 2));
      std::vector<std::vector<Element>> blocks(static_cast<std::size_t>(block_count));
      std::vector<Element> order(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
      rng.shuffle(order);
      for (int i = 0; i < n; ++i)
        blocks[static_cast<std::size_t>(i % block_count)].push_back(order[static_cast<std::size_t>(i)]);
      std::vector<int> caps(static_cast<std::size_t>(block_count));
      for (int b = 0; b < block_count; ++b)
        caps[static_cast<std::size_t>(b)] = rng.uniform_int(1, 2);
      return std::make_shared<PartitionMatroid>(n, std::move(blocks), std::move(caps));
    }
    default: {
      // Element i is a random edge; few vertices so that cycles appear.
      int vertices = std::max(2, n / 2 + 1);
      std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        int a = rng.uniform_int(0, vertices - 1);
        int b = rng.uniform_int(0, vertices - 1);
        if (a == b) b = (b + 1) % vertices;  // no self-loop elements
        edges[static_cast<std::size_t>(i)] = {a, b};
      }
      return std::make_shared<GraphicMatroid>(vertices, std::move(edges));
    }
  }
}

// Matchoid with target element multiplicity p: uniform-matroid members over
// random ground subsets; element 0 is forced into p members so the computed
// parameter matches the request.
inline std::shared_ptr<Matchoid> random_matchoid(int n, int p, Rng& rng, int member_count = 0) {
  if (member_count <= 0) member_count = std::max(p, rng.uniform_int(p, p + 2));
  std::vector<ElementSet> grounds(static_cast<std::size_t>(member_count));
  for (int u = 0; u < n; ++u) {
    int mult = (u == 0) ? p : rng.uniform_int(1, p);
    std::vector<int> members(static_cast<std::size_t>(member_count));
    for (int m = 0; m < member_count; ++m) members[static_cast<std::size_t>(m)] = m;
    rng.shuffle(members);
    for (int t = 0; t < mult; ++t)
      grounds[static_cast<std::size_t>(members[static_cast<std::size_t>(t)])].insert(u);
  }
  std::vector<Matchoid::Member> members;
  for (int m = 0; m < member_count; ++m) {
    int cap = rng.uniform_int(1, std::max(1, grounds[static_cast<std::size_t>(m)].size()));
    members.push_back({std::make_shared<UniformMatroid>(n, cap), grounds[static_cast<std::size_t>(m)]});
  }
  return std::make_shared<Matchoid>(n, std::move(members));
}

inline std::shared_ptr<BoundedKnapsack> random_knapsack(int n, Rng& rng, int max_size = 3) {
  std::vector<double> sizes(static_cast<std::size_t>(n));
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    sizes[static_cast<std::size_t>(i)] = static_cast<double>(rng.uniform_int(1, max_size));
    total += sizes[static_cast<std::size_t>(i)];
  }
  double capacity = std::max(static_cast<double>(max_size), 0.4 * total);
  return std::make_shared<BoundedKnapsack>(std::move(sizes), capacity);
}

// ---- The shipped instance kinds. Deterministic per (kind, n, seed, params).

inline Instance generate_instance(const std::string& kind, int n, std::uint64_t seed,
                                  const GeneratorParams& params = {}) {
  Rng rng(mix64(seed ^ 0xC0FFEEULL));
  Instance inst;
  inst.ground = GroundSet(n);
  inst.id = kind + ":n=" + std::to_string(n) + ":seed=" + std::to_string(seed);

  if (kind == "coverage+uniform") {
    inst.objective = random_coverage(n, rng);
    int cap = detail::iparam(params, "k", std::max(0, std::min(n, n / 3 + 1)));
    inst.constraint = std::make_shared<UniformMatroid>(n, cap);
    inst.declared_p = 1;
    inst.objective_class = ObjectiveClass::SubmodularMonotone;
    return inst;
  }

  if (kind == "cut+genre-limits") {
    // Overlapping genre subsets with per-genre caps plus a global cap,
    // composed as one matchoid; the offline algorithms use it as the
    // p-extendible system it also is.
    int genres = detail::iparam(params, "genres", 3);
    int genre_cap = detail::iparam(params, "genre_cap", 2);
    int global_cap = detail::iparam(params, "k", std::max(1, n / 2));
    double lambda = detail::param(params, "lambda", 0.5);
    inst.objective = random_cut(n, rng, lambda);
    std::vector<ElementSet> genre_sets(static_cast<std::size_t>(genres));
    int max_mult = 1;
    for (int u = 0; u < n; ++u) {
      int mult = rng.uniform_int(1, std::min(3, genres));
      max_mult = std::max(max_mult, mult);
      std::vector<int> order(static_cast<std::size_t>(genres));
      for (int g = 0; g < genres; ++g) order[static_cast<std::size_t>(g)] = g;
      rng.shuffle(order);
      for (int t = 0; t < mult; ++t)
        genre_sets[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])].insert(u);
    }
    std::vector<Matchoid::Member> members;
    for (int g = 0; g < genres; ++g)
      members.push_back(
          {std::make_shared<UniformMatroid>(n, genre_cap), genre_sets[static_cast<std::size_t>(g)]});
    members.push_back({std::make_shared<UniformMatroid>(n, global_cap), ElementSet::full(n)});
    inst.constraint = std::make_shared<Matchoid>(n, std::move(members));
    inst.declared_p = n > 0 ? max_mult + 1 : 1;
    inst.objective_class = lambda > 0.0 ? ObjectiveClass::SubmodularNonMonotone
                                        : ObjectiveClass::SubmodularMonotone;
    return inst;
  }

  if (kind == "logdet+matchoid") {
    // 2D points covered by overlapping circular regions; at most `ell`
    // points may be picked from each region.
    double side = detail::param(params, "side", 10.0);
    double radius = detail::param(params, "radius", 4.0);
    double bandwidth = detail::param(params, "h", 5.0);
    double alpha = detail::param(params, "alpha", 1.0);
    int regions = detail::iparam(params, "regions", std::max(1, n / 3));
    int region_cap = detail::iparam(params, "ell", 2);
    std::vector<std::vector<double>> points(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      points[static_cast<std::size_t>(i)] = {rng.uniform(0.0, side), rng.uniform(0.0, side)};
    inst.objective = std::make_shared<LogDetDPP>(gaussian_kernel(points, bandwidth), alpha);
    std::vector<Matchoid::Member> members;
    int max_mult = 0;
    std::vector<int> multiplicity(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < regions && n > 0; ++r) {
      // Center each region on a point so no region is empty.
      const auto& center = points[static_cast<std::size_t>(rng.uniform_int(0, n - 1))];
      ElementSet region;
      for (int i = 0; i < n; ++i) {
        double dx = points[static_cast<std::size_t>(i)][0] - center[0];
        double dy = points[static_cast<std::size_t>(i)][1] - center[1];
        if (dx * dx + dy * dy <= radius * radius) {
          region.insert(i);
          max_mult = std::max(max_mult, ++multiplicity[static_cast<std::size_t>(i)]);
        }
      }
      members.push_back({std::make_shared<UniformMatroid>(n, region_cap), region});
    }
    inst.constraint = std::make_shared<Matchoid>(n, std::move(members));
    inst.declared_p = std::max(1, max_mult);
    inst.objective_class = ObjectiveClass::SubmodularMonotone;
    return inst;
  }

  if (kind == "modular+knapsack") {
    int max_size = detail::iparam(params, "pmax", 3);
    inst.objective = random_modular(n, rng, /*nonnegative=*/true);
    auto knap = random_knapsack(n, rng, max_size);
    if (params.count("capacity")) {
      std::vector<double> sizes(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) sizes[static_cast<std::size_t>(i)] = knap->size_of(i);
      knap = std::make_shared<BoundedKnapsack>(std::move(sizes), detail::param(params, "capacity", 0.0));
    }
    inst.declared_p = knap->extendibility();
    inst.constraint = std::move(knap);
    inst.objective_class = ObjectiveClass::Linear;
    return inst;
  }

  throw std::invalid_argument("generate_instance: unknown kind '" + kind + "'");
}

}  // namespace submax
