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

#include <functional>
#include <memory>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/generators.hpp"

using namespace submax;

namespace {

// Independent cycle detector: DFS over the multigraph induced by the edge
// subset. Used to cross-check the union-find path in GraphicMatroid.
bool forest_by_dfs(int vertices, const std::vector<std::pair<int, int>>& ends,
                   const ElementSet& subset) {
  // A subset of edges is a forest iff, in every connected component,
  // #edges = #vertices - 1. Count components by DFS over selected edges.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices));
  int edge_count = subset.size();
  for (Element e : subset) {
    auto [a, b] = ends[static_cast<std::size_t>(e)];
    if (a == b) return false;  // self-loop is a cycle
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<char> seen(static_cast<std::size_t>(vertices), 0);
  int touched_vertices = 0;
  int components = 0;
  std::function<void(int)> dfs = [&](int v) {
    seen[static_cast<std::size_t>(v)] = 1;
    ++touched_vertices;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) dfs(w);
  };
  for (int v = 0; v < vertices; ++v) {
    if (seen[static_cast<std::size_t>(v)] || adj[static_cast<std::size_t>(v)].empty()) continue;
    ++components;
    dfs(v);
  }
  return edge_count == touched_vertices - components;
}

}  // namespace

TEST_CASE("uniform matroid membership") {
  UniformMatroid m(5, 2);
  CHECK(m.independent(ElementSet{}));
  CHECK(m.independent(ElementSet{0, 4}));
  CHECK_FALSE(m.independent(ElementSet{0, 1, 2}));
  CHECK_THROWS_AS(m.independent(ElementSet{5}), std::out_of_range);
}

TEST_CASE("partition matroid membership and constructor validation") {
  PartitionMatroid m(5, {{0, 1}, {2, 3, 4}}, {1, 2});
  CHECK(m.independent(ElementSet{}));
  CHECK(m.independent(ElementSet{0, 2, 3}));
  CHECK_FALSE(m.independent(ElementSet{0, 1}));
  CHECK_FALSE(m.independent(ElementSet{2, 3, 4}));

  // Overlapping blocks never reach validation: the constructor rejects them.
  CHECK_THROWS_AS(PartitionMatroid(4, {{0, 1}, {1, 2, 3}}, {1, 1}), std::invalid_argument);
  // Blocks must cover the universe.
  CHECK_THROWS_AS(PartitionMatroid(4, {{0, 1}}, {1}), std::invalid_argument);
  CHECK_NOTHROW(PartitionMatroid(4, {{0, 1}}, {1}, ElementSet{0, 1}));
}

TEST_CASE("graphic matroid on the triangle") {
  GraphicMatroid triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(triangle.independent(ElementSet{0, 1, 2}));
  CHECK(triangle.independent(ElementSet{0, 1}));
  CHECK(triangle.independent(ElementSet{0, 2}));
  CHECK(triangle.independent(ElementSet{1, 2}));
}

TEST_CASE("graphic matroid agrees with a DFS cycle detector on small graphs") {
  Rng rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    int vertices = rng.uniform_int(2, 6);
    int n = rng.uniform_int(1, 9);
    std::vector<std::pair<int, int>> ends;
    for (int e = 0; e < n; ++e) {
      int a = rng.uniform_int(0, vertices - 1);
      int b = rng.uniform_int(0, vertices - 1);
      ends.emplace_back(a, b);  // self-loops allowed here on purpose
    }
    GraphicMatroid m(vertices, ends);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ElementSet s = ElementSet::from_mask(mask);
      CHECK(m.independent(s) == forest_by_dfs(vertices, ends, s));
    }
  }
}

TEST_CASE("bounded knapsack membership and parameter") {
  BoundedKnapsack k({1.0, 2.5, 3.0}, 4.0);
  CHECK(k.extendibility() == 3);
  CHECK(k.independent(ElementSet{0, 2}));
  CHECK_FALSE(k.independent(ElementSet{1, 2}));
  CHECK_THROWS_AS(BoundedKnapsack({0.5}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(BoundedKnapsack({1.0}, -1.0), std::invalid_argument);
}

TEST_CASE("matchoid composition, computed p, and query accounting") {
  // Members: uniform cap 1 on {0,1}, uniform cap 1 on {1,2}; element 1 sits
  // in both ground subsets, so p = 2.
  std::vector<Matchoid::Member> members;
  members.push_back({std::make_shared<UniformMatroid>(3, 1), ElementSet{0, 1}});
  members.push_back({std::make_shared<UniformMatroid>(3, 1), ElementSet{1, 2}});
  Matchoid m(3, std::move(members));
  CHECK(m.extendibility() == 2);
  CHECK(m.independent(ElementSet{0, 2}));
  CHECK_FALSE(m.independent(ElementSet{0, 1}));

  // Short-circuit accounting: the first violated member stops the scan.
  IndependenceOracle oracle(m);
  CHECK(oracle.is_independent(ElementSet{0, 2}));
  CHECK(oracle.query_count() == 2);  // both members consulted
  CHECK_FALSE(oracle.is_independent(ElementSet{0, 1}));
  CHECK(oracle.query_count() == 3);  // first member already rejects

  CHECK_THROWS_AS(Matchoid(3, {{std::make_shared<BoundedKnapsack>(
                                    std::vector<double>{1.0, 1.0, 3.0}, 3.0),
                                ElementSet{0, 1, 2}}}),
                  std::invalid_argument);
}

TEST_CASE("matchoid violated members") {
  std::vector<Matchoid::Member> members;
  members.push_back({std::make_shared<UniformMatroid>(4, 1), ElementSet{0, 1, 3}});
  members.push_back({std::make_shared<UniformMatroid>(4, 1), ElementSet{2, 3}});
  Matchoid m(4, std::move(members));

  CHECK(matchoid_violated_members(m, ElementSet{}, 3).empty());
  CHECK(matchoid_violated_members(m, ElementSet{0}, 1) == std::vector<int>{0});
  // Both members at cap and u = 3 belongs to both ground subsets.
  CHECK(matchoid_violated_members(m, ElementSet{0, 2}, 3) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(matchoid_violated_members(m, ElementSet{0, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(matchoid_violated_members(m, ElementSet{0}, 0), std::invalid_argument);

  // The bound |violated| <= p holds on random probes.
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto matchoid = random_matchoid(7, 3, rng);
    ElementSet s;
    for (int u = 0; u < 7; ++u)
      if (rng.bernoulli(0.4) && matchoid->independent(s.with(u))) s.insert(u);
    for (int u = 0; u < 7; ++u) {
      if (s.contains(u)) continue;
      CHECK(static_cast<int>(matchoid_violated_members(*matchoid, s, u).size()) <=
            matchoid->extendibility());
    }
  }
}

TEST_CASE("matroid axioms validator") {
  CHECK(validate_matroid(UniformMatroid(7, 3)).ok);
  CHECK(validate_matroid(PartitionMatroid(6, {{0, 1, 2}, {3, 4, 5}}, {1, 2})).ok);
  CHECK(validate_matroid(GraphicMatroid(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})).ok);

  // Sizes {1,1,3} with capacity 3: downward closed but the exchange axiom
  // fails, so it is not a matroid.
  BoundedKnapsack knap({1.0, 1.0, 3.0}, 3.0);
  auto report = validate_matroid(knap);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.detail.empty());
  CHECK(validate_downward_closed(knap).ok);
}

TEST_CASE("downward closure holds on every shipped system kind") {
  Rng rng(99);
  for (int trial = 0; trial < 6; ++trial) {
    CHECK(validate_downward_closed(*random_matroid(8, rng)).ok);
    CHECK(validate_downward_closed(*random_matchoid(7, 2, rng)).ok);
    CHECK(validate_downward_closed(*random_knapsack(7, rng)).ok);
  }
}

TEST_CASE("measured extendibility: matroids are 1-extendible") {
  CHECK(measure_extendibility(UniformMatroid(6, 2)) == 1);
  CHECK(measure_extendibility(PartitionMatroid(6, {{0, 1, 2}, {3, 4, 5}}, {1, 2})) == 1);
  CHECK(measure_extendibility(GraphicMatroid(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 0}})) == 1);
}

TEST_CASE("measured extendibility: matchoids stay within p") {
  // Intersection of two partition matroids (every element in both grounds).
  std::vector<Matchoid::Member> members;
  members.push_back(
      {std::make_shared<PartitionMatroid>(6, std::vector<std::vector<Element>>{{0, 1, 2}, {3, 4, 5}},
                                          std::vector<int>{1, 1}),
       ElementSet::full(6)});
  members.push_back(
      {std::make_shared<PartitionMatroid>(6, std::vector<std::vector<Element>>{{0, 3}, {1, 4}, {2, 5}},
                                          std::vector<int>{1, 1, 1}),
       ElementSet::full(6)});
  Matchoid intersection(6, std::move(members));
  CHECK(intersection.extendibility() == 2);
  CHECK(measure_extendibility(intersection) <= 2);

  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    auto matchoid = random_matchoid(7, 3, rng);
    CHECK(measure_extendibility(*matchoid) <= matchoid->extendibility());
  }
}

TEST_CASE("measured extendibility: bounded sizes cap the removals") {
  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    auto knap = random_knapsack(7, rng, 3);
    CHECK(measure_extendibility(*knap) <= 3);
  }
  // A binding instance: inserting the size-3 element evicts three size-1s.
  BoundedKnapsack tight({1.0, 1.0, 1.0, 3.0}, 3.0);
  CHECK(measure_extendibility(tight) == 3);
}
