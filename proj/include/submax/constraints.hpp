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
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/oracles.hpp"
#include "submax/validators.hpp"

namespace submax {

// |S| <= k.
class UniformMatroid : public IndependenceSystem {
 public:
  UniformMatroid(int n, int k) : n_(n), k_(k) {
    if (n < 0 || k < 0) throw std::invalid_argument("UniformMatroid: negative parameter");
  }
  bool independent(const ElementSet& s) const override {
    detail::check_range(s, n_, "UniformMatroid");
    return s.size() <= k_;
  }
  int ground_size() const override { return n_; }
  int extendibility() const override { return 1; }
  std::string kind() const override { return "uniform"; }
  int cap() const { return k_; }

 private:
  int n_;
  int k_;
};

// |S ∩ P_i| <= k_i for disjoint blocks P_i. The blocks must exactly cover the
// declared universe (the full ground set unless a smaller universe is given,
// as happens for matchoid members); elements outside the universe are free.
class PartitionMatroid : public IndependenceSystem {
 public:
  PartitionMatroid(int n, std::vector<std::vector<Element>> blocks, std::vector<int> caps,
                   std::optional<ElementSet> universe = std::nullopt)
      : n_(n), caps_(std::move(caps)) {
    if (n < 0) throw std::invalid_argument("PartitionMatroid: negative ground size");
    if (blocks.size() != caps_.size())
      throw std::invalid_argument("PartitionMatroid: blocks/caps size mismatch");
    block_of_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (caps_[b] < 0) throw std::invalid_argument("PartitionMatroid: negative cap");
      for (Element u : blocks[b]) {
        if (u < 0 || u >= n)
          throw std::invalid_argument("PartitionMatroid: block element out of range");
        if (block_of_[static_cast<std::size_t>(u)] != -1)
          throw std::invalid_argument("PartitionMatroid: overlapping blocks");
        block_of_[static_cast<std::size_t>(u)] = static_cast<int>(b);
      }
    }
    ElementSet want = universe ? std::move(*universe) : ElementSet::full(n);
    for (Element u : want)
      if (u < 0 || u >= n || block_of_[static_cast<std::size_t>(u)] == -1)
        throw std::invalid_argument("PartitionMatroid: blocks do not cover the universe");
    for (int u = 0; u < n; ++u)
      if (block_of_[static_cast<std::size_t>(u)] != -1 && !want.contains(u))
        throw std::invalid_argument("PartitionMatroid: block element outside the universe");
    block_count_ = static_cast<int>(blocks.size());
  }

  bool independent(const ElementSet& s) const override {
    detail::check_range(s, n_, "PartitionMatroid");
    std::vector<int> used(static_cast<std::size_t>(block_count_), 0);
    for (Element u : s) {
      int b = block_of_[static_cast<std::size_t>(u)];
      if (b == -1) continue;  // outside the universe, free
      if (++used[static_cast<std::size_t>(b)] > caps_[static_cast<std::size_t>(b)]) return false;
    }
    return true;
  }
  int ground_size() const override { return n_; }
  int extendibility() const override { return 1; }
  std::string kind() const override { return "partition"; }

  std::vector<std::vector<Element>> blocks() const {
    std::vector<std::vector<Element>> out(static_cast<std::size_t>(block_count_));
    for (int u = 0; u < n_; ++u) {
      int b = block_of_[static_cast<std::size_t>(u)];
      if (b != -1) out[static_cast<std::size_t>(b)].push_back(u);
    }
    return out;
  }
  const std::vector<int>& caps() const { return caps_; }

 private:
  int n_;
  std::vector<int> caps_;
  std::vector<int> block_of_;
  int block_count_ = 0;
};

// Edge subsets without cycles. Element i is the edge (ends_[i].first,
// ends_[i].second). The union-find scratch is rebuilt per query: queries
// arrive for arbitrary sets, not incremental chains.
class GraphicMatroid : public IndependenceSystem {
 public:
  GraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges)
      : vertices_(vertices), ends_(std::move(edges)) {
    if (vertices < 0) throw std::invalid_argument("GraphicMatroid: negative vertex count");
    for (const auto& [a, b] : ends_)
      if (a < 0 || a >= vertices || b < 0 || b >= vertices)
        throw std::invalid_argument("GraphicMatroid: edge endpoint out of range");
  }

  bool independent(const ElementSet& s) const override {
    detail::check_range(s, ground_size(), "GraphicMatroid");
    std::vector<int> parent(static_cast<std::size_t>(vertices_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
      }
      return v;
    };
    for (Element e : s) {
      auto [a, b] = ends_[static_cast<std::size_t>(e)];
      int ra = find(a), rb = find(b);
      if (ra == rb) return false;  // closing a cycle (covers self-loops)
      parent[static_cast<std::size_t>(ra)] = rb;
    }
    return true;
  }
  int ground_size() const override { return static_cast<int>(ends_.size()); }
  int extendibility() const override { return 1; }
  std::string kind() const override { return "graphic"; }
  int vertex_count() const { return vertices_; }
  std::pair<int, int> edge(Element e) const { return ends_[static_cast<std::size_t>(e)]; }

 private:
  int vertices_;
  std::vector<std::pair<int, int>> ends_;
};

// sum of sizes <= capacity, sizes in [1, p]. p-extendible but not a matchoid.
class BoundedKnapsack : public IndependenceSystem {
 public:
  BoundedKnapsack(std::vector<double> sizes, double capacity)
      : sizes_(std::move(sizes)), capacity_(capacity) {
    if (capacity < 0.0) throw std::invalid_argument("BoundedKnapsack: negative capacity");
    double max_size = 1.0;
    for (double s : sizes_) {
      if (s < 1.0) throw std::invalid_argument("BoundedKnapsack: sizes must be >= 1");
      max_size = std::max(max_size, s);
    }
    p_ = static_cast<int>(std::ceil(max_size));
  }

  bool independent(const ElementSet& s) const override {
    detail::check_range(s, ground_size(), "BoundedKnapsack");
    double total = 0.0;
    for (Element u : s) total += sizes_[static_cast<std::size_t>(u)];
    return total <= capacity_;
  }
  int ground_size() const override { return static_cast<int>(sizes_.size()); }
  int extendibility() const override { return p_; }
  std::string kind() const override { return "knapsack"; }
  double capacity() const { return capacity_; }
  double size_of(Element u) const { return sizes_[static_cast<std::size_t>(u)]; }

 private:
  std::vector<double> sizes_;
  double capacity_;
  int p_;
};

// m matroids over (possibly overlapping) ground subsets N_ℓ; S is independent
// iff S ∩ N_ℓ is independent in every member. p = the largest number of
// ground subsets any element belongs to, computed from the members.
class Matchoid : public IndependenceSystem {
 public:
  struct Member {
    std::shared_ptr<const IndependenceSystem> matroid;
    ElementSet ground;
  };

  Matchoid(int n, std::vector<Member> members) : n_(n), members_(std::move(members)) {
    if (n < 0) throw std::invalid_argument("Matchoid: negative ground size");
    std::vector<int> multiplicity(static_cast<std::size_t>(n), 0);
    for (const auto& m : members_) {
      if (!m.matroid) throw std::invalid_argument("Matchoid: null member");
      if (m.matroid->extendibility() != 1)
        throw std::invalid_argument("Matchoid: members must be matroids");
      for (Element u : m.ground) {
        if (u < 0 || u >= n)
          throw std::invalid_argument("Matchoid: member ground element out of range");
        ++multiplicity[static_cast<std::size_t>(u)];
      }
    }
    p_ = 0;
    for (int mult : multiplicity) p_ = std::max(p_, mult);
  }

  bool independent(const ElementSet& s) const override {
    std::uint64_t cost = 0;
    return independent_counted(s, cost);
  }

  // Short-circuits on the first violated member; the cost equals the number
  // of member-matroid queries actually issued.
  bool independent_counted(const ElementSet& s, std::uint64_t& cost) const override {
    detail::check_range(s, n_, "Matchoid");
    cost = 0;
    for (int ell = 0; ell < member_count(); ++ell) {
      ++cost;
      if (!member_independent(ell, s)) return false;
    }
    return true;
  }

  int ground_size() const override { return n_; }
  int extendibility() const override { return p_; }
  std::string kind() const override { return "matchoid"; }

  int member_count() const { return static_cast<int>(members_.size()); }
  const Member& member(int ell) const { return members_[static_cast<std::size_t>(ell)]; }

  // Single member-matroid query: independence of S restricted to N_ℓ.
  bool member_independent(int ell, const ElementSet& s) const {
    const Member& m = members_[static_cast<std::size_t>(ell)];
    return m.matroid->independent(s.set_intersect(m.ground));
  }

 private:
  int n_;
  std::vector<Member> members_;
  int p_;
};

// Member matroids violated by adding u to S. Requires S independent, u ∉ S.
inline std::vector<int> matchoid_violated_members(const Matchoid& matchoid, const ElementSet& s,
                                                  Element u) {
  if (s.contains(u))
    throw std::invalid_argument("matchoid_violated_members: u already in S");
  if (!matchoid.independent(s))
    throw std::invalid_argument("matchoid_violated_members: S is dependent");
  ElementSet grown = s.with(u);
  std::vector<int> violated;
  for (int ell = 0; ell < matchoid.member_count(); ++ell)
    if (!matchoid.member_independent(ell, grown)) violated.push_back(ell);
  return violated;
}

namespace detail {

inline std::vector<char> independence_table(const IndependenceSystem& sys, int max_n) {
  int n = sys.ground_size();
  if (n > max_n)
    throw std::invalid_argument("exhaustive constraint check: ground set too large");
  std::vector<char> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask)
    table[mask] = sys.independent(ElementSet::from_mask(mask)) ? 1 : 0;
  return table;
}

}  // namespace detail

// S ∈ I and A ⊆ S imply A ∈ I, exhaustively. It suffices to remove single
// elements: dependence propagates upward by induction.
inline ValidationReport validate_downward_closed(const IndependenceSystem& sys) {
  int n = sys.ground_size();
  auto table = detail::independence_table(sys, 16);
  if (!table[0]) return ValidationReport::fail("empty set is dependent");
  for (std::uint64_t mask = 1; mask < table.size(); ++mask) {
    if (!table[mask]) continue;
    for (int e = 0; e < n; ++e) {
      std::uint64_t bit = std::uint64_t{1} << e;
      if ((mask & bit) && !table[mask & ~bit])
        return ValidationReport::fail("downward closure violated below S=" +
                                      detail::mask_string(mask));
    }
  }
  return ValidationReport::pass();
}

// Exhaustive matroid axioms: empty set independent, downward closure, and the
// exchange axiom (|A| < |B| implies some u in B\A with A+u independent).
inline ValidationReport validate_matroid(const IndependenceSystem& sys) {
  int n = sys.ground_size();
  if (n > 12) throw std::invalid_argument("validate_matroid: intended for n <= 12");
  auto down = validate_downward_closed(sys);
  if (!down) return down;
  auto table = detail::independence_table(sys, 12);

  std::vector<std::uint64_t> independent_masks;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask)
    if (table[mask]) independent_masks.push_back(mask);

  auto popcount = [](std::uint64_t m) { return __builtin_popcountll(m); };
  for (std::uint64_t a : independent_masks) {
    int ca = popcount(a);
    for (std::uint64_t b : independent_masks) {
      if (popcount(b) <= ca) continue;
      std::uint64_t candidates = b & ~a;
      bool found = false;
      while (candidates != 0) {
        std::uint64_t bit = candidates & (~candidates + 1);
        if (table[a | bit]) {
          found = true;
          break;
        }
        candidates &= candidates - 1;
      }
      if (!found)
        return ValidationReport::fail("exchange axiom violated: A=" + detail::mask_string(a) +
                                      " B=" + detail::mask_string(b));
    }
  }
  return ValidationReport::pass();
}

// Smallest p such that the system is p-extendible, by full enumeration:
// for every independent A, extension B and feasible new element e, the
// smallest removal set Y ⊆ B\A with (B\Y)+e independent is measured, and the
// maximum over all triples is returned. Requires a downward-closed system.
inline int measure_extendibility(const IndependenceSystem& sys) {
  int n = sys.ground_size();
  if (n > 12) throw std::invalid_argument("measure_extendibility: intended for n <= 12");
  auto table = detail::independence_table(sys, 12);
  auto popcount = [](std::uint64_t m) { return __builtin_popcountll(m); };

  int needed = 0;
  for (std::uint64_t b = 0; b < table.size(); ++b) {
    if (!table[b]) continue;
    std::uint64_t a = b;
    while (true) {  // A over submasks of B; independent by downward closure
      for (int e = 0; e < n; ++e) {
        std::uint64_t ebit = std::uint64_t{1} << e;
        if (b & ebit) continue;  // Y = ∅ restores independence trivially
        if (!table[a | ebit]) continue;
        if (table[b | ebit]) continue;  // removal-free insertion
        std::uint64_t removable = b & ~a;
        int best = popcount(removable);  // Y = B \ A always works
        std::uint64_t y = removable;
        while (y != 0) {
          y = (y - 1) & removable;
          int cy = popcount(y);
          if (cy < best && table[(b & ~y) | ebit]) best = cy;
          if (y == 0) break;
        }
        needed = std::max(needed, best);
      }
      if (a == 0) break;
      a = (a - 1) & b;
    }
  }
  return needed;
}

}  // namespace submax
