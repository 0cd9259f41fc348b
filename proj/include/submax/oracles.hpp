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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/random.hpp"

namespace submax {

// A set function given by value access only. Implementations are immutable
// after construction and safe to share across runs; all query counting lives
// in the per-run ValueOracle wrapper.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual double value(const ElementSet& s) const = 0;
  virtual int ground_size() const = 0;
  // Whether the function claims to be non-negative. Algorithms stamp their
  // reports "guarantees void" when this is false; nothing is assumed.
  virtual bool claims_nonnegative() const { return true; }
  virtual bool claims_monotone() const { return false; }
  virtual std::string kind() const = 0;
};

// Downward-closed set family given by membership access only. As with
// SetFunction, instances are immutable and counting is per-run.
class IndependenceSystem {
 public:
  virtual ~IndependenceSystem() = default;
  virtual bool independent(const ElementSet& s) const = 0;
  virtual int ground_size() const = 0;
  // Declared extendibility parameter p (1 for matroids). Used to pick default
  // sampling probabilities; validated empirically on small instances.
  virtual int extendibility() const = 0;
  virtual std::string kind() const = 0;

  // Membership test together with its cost in oracle queries. The default
  // charges one query; composite systems override it to charge one query per
  // member system actually consulted.
  virtual bool independent_counted(const ElementSet& s, std::uint64_t& cost) const {
    cost = 1;
    return independent(s);
  }
};

// Counting wrapper around a SetFunction. Every evaluate costs exactly one
// query; derived queries (marginals) cost exactly their underlying evaluates.
class ValueOracle {
 public:
  explicit ValueOracle(const SetFunction& f) : f_(&f) {}

  double evaluate(const ElementSet& s) {
    ++queries_;
    return f_->value(s);
  }

  // f(u | S) = f(S + u) - f(S). Two evaluates, no caching.
  double marginal(Element u, const ElementSet& s) {
    return evaluate(s.with(u)) - evaluate(s);
  }

  // f(A | S) = f(S ∪ A) - f(S).
  double set_marginal(const ElementSet& a, const ElementSet& s) {
    return evaluate(s.set_union(a)) - evaluate(s);
  }

  // f(u : S) = f(u | S ∩ {elements arriving before u}). Index order is the
  // arrival order; recomputed fresh on every call.
  double arrival_marginal(Element u, const ElementSet& s) {
    ElementSet prefix;
    for (Element x : s) {
      if (x >= u) break;
      prefix.insert(x);
    }
    return marginal(u, prefix);
  }

  // f(T : S) = sum over u in T of f(u : S).
  double arrival_marginal_sum(const ElementSet& t, const ElementSet& s) {
    double total = 0.0;
    for (Element u : t) total += arrival_marginal(u, s);
    return total;
  }

  const SetFunction& function() const { return *f_; }
  std::uint64_t query_count() const { return queries_; }

 private:
  const SetFunction* f_;
  std::uint64_t queries_ = 0;
};

// Counting wrapper around an IndependenceSystem.
class IndependenceOracle {
 public:
  explicit IndependenceOracle(const IndependenceSystem& sys) : sys_(&sys) {}

  bool is_independent(const ElementSet& s) {
    std::uint64_t cost = 1;
    bool ok = sys_->independent_counted(s, cost);
    queries_ += cost;
    return ok;
  }

  // Direct charge for paths that query member systems individually
  // (the streaming exchange subroutine).
  void charge(std::uint64_t queries) { queries_ += queries; }

  const IndependenceSystem& system() const { return *sys_; }
  std::uint64_t query_count() const { return queries_; }

 private:
  const IndependenceSystem* sys_;
  std::uint64_t queries_ = 0;
};

// Arrival order of a stream: by default the element index order, optionally a
// seeded permutation. position[u] is the arrival position of element u.
struct StreamOrder {
  std::vector<Element> sequence;
  std::vector<int> position;

  int size() const { return static_cast<int>(sequence.size()); }

  static StreamOrder index_order(int n) {
    StreamOrder o;
    o.sequence.resize(static_cast<std::size_t>(n));
    o.position.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      o.sequence[static_cast<std::size_t>(i)] = i;
      o.position[static_cast<std::size_t>(i)] = i;
    }
    return o;
  }

  static StreamOrder permuted(int n, std::uint64_t seed) {
    StreamOrder o = index_order(n);
    Rng rng(seed);
    rng.shuffle(o.sequence);
    for (int pos = 0; pos < n; ++pos)
      o.position[static_cast<std::size_t>(o.sequence[static_cast<std::size_t>(pos)])] = pos;
    return o;
  }

  static StreamOrder from_sequence(std::vector<Element> seq) {
    StreamOrder o;
    o.sequence = std::move(seq);
    int n = static_cast<int>(o.sequence.size());
    o.position.assign(static_cast<std::size_t>(n), -1);
    for (int pos = 0; pos < n; ++pos) {
      Element u = o.sequence[static_cast<std::size_t>(pos)];
      if (u < 0 || u >= n || o.position[static_cast<std::size_t>(u)] != -1)
        throw std::invalid_argument("StreamOrder: sequence is not a permutation");
      o.position[static_cast<std::size_t>(u)] = pos;
    }
    return o;
  }
};

// f(u : S) with respect to an explicit arrival order.
inline double arrival_marginal(ValueOracle& f, Element u, const ElementSet& s,
                               const StreamOrder& order) {
  ElementSet prefix;
  int up = order.position[static_cast<std::size_t>(u)];
  for (Element x : s)
    if (order.position[static_cast<std::size_t>(x)] < up) prefix.insert(x);
  return f.evaluate(prefix.with(u)) - f.evaluate(prefix);
}

inline double arrival_marginal_sum(ValueOracle& f, const ElementSet& t, const ElementSet& s,
                                   const StreamOrder& order) {
  double total = 0.0;
  for (Element u : t) total += arrival_marginal(f, u, s, order);
  return total;
}

// Value comparisons used inside algorithms. epsilon widens or narrows the
// decision boundary; the default 0 reproduces the literal comparisons.
struct Tolerance {
  double epsilon = 0.0;
  bool strictly_positive(double v) const { return v > epsilon; }
  bool at_least(double a, double b) const { return a >= b - epsilon; }
};

}  // namespace submax
