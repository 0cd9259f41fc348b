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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/oracles.hpp"

namespace submax {

struct ValidationReport {
  bool ok = true;
  std::string detail;  // human-readable witness on failure

  explicit operator bool() const { return ok; }
  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string d) { return {false, std::move(d)}; }
};

namespace detail {

// Full value table of f over all subsets, indexed by bit mask. Exhaustive
// validators work off this table instead of issuing 3^n oracle calls.
inline std::vector<double> value_table(const SetFunction& f, int n) {
  if (n > 20) throw std::invalid_argument("value_table: ground set too large");
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask)
    table[mask] = f.value(ElementSet::from_mask(mask));
  return table;
}

inline std::string mask_string(std::uint64_t mask) {
  return ElementSet::from_mask(mask).to_string();
}

}  // namespace detail

// Diminishing returns, exhaustively: f(A+e) - f(A) >= f(B+e) - f(B) for all
// A ⊆ B and e ∉ B. Intended for n <= 8.
inline ValidationReport validate_submodular(const SetFunction& f, double tol = 1e-9) {
  int n = f.ground_size();
  auto table = detail::value_table(f, n);
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t b = 0; b <= all; ++b) {
    // Enumerate A over submasks of B.
    std::uint64_t a = b;
    while (true) {
      for (int e = 0; e < n; ++e) {
        std::uint64_t bit = std::uint64_t{1} << e;
        if (b & bit) continue;
        double gain_small = table[a | bit] - table[a];
        double gain_large = table[b | bit] - table[b];
        if (gain_small < gain_large - tol) {
          return ValidationReport::fail(
              "submodularity violated: A=" + detail::mask_string(a) +
              " B=" + detail::mask_string(b) + " e=" + std::to_string(e));
        }
      }
      if (a == 0) break;
      a = (a - 1) & b;
    }
  }
  return ValidationReport::pass();
}

// f(A) <= f(B) for all A ⊆ B, exhaustively.
inline ValidationReport validate_monotone(const SetFunction& f, double tol = 1e-9) {
  int n = f.ground_size();
  auto table = detail::value_table(f, n);
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < count; ++b) {
    for (int e = 0; e < n; ++e) {
      std::uint64_t bit = std::uint64_t{1} << e;
      if (b & bit) continue;
      if (table[b | bit] < table[b] - tol)
        return ValidationReport::fail("monotonicity violated: S=" + detail::mask_string(b) +
                                      " e=" + std::to_string(e));
    }
  }
  return ValidationReport::pass();
}

inline ValidationReport validate_nonnegative(const SetFunction& f, double tol = 1e-9) {
  int n = f.ground_size();
  auto table = detail::value_table(f, n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask)
    if (table[mask] < -tol)
      return ValidationReport::fail("negative value at S=" + detail::mask_string(mask));
  return ValidationReport::pass();
}

// Prefix form of diminishing returns: for fixed u and chains S ⊆ S' of
// elements with index below u, f(u : S') <= f(u : S).
inline ValidationReport validate_arrival_prefix_monotone(const SetFunction& f,
                                                         double tol = 1e-9) {
  int n = f.ground_size();
  auto table = detail::value_table(f, n);
  for (int u = 0; u < n; ++u) {
    std::uint64_t prefix_all = (std::uint64_t{1} << u) - 1;
    std::uint64_t ubit = std::uint64_t{1} << u;
    std::uint64_t sp = prefix_all;
    while (true) {  // S' over subsets of the prefix
      std::uint64_t s = sp;
      while (true) {  // S over submasks of S'
        double wide = table[sp | ubit] - table[sp];
        double narrow = table[s | ubit] - table[s];
        if (wide > narrow + tol)
          return ValidationReport::fail("arrival prefix property violated at u=" +
                                        std::to_string(u));
        if (s == 0) break;
        s = (s - 1) & sp;
      }
      if (sp == 0) break;
      sp = (sp - 1) & prefix_all;
    }
  }
  return ValidationReport::pass();
}

}  // namespace submax
