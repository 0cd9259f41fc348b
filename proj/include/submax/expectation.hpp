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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "submax/random.hpp"

namespace submax {

inline constexpr int kMaxExactEnumeration = 14;

// Exact expectation over all 2^n coin vectors: sum of Pr[b] * branch(b) with
// Pr[b] = q^|b| (1-q)^(n-|b|). Branches are visited in ascending mask order
// so the reduction is deterministic.
template <typename BranchFn>
double enumerate_expectation(int n, double q, BranchFn&& branch) {
  if (n > kMaxExactEnumeration)
    throw std::invalid_argument(
        "enumerate_expectation: ground set too large for exact enumeration; "
        "use monte_carlo_expectation");
  if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("enumerate_expectation: bad q");
  std::vector<double> pow_q(static_cast<std::size_t>(n) + 1, 1.0);
  std::vector<double> pow_not_q(static_cast<std::size_t>(n) + 1, 1.0);
  for (int i = 1; i <= n; ++i) {
    pow_q[static_cast<std::size_t>(i)] = pow_q[static_cast<std::size_t>(i - 1)] * q;
    pow_not_q[static_cast<std::size_t>(i)] = pow_not_q[static_cast<std::size_t>(i - 1)] * (1.0 - q);
  }
  double total = 0.0;
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    int ones = __builtin_popcountll(mask);
    double prob = pow_q[static_cast<std::size_t>(ones)] *
                  pow_not_q[static_cast<std::size_t>(n - ones)];
    if (prob == 0.0) continue;
    total += prob * branch(SampleBits::from_mask(n, mask, q));
  }
  return total;
}

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int runs = 0;
};

// Seeded Monte-Carlo estimate with standard error. Statistical by nature:
// never suitable for asserting theorem bounds.
template <typename BranchFn>
MonteCarloEstimate monte_carlo_expectation(int n, double q, std::uint64_t seed, int runs,
                                           BranchFn&& branch) {
  if (runs < 2) throw std::invalid_argument("monte_carlo_expectation: need at least 2 runs");
  std::vector<double> values(static_cast<std::size_t>(runs));
  for (int t = 0; t < runs; ++t)
    values[static_cast<std::size_t>(t)] = branch(draw_sample_bits(n, q, split_seed(seed, static_cast<std::uint64_t>(t))));
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= runs;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= (runs - 1);
  return {mean, std::sqrt(var / runs), runs};
}

}  // namespace submax
