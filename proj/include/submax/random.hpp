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
#include <vector>

namespace submax {

// 64-bit finalizer (splitmix64). Used for per-element coins and for deriving
// per-trial seeds from a master seed, so results never depend on the standard
// library's distribution implementations.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Per-trial seed derived from a master seed. trial 0 maps to the master seed
// itself so a single-trial run is reproducible from the seed alone.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t trial) {
  if (trial == 0) return master;
  return mix64(master ^ mix64(trial));
}

inline double to_unit_interval(std::uint64_t x) {
  // 53 mantissa bits; result lies in [0, 1).
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// The per-element independent coins that drive subsampling. bits[i] depends
// only on (seed, i, q), so the same vector feeds an offline run and its
// instrumented twin, and the consumption order is irrelevant.
struct SampleBits {
  std::vector<bool> bits;
  double q = 1.0;
  std::uint64_t seed = 0;

  bool operator[](int i) const { return bits[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(bits.size()); }
  int ones() const {
    int c = 0;
    for (bool b : bits) c += b ? 1 : 0;
    return c;
  }

  static SampleBits all_ones(int n) {
    SampleBits s;
    s.bits.assign(static_cast<std::size_t>(n), true);
    s.q = 1.0;
    return s;
  }

  static SampleBits from_mask(int n, std::uint64_t mask, double q) {
    SampleBits s;
    s.q = q;
    s.bits.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    return s;
  }

  std::uint64_t to_mask() const {
    std::uint64_t mask = 0;
    for (int i = 0; i < size(); ++i)
      if (bits[static_cast<std::size_t>(i)]) mask |= std::uint64_t{1} << i;
    return mask;
  }
};

inline SampleBits draw_sample_bits(int n, double q, std::uint64_t seed) {
  if (!(q > 0.0) || q > 1.0)
    throw std::invalid_argument("draw_sample_bits: q must lie in (0, 1]");
  if (n < 0) throw std::invalid_argument("draw_sample_bits: negative n");
  SampleBits s;
  s.q = q;
  s.seed = seed;
  s.bits.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double u = to_unit_interval(mix64(seed ^ mix64(static_cast<std::uint64_t>(i) + 1)));
    s.bits[static_cast<std::size_t>(i)] = u < q;
  }
  return s;
}

// Small deterministic generator for synthetic instances. Avoids
// std::*_distribution on purpose: those are not pinned across standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  double uniform01() { return to_unit_interval(next_u64()); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("Rng::uniform_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Multiply-shift bounded draw; bias is negligible for desk-scale spans.
    unsigned __int128 prod =
        static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(span);
    return lo + static_cast<int>(prod >> 64);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Dyadic rational in [lo, hi) with the given denominator power. These make
  // exact float arithmetic possible in zero-tolerance tests.
  double dyadic(double lo, double hi, int denom_pow = 2) {
    double scale = static_cast<double>(1 << denom_pow);
    int steps = static_cast<int>((hi - lo) * scale);
    return lo + static_cast<double>(uniform_int(0, steps - 1)) / scale;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      int j = uniform_int(0, i);
      std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace submax
