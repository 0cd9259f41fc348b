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
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace submax {

// Elements are identified by their index in the ground set. The index order
// is total and fixed; it doubles as stream arrival order and as the
// tie-breaking order used by every algorithm in this library.
using Element = int;

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("GroundSet: negative size");
  }
  int size() const { return n_; }
  bool contains(Element u) const { return u >= 0 && u < n_; }

 private:
  int n_ = 0;
};

// A set of element indices, kept sorted ascending. No duplicates.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<Element> init) : items_(init) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  static ElementSet full(int n) {
    ElementSet s;
    s.items_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.items_[static_cast<std::size_t>(i)] = i;
    return s;
  }

  static ElementSet from_mask(std::uint64_t mask) {
    ElementSet s;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
      if (mask & 1u) s.items_.push_back(i);
    return s;
  }

  std::uint64_t to_mask() const {
    std::uint64_t mask = 0;
    for (Element u : items_) {
      if (u >= 64) throw std::domain_error("ElementSet::to_mask: index >= 64");
      mask |= std::uint64_t{1} << u;
    }
    return mask;
  }

  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }

  bool contains(Element u) const {
    return std::binary_search(items_.begin(), items_.end(), u);
  }

  // Returns false when u was already present.
  bool insert(Element u) {
    auto it = std::lower_bound(items_.begin(), items_.end(), u);
    if (it != items_.end() && *it == u) return false;
    items_.insert(it, u);
    return true;
  }

  bool erase(Element u) {
    auto it = std::lower_bound(items_.begin(), items_.end(), u);
    if (it == items_.end() || *it != u) return false;
    items_.erase(it);
    return true;
  }

  ElementSet with(Element u) const {
    ElementSet s = *this;
    s.insert(u);
    return s;
  }

  ElementSet without(Element u) const {
    ElementSet s = *this;
    s.erase(u);
    return s;
  }

  ElementSet set_union(const ElementSet& other) const {
    ElementSet s;
    s.items_.reserve(items_.size() + other.items_.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                   other.items_.end(), std::back_inserter(s.items_));
    return s;
  }

  ElementSet set_minus(const ElementSet& other) const {
    ElementSet s;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(s.items_));
    return s;
  }

  ElementSet set_intersect(const ElementSet& other) const {
    ElementSet s;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                          other.items_.end(), std::back_inserter(s.items_));
    return s;
  }

  bool is_subset_of(const ElementSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(),
                         items_.begin(), items_.end());
  }

  bool intersects(const ElementSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
      if (*a == *b) return true;
      if (*a < *b)
        ++a;
      else
        ++b;
    }
    return false;
  }

  // Ascending iteration.
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  const std::vector<Element>& items() const { return items_; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.items_ == b.items_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) {
    return !(a == b);
  }

  // Lexicographic order on the ascending index sequence; used for
  // deterministic tie-breaking among equal-value sets.
  static bool lex_less(const ElementSet& a, const ElementSet& b) {
    return std::lexicographical_compare(a.items_.begin(), a.items_.end(),
                                        b.items_.begin(), b.items_.end());
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(items_[i]);
    }
    out += "}";
    return out;
  }

 private:
  std::vector<Element> items_;
};

namespace detail {

inline void check_range(const ElementSet& s, int n, const char* who) {
  if (s.empty()) return;
  if (*s.begin() < 0 || *(s.end() - 1) >= n)
    throw std::out_of_range(std::string(who) + ": element index outside ground set");
}

}  // namespace detail

}  // namespace submax
