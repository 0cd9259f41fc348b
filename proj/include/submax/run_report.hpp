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
#include <string>
#include <vector>

#include "submax/element_set.hpp"

namespace submax {

// Outcome of a single algorithm run. `value` is recomputed from the solution
// at the end of the run; that one extra evaluate is included in
// `value_queries` and flagged by `final_reevaluation_queries`.
struct RunReport {
  std::string algorithm;
  ElementSet solution;
  // Elements in acceptance order; the offline equivalence checks compare
  // these sequences, not just the final sets.
  std::vector<Element> selection_sequence;
  double value = 0.0;
  std::uint64_t value_queries = 0;
  std::uint64_t independence_queries = 0;
  std::uint64_t final_reevaluation_queries = 0;
  // High-water mark of elements held at once. Offline algorithms store the
  // whole ground set; streaming stores the solution plus the arriving element.
  int peak_stored_elements = 0;
  // Set when the objective does not claim non-negativity: the approximation
  // guarantees do not apply to such a run.
  bool guarantees_void = false;
  std::uint64_t seed = 0;
  double q = 0.0;
  double c = 0.0;  // streaming acceptance parameter; 0 for offline runs
};

}  // namespace submax
