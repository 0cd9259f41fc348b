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

#include "submax/constraints.hpp"
#include "submax/element_set.hpp"
#include "submax/expectation.hpp"
#include "submax/generators.hpp"
#include "submax/harness.hpp"
#include "submax/instance_io.hpp"
#include "submax/objectives.hpp"
#include "submax/offline.hpp"
#include "submax/oracles.hpp"
#include "submax/random.hpp"
#include "submax/run_report.hpp"
#include "submax/streaming.hpp"
#include "submax/validators.hpp"
