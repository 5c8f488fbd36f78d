// Copyright 2026 The GASM Authors
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

// Umbrella header.

#ifndef GASM_GASM_HPP_
#define GASM_GASM_HPP_

#include "gasm/attributes.hpp"
#include "gasm/baselines.hpp"
#include "gasm/bench.hpp"
#include "gasm/engine.hpp"
#include "gasm/generators.hpp"
#include "gasm/graph.hpp"
#include "gasm/graph_io.hpp"
#include "gasm/lap.hpp"
#include "gasm/matchers.hpp"
#include "gasm/metrics.hpp"
#include "gasm/qaplib.hpp"
#include "gasm/rng.hpp"

#endif  // GASM_GASM_HPP_
