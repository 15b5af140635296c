// Copyright 2026 The ringpoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RINGPOA_OPTIMUM_H_
#define RINGPOA_OPTIMUM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "ringpoa/equilibria.h"
#include "ringpoa/rational.h"
#include "ringpoa/ring_model.h"

namespace ringpoa {

struct OptimumResult {
  // M*: the smallest achievable maximum latency.
  LatencyValue value = 0;
  // Lexicographically first routing attaining `value`.
  Routing routing;
  // Search nodes visited by the branch and bound (diagnostic).
  std::int64_t nodes = 0;
};

// Exact min-max routing by depth-first branch and bound over agents in index
// order. Loads only grow as agents are added, so the latency of every
// committed agent under the partial loads, and the cheaper orientation of
// every uncommitted agent with one unit added, are valid lower bounds.
OptimumResult ExactOptimum(const RingInstance& instance,
                           int limit = kDefaultAgentLimit);

// Every routing attaining M*, in lexicographic order.
std::vector<Routing> OptimalRoutings(const RingInstance& instance,
                                     int limit = kDefaultAgentLimit);

struct MinHResult {
  Routing routing;
  // Number of agents routed differently from the reference Nash routing.
  int h = 0;
  LatencyValue value = 0;
};

// Among all optimal routings, one that agrees with `nash` on the most agents.
// Ties go to the lexicographically first routing.
MinHResult MinHOptimum(const RingInstance& instance, const Routing& nash,
                       int limit = kDefaultAgentLimit, int jobs = 1);

struct PoaResult {
  LatencyValue nash_value = 0;  // M of the worst Nash routing
  LatencyValue opt_value = 0;   // M*
  Routing worst_nash;
  // Unset when the optimum is zero.
  std::optional<Rational> ratio;
  bool degenerate() const { return !ratio.has_value(); }
};

// Exact price of anarchy M(worst Nash) / M*.
PoaResult Poa(const RingInstance& instance, int limit = kDefaultAgentLimit,
              int jobs = 1);

}  // namespace ringpoa

#endif  // RINGPOA_OPTIMUM_H_
