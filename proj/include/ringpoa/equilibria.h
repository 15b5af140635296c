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

#ifndef RINGPOA_EQUILIBRIA_H_
#define RINGPOA_EQUILIBRIA_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "ringpoa/ring_model.h"

namespace ringpoa {

inline constexpr int kDefaultAgentLimit = 20;

// An agent that strictly gains by switching to its other path.
struct DeviationWitness {
  int agent = -1;
  LatencyValue current_latency = 0;
  LatencyValue deviation_latency = 0;
};

struct NashCheck {
  bool is_nash = true;
  std::optional<DeviationWitness> witness;
};

// Latency of `agent` on its alternative path after moving there.
LatencyValue DeviationLatency(const RingInstance& instance,
                              const Routing& routing, int agent);

// Nash iff no agent strictly improves by switching. The witness is the
// lowest-indexed improving agent.
NashCheck IsNash(const RingInstance& instance, const Routing& routing);

// Rosenthal potential: sum over links of l_e(1) + ... + l_e(n_e).
std::int64_t Potential(const RingInstance& instance, const Routing& routing);

struct BestResponseRun {
  Routing routing;
  std::int64_t moves = 0;
};

// Sequential best response: repeatedly scan agents in index order and apply
// the first strictly improving switch. Each move lowers the potential by at
// least one, so at most Potential(start) moves happen.
BestResponseRun BestResponse(const RingInstance& instance,
                             const Routing& start);

// Every Nash routing, in lexicographic order (cw before ccw).
// Throws std::length_error when k exceeds `limit`.
std::vector<Routing> EnumerateNash(const RingInstance& instance,
                                   int limit = kDefaultAgentLimit,
                                   int jobs = 1);

// The Nash routing with the largest M; ties go to the lexicographically
// first routing.
Routing WorstNash(const RingInstance& instance, int limit = kDefaultAgentLimit,
                  int jobs = 1);

// Shared guard for the exhaustive routines.
void CheckAgentLimit(const RingInstance& instance, int limit);

}  // namespace ringpoa

#endif  // RINGPOA_EQUILIBRIA_H_
