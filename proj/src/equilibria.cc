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

#include "ringpoa/equilibria.h"

#include <stdexcept>
#include <string>

#include "ringpoa/evaluator.h"
#include "ringpoa/parallel.h"

namespace ringpoa {

void CheckAgentLimit(const RingInstance& instance, int limit) {
  if (instance.num_agents() > limit || instance.num_agents() > 62) {
    throw std::length_error("instance too large: k=" +
                            std::to_string(instance.num_agents()) +
                            " exceeds limit " + std::to_string(limit));
  }
}

LatencyValue DeviationLatency(const RingInstance& instance,
                              const Routing& routing, int agent) {
  const std::vector<std::int64_t> loads = Loads(instance, routing);
  const LinkSet alt = PathLinks(instance, agent, Flip(routing[agent]));
  LatencyValue total = 0;
  for (int e : alt.indices()) total += LinkLatency(instance, e, loads[e] + 1);
  return total;
}

NashCheck IsNash(const RingInstance& instance, const Routing& routing) {
  RoutingEvaluator eval(instance);
  eval.Evaluate(routing);
  const int mover = eval.FirstImprovingAgent();
  if (mover < 0) return {};
  return NashCheck{false, DeviationWitness{mover, eval.agent_latency(mover),
                                           eval.DeviationLatency(mover)}};
}

std::int64_t Potential(const RingInstance& instance, const Routing& routing) {
  const std::vector<std::int64_t> loads = Loads(instance, routing);
  std::int64_t phi = 0;
  for (int e = 0; e < instance.n; ++e) {
    for (std::int64_t j = 1; j <= loads[e]; ++j) {
      phi += LinkLatency(instance, e, j);
    }
  }
  return phi;
}

BestResponseRun BestResponse(const RingInstance& instance,
                             const Routing& start) {
  ValidateOrThrow(instance);
  RoutingEvaluator eval(instance);
  BestResponseRun run{start, 0};
  eval.Evaluate(run.routing);
  for (int mover = eval.FirstImprovingAgent(); mover >= 0;
       mover = eval.FirstImprovingAgent()) {
    run.routing.flip(mover);
    ++run.moves;
    eval.Evaluate(run.routing);
  }
  return run;
}

std::vector<Routing> EnumerateNash(const RingInstance& instance, int limit,
                                   int jobs) {
  ValidateOrThrow(instance);
  CheckAgentLimit(instance, limit);
  const int k = instance.num_agents();
  const std::uint64_t count = std::uint64_t{1} << k;
  std::vector<std::vector<std::uint64_t>> found(std::max(1, jobs));
  ForEachBlock(count, jobs, [&](int block, std::uint64_t begin,
                                std::uint64_t end) {
    RoutingEvaluator eval(instance);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      eval.EvaluateMask(mask);
      if (eval.IsNash()) found[block].push_back(mask);
    }
  });
  std::vector<Routing> out;
  for (const auto& masks : found) {
    for (std::uint64_t mask : masks) out.push_back(Routing::FromMask(k, mask));
  }
  return out;
}

Routing WorstNash(const RingInstance& instance, int limit, int jobs) {
  ValidateOrThrow(instance);
  CheckAgentLimit(instance, limit);
  const int k = instance.num_agents();
  const std::uint64_t count = std::uint64_t{1} << k;
  struct Best {
    LatencyValue value = -1;
    std::uint64_t mask = 0;
  };
  std::vector<Best> best(std::max(1, jobs));
  ForEachBlock(count, jobs, [&](int block, std::uint64_t begin,
                                std::uint64_t end) {
    RoutingEvaluator eval(instance);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      eval.EvaluateMask(mask);
      if (eval.max_latency() <= best[block].value) continue;
      if (eval.IsNash()) best[block] = {eval.max_latency(), mask};
    }
  });
  Best overall;
  for (const Best& b : best) {
    if (b.value > overall.value) overall = b;
  }
  if (overall.value < 0) {
    // Unreachable for a finite potential game.
    throw std::logic_error("no Nash equilibrium found");
  }
  return Routing::FromMask(k, overall.mask);
}

}  // namespace ringpoa
