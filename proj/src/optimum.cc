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

#include "ringpoa/optimum.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "ringpoa/evaluator.h"
#include "ringpoa/parallel.h"

namespace ringpoa {
namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const RingInstance& instance)
      : eval_(instance),
        k_(instance.num_agents()),
        loads_(instance.n, 0),
        choice_(instance.num_agents(), Orientation::kClockwise) {}

  OptimumResult Run() {
    Descend(0);
    return OptimumResult{incumbent_, Routing(best_), nodes_};
  }

 private:
  LatencyValue PathLatency(int agent, Orientation o, int extra) const {
    LatencyValue total = 0;
    for (int e : eval_.paths().path(agent, o)) {
      total += eval_.link_latency(e, loads_[e] + extra);
    }
    return total;
  }

  // Lower bound on M of any completion of choices 0..depth-1.
  LatencyValue LowerBound(int depth) const {
    LatencyValue bound = 0;
    for (int i = 0; i < depth; ++i) {
      bound = std::max(bound, PathLatency(i, choice_[i], 0));
    }
    for (int j = depth; j < k_; ++j) {
      bound = std::max(bound,
                       std::min(PathLatency(j, Orientation::kClockwise, 1),
                                PathLatency(j, Orientation::kCounterclockwise,
                                            1)));
    }
    return bound;
  }

  void Descend(int depth) {
    ++nodes_;
    const LatencyValue bound = LowerBound(depth);
    if (bound >= incumbent_) return;
    if (depth == k_) {
      incumbent_ = bound;
      best_ = choice_;
      return;
    }
    for (Orientation o :
         {Orientation::kClockwise, Orientation::kCounterclockwise}) {
      choice_[depth] = o;
      for (int e : eval_.paths().path(depth, o)) ++loads_[e];
      Descend(depth + 1);
      for (int e : eval_.paths().path(depth, o)) --loads_[e];
    }
    choice_[depth] = Orientation::kClockwise;
  }

  RoutingEvaluator eval_;
  int k_;
  std::vector<std::int64_t> loads_;
  std::vector<Orientation> choice_;
  std::vector<Orientation> best_;
  LatencyValue incumbent_ = std::numeric_limits<LatencyValue>::max();
  std::int64_t nodes_ = 0;
};

}  // namespace

OptimumResult ExactOptimum(const RingInstance& instance, int limit) {
  ValidateOrThrow(instance);
  CheckAgentLimit(instance, limit);
  return BranchAndBound(instance).Run();
}

std::vector<Routing> OptimalRoutings(const RingInstance& instance, int limit) {
  const LatencyValue best = ExactOptimum(instance, limit).value;
  const int k = instance.num_agents();
  RoutingEvaluator eval(instance);
  std::vector<Routing> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    eval.EvaluateMask(mask);
    if (eval.max_latency() == best) out.push_back(Routing::FromMask(k, mask));
  }
  return out;
}

MinHResult MinHOptimum(const RingInstance& instance, const Routing& nash,
                       int limit, int jobs) {
  const LatencyValue best = ExactOptimum(instance, limit).value;
  const int k = instance.num_agents();
  if (nash.size() != k) {
    throw std::invalid_argument("routing size does not match agent count");
  }
  const std::uint64_t nash_mask = nash.ToMask();
  struct Pick {
    int h = std::numeric_limits<int>::max();
    std::uint64_t mask = 0;
  };
  std::vector<Pick> picks(std::max(1, jobs));
  ForEachBlock(std::uint64_t{1} << k, jobs,
               [&](int block, std::uint64_t begin, std::uint64_t end) {
                 RoutingEvaluator eval(instance);
                 for (std::uint64_t mask = begin; mask < end; ++mask) {
                   const int h = std::popcount(mask ^ nash_mask);
                   if (h >= picks[block].h) continue;
                   eval.EvaluateMask(mask);
                   if (eval.max_latency() == best) picks[block] = {h, mask};
                 }
               });
  Pick overall;
  for (const Pick& p : picks) {
    if (p.h < overall.h) overall = p;
  }
  return MinHResult{Routing::FromMask(k, overall.mask), overall.h, best};
}

PoaResult Poa(const RingInstance& instance, int limit, int jobs) {
  PoaResult result;
  result.worst_nash = WorstNash(instance, limit, jobs);
  result.nash_value = MaxLatency(instance, result.worst_nash);
  result.opt_value = ExactOptimum(instance, limit).value;
  if (result.opt_value > 0) {
    result.ratio = Rational(result.nash_value, result.opt_value);
  }
  return result;
}

}  // namespace ringpoa
