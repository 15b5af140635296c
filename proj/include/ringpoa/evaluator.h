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

#ifndef RINGPOA_EVALUATOR_H_
#define RINGPOA_EVALUATOR_H_

#include <cstdint>
#include <vector>

#include "ringpoa/ring_model.h"

namespace ringpoa {

// Reusable scratch state for evaluating many routings of one instance.
// Link latencies are tabulated for every load 0..k+1 up front.
class RoutingEvaluator {
 public:
  explicit RoutingEvaluator(const RingInstance& instance);

  void Evaluate(const Routing& routing);
  void EvaluateMask(std::uint64_t mask);

  int num_agents() const { return num_agents_; }
  std::int64_t load(int link) const { return loads_[link]; }
  LatencyValue agent_latency(int agent) const { return latency_[agent]; }
  LatencyValue max_latency() const { return max_latency_; }

  // Latency `agent` would see on its other path, everyone else fixed.
  LatencyValue DeviationLatency(int agent) const;
  // Lowest-indexed agent with a strictly improving switch, or -1.
  int FirstImprovingAgent() const;
  bool IsNash() const { return FirstImprovingAgent() < 0; }

  LatencyValue link_latency(int link, std::int64_t load) const {
    return table_[link * stride_ + load];
  }
  const PathTable& paths() const { return paths_; }

 private:
  void Finish();

  int n_;
  int num_agents_;
  int stride_;
  PathTable paths_;
  std::vector<LatencyValue> table_;
  std::vector<Orientation> choice_;
  std::vector<std::int64_t> loads_;
  std::vector<LatencyValue> latency_;
  LatencyValue max_latency_ = 0;
};

}  // namespace ringpoa

#endif  // RINGPOA_EVALUATOR_H_
