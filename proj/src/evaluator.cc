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

#include "ringpoa/evaluator.h"

#include <algorithm>
#include <stdexcept>

namespace ringpoa {

RoutingEvaluator::RoutingEvaluator(const RingInstance& instance)
    : n_(instance.n),
      num_agents_(instance.num_agents()),
      stride_(instance.num_agents() + 2),
      paths_(instance),
      table_(static_cast<std::size_t>(instance.n) * (instance.num_agents() + 2)),
      choice_(instance.num_agents(), Orientation::kClockwise),
      loads_(instance.n, 0),
      latency_(instance.num_agents(), 0) {
  for (int e = 0; e < n_; ++e) {
    for (int load = 0; load < stride_; ++load) {
      table_[e * stride_ + load] = LinkLatency(instance, e, load);
    }
  }
}

void RoutingEvaluator::Evaluate(const Routing& routing) {
  if (routing.size() != num_agents_) {
    throw std::invalid_argument("routing size does not match agent count");
  }
  for (int i = 0; i < num_agents_; ++i) choice_[i] = routing[i];
  Finish();
}

void RoutingEvaluator::EvaluateMask(std::uint64_t mask) {
  for (int i = 0; i < num_agents_; ++i) {
    choice_[i] = ((mask >> (num_agents_ - 1 - i)) & 1u)
                     ? Orientation::kCounterclockwise
                     : Orientation::kClockwise;
  }
  Finish();
}

void RoutingEvaluator::Finish() {
  std::fill(loads_.begin(), loads_.end(), 0);
  for (int i = 0; i < num_agents_; ++i) {
    for (int e : paths_.path(i, choice_[i])) ++loads_[e];
  }
  max_latency_ = 0;
  for (int i = 0; i < num_agents_; ++i) {
    LatencyValue own = 0;
    for (int e : paths_.path(i, choice_[i])) own += link_latency(e, loads_[e]);
    latency_[i] = own;
    max_latency_ = std::max(max_latency_, own);
  }
}

LatencyValue RoutingEvaluator::DeviationLatency(int agent) const {
  LatencyValue total = 0;
  for (int e : paths_.path(agent, Flip(choice_[agent]))) {
    total += link_latency(e, loads_[e] + 1);
  }
  return total;
}

int RoutingEvaluator::FirstImprovingAgent() const {
  for (int i = 0; i < num_agents_; ++i) {
    if (DeviationLatency(i) < latency_[i]) return i;
  }
  return -1;
}

}  // namespace ringpoa
