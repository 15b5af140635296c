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

#include "ringpoa/ring_model.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ringpoa {

std::string_view ToString(Orientation o) {
  return o == Orientation::kClockwise ? "cw" : "ccw";
}

std::optional<Orientation> ParseOrientation(std::string_view text) {
  if (text == "cw") return Orientation::kClockwise;
  if (text == "ccw") return Orientation::kCounterclockwise;
  return std::nullopt;
}

LinkSet LinkSet::Full(int num_links) {
  LinkSet set(num_links);
  std::fill(set.mask_.begin(), set.mask_.end(), true);
  return set;
}

int LinkSet::size() const {
  return static_cast<int>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<int> LinkSet::indices() const {
  std::vector<int> out;
  for (int e = 0; e < universe(); ++e) {
    if (mask_[e]) out.push_back(e);
  }
  return out;
}

LinkSet LinkSet::Complement() const {
  LinkSet out(universe());
  for (int e = 0; e < universe(); ++e) out.mask_[e] = !mask_[e];
  return out;
}

LinkSet LinkSet::Intersect(const LinkSet& other) const {
  if (other.universe() != universe()) {
    throw std::invalid_argument("LinkSet universes differ");
  }
  LinkSet out(universe());
  for (int e = 0; e < universe(); ++e) out.mask_[e] = mask_[e] && other.mask_[e];
  return out;
}

LinkSet LinkSet::Union(const LinkSet& other) const {
  if (other.universe() != universe()) {
    throw std::invalid_argument("LinkSet universes differ");
  }
  LinkSet out(universe());
  for (int e = 0; e < universe(); ++e) out.mask_[e] = mask_[e] || other.mask_[e];
  return out;
}

Routing Routing::FromMask(int num_agents, std::uint64_t mask) {
  std::vector<Orientation> choices(num_agents, Orientation::kClockwise);
  for (int i = 0; i < num_agents; ++i) {
    if ((mask >> (num_agents - 1 - i)) & 1u) {
      choices[i] = Orientation::kCounterclockwise;
    }
  }
  return Routing(std::move(choices));
}

std::uint64_t Routing::ToMask() const {
  std::uint64_t mask = 0;
  for (Orientation o : choices_) {
    mask = (mask << 1) | (o == Orientation::kCounterclockwise ? 1u : 0u);
  }
  return mask;
}

int HammingDistance(const Routing& a, const Routing& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("routings have different agent counts");
  }
  int d = 0;
  for (int i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

std::string ToString(const Routing& routing) {
  std::string out = "[";
  for (int i = 0; i < routing.size(); ++i) {
    if (i > 0) out += ",";
    out += ToString(routing[i]);
  }
  return out + "]";
}

std::vector<std::string> Validate(const RingInstance& instance) {
  std::vector<std::string> errors;
  if (instance.n < 2) {
    errors.push_back("n must be at least 2 (got " +
                     std::to_string(instance.n) + ")");
  }
  if (instance.degree < 1) {
    errors.push_back("degree must be positive (got " +
                     std::to_string(instance.degree) + ")");
  }
  if (static_cast<int>(instance.links.size()) != instance.n) {
    errors.push_back("expected " + std::to_string(instance.n) +
                     " links, got " + std::to_string(instance.links.size()));
  }
  for (std::size_t j = 0; j < instance.links.size(); ++j) {
    const Link& link = instance.links[j];
    if (link.a < 0 || link.b < 0) {
      errors.push_back("link " + std::to_string(j) + ": negative coefficient");
    }
  }
  if (instance.agents.empty()) errors.push_back("at least one agent required");
  for (std::size_t i = 0; i < instance.agents.size(); ++i) {
    const Agent& agent = instance.agents[i];
    const bool in_range = agent.s >= 0 && agent.s < instance.n &&
                          agent.t >= 0 && agent.t < instance.n;
    if (!in_range) {
      errors.push_back("agent " + std::to_string(i) +
                       ": endpoint out of range");
    } else if (agent.s == agent.t) {
      errors.push_back("agent " + std::to_string(i) + ": s=t");
    }
  }
  return errors;
}

void ValidateOrThrow(const RingInstance& instance) {
  const std::vector<std::string> errors = Validate(instance);
  if (errors.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const std::string& e : errors) msg << " " << e << ";";
  throw std::invalid_argument(msg.str());
}

LinkSet PathLinks(const RingInstance& instance, int agent,
                  Orientation orientation) {
  if (agent < 0 || agent >= instance.num_agents()) {
    throw std::out_of_range("agent index " + std::to_string(agent) +
                            " out of range");
  }
  const Agent& st = instance.agents[agent];
  LinkSet cw(instance.n);
  for (int e = st.s; e != st.t; e = (e + 1) % instance.n) cw.insert(e);
  return orientation == Orientation::kClockwise ? cw : cw.Complement();
}

LinkSet ChosenPath(const RingInstance& instance, const Routing& routing,
                   int agent) {
  return PathLinks(instance, agent, routing[agent]);
}

std::vector<std::int64_t> Loads(const RingInstance& instance,
                                const Routing& routing) {
  if (routing.size() != instance.num_agents()) {
    throw std::invalid_argument("routing size does not match agent count");
  }
  std::vector<std::int64_t> loads(instance.n, 0);
  const PathTable paths(instance);
  for (int i = 0; i < routing.size(); ++i) {
    for (int e : paths.path(i, routing[i])) ++loads[e];
  }
  return loads;
}

LatencyValue LinkLatency(const RingInstance& instance, int link,
                         std::int64_t load) {
  const Link& l = instance.links.at(link);
  LatencyValue power = 1;
  for (int d = 0; d < instance.degree; ++d) {
    if (__builtin_mul_overflow(power, load, &power)) {
      throw std::overflow_error("latency overflow");
    }
  }
  LatencyValue term;
  if (__builtin_mul_overflow(l.a, power, &term) ||
      __builtin_add_overflow(term, l.b, &term)) {
    throw std::overflow_error("latency overflow");
  }
  return term;
}

LatencyValue Latency(const RingInstance& instance, const Routing& routing,
                     const LinkSet& links) {
  const std::vector<std::int64_t> loads = Loads(instance, routing);
  LatencyValue total = 0;
  for (int e : links.indices()) total += LinkLatency(instance, e, loads[e]);
  return total;
}

LatencyValue AgentLatency(const RingInstance& instance, const Routing& routing,
                          int agent) {
  return Latency(instance, routing, ChosenPath(instance, routing, agent));
}

LatencyValue RingLatency(const RingInstance& instance, const Routing& routing) {
  return Latency(instance, routing, LinkSet::Full(instance.n));
}

LatencyValue NormA(const RingInstance& instance, const LinkSet& links) {
  LatencyValue total = 0;
  for (int e : links.indices()) total += instance.links.at(e).a;
  return total;
}

LatencyValue NormB(const RingInstance& instance, const LinkSet& links) {
  LatencyValue total = 0;
  for (int e : links.indices()) total += instance.links.at(e).b;
  return total;
}

LatencyValue MaxLatency(const RingInstance& instance, const Routing& routing) {
  const std::vector<std::int64_t> loads = Loads(instance, routing);
  const PathTable paths(instance);
  LatencyValue worst = 0;
  for (int i = 0; i < routing.size(); ++i) {
    LatencyValue own = 0;
    for (int e : paths.path(i, routing[i])) {
      own += LinkLatency(instance, e, loads[e]);
    }
    worst = std::max(worst, own);
  }
  return worst;
}

PathTable::PathTable(const RingInstance& instance) {
  paths_.resize(2 * instance.agents.size());
  for (int i = 0; i < instance.num_agents(); ++i) {
    paths_[2 * i] = PathLinks(instance, i, Orientation::kClockwise).indices();
    paths_[2 * i + 1] =
        PathLinks(instance, i, Orientation::kCounterclockwise).indices();
  }
}

}  // namespace ringpoa
