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

#ifndef RINGPOA_RING_MODEL_H_
#define RINGPOA_RING_MODEL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringpoa/rational.h"

// Selfish ring routing instances and exact latency evaluation.
//
// Link j joins node j and node (j+1) mod n. The clockwise path of an agent
// (s, t) is the link run s, s+1, ..., t-1 (mod n); the counterclockwise path
// is its complement. With n = 2 the two links are parallel.

namespace ringpoa {

// Latencies of integer instances at integer loads are exact integers.
using LatencyValue = std::int64_t;

enum class Orientation : std::uint8_t { kClockwise = 0, kCounterclockwise = 1 };

constexpr Orientation Flip(Orientation o) {
  return o == Orientation::kClockwise ? Orientation::kCounterclockwise
                                      : Orientation::kClockwise;
}
std::string_view ToString(Orientation o);
std::optional<Orientation> ParseOrientation(std::string_view text);

// Latency a * x^degree + b at load x.
struct Link {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const Link&, const Link&) = default;
};

struct Agent {
  int s = 0;
  int t = 0;
  friend bool operator==(const Agent&, const Agent&) = default;
};

struct RingInstance {
  int n = 0;
  int degree = 1;
  std::vector<Link> links;
  std::vector<Agent> agents;

  int num_agents() const { return static_cast<int>(agents.size()); }
  friend bool operator==(const RingInstance&, const RingInstance&) = default;
};

// Set of links of a ring, stored as a membership mask over link indices.
class LinkSet {
 public:
  LinkSet() = default;
  explicit LinkSet(int num_links) : mask_(num_links, false) {}

  static LinkSet Full(int num_links);

  int universe() const { return static_cast<int>(mask_.size()); }
  bool contains(int link) const { return mask_.at(link); }
  void insert(int link) { mask_.at(link) = true; }
  void erase(int link) { mask_.at(link) = false; }
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<int> indices() const;

  LinkSet Complement() const;
  LinkSet Intersect(const LinkSet& other) const;
  LinkSet Union(const LinkSet& other) const;

  friend bool operator==(const LinkSet&, const LinkSet&) = default;

 private:
  std::vector<bool> mask_;
};

// One orientation per agent. Ordered lexicographically with clockwise first.
class Routing {
 public:
  Routing() = default;
  explicit Routing(std::vector<Orientation> choices)
      : choices_(std::move(choices)) {}
  Routing(int num_agents, Orientation all)
      : choices_(num_agents, all) {}

  // Bit (k-1-i) of `mask` set means agent i goes counterclockwise, so
  // ascending masks visit routings in lexicographic order.
  static Routing FromMask(int num_agents, std::uint64_t mask);
  std::uint64_t ToMask() const;

  int size() const { return static_cast<int>(choices_.size()); }
  Orientation operator[](int agent) const { return choices_.at(agent); }
  void set(int agent, Orientation o) { choices_.at(agent) = o; }
  void flip(int agent) { choices_.at(agent) = Flip(choices_.at(agent)); }
  const std::vector<Orientation>& choices() const { return choices_; }

  // Agents routed differently in `a` and `b`.
  friend int HammingDistance(const Routing& a, const Routing& b);

  friend bool operator==(const Routing&, const Routing&) = default;
  friend auto operator<=>(const Routing&, const Routing&) = default;

 private:
  std::vector<Orientation> choices_;
};

// "[cw,ccw,...]" for messages and witnesses.
std::string ToString(const Routing& routing);

// Every violated invariant, as human-readable messages. Empty means valid.
std::vector<std::string> Validate(const RingInstance& instance);
// Throws std::invalid_argument listing all violations.
void ValidateOrThrow(const RingInstance& instance);

// Link set of `agent`'s path in the given orientation.
// Throws std::out_of_range for a bad agent index.
LinkSet PathLinks(const RingInstance& instance, int agent,
                  Orientation orientation);
LinkSet ChosenPath(const RingInstance& instance, const Routing& routing,
                   int agent);

// n_e(routing) for every link.
std::vector<std::int64_t> Loads(const RingInstance& instance,
                                const Routing& routing);

// a * load^degree + b. Throws std::overflow_error if it does not fit.
LatencyValue LinkLatency(const RingInstance& instance, int link,
                         std::int64_t load);

// Sum over the set of a_e * n_e^d + b_e.
LatencyValue Latency(const RingInstance& instance, const Routing& routing,
                     const LinkSet& links);
LatencyValue AgentLatency(const RingInstance& instance, const Routing& routing,
                          int agent);
LatencyValue RingLatency(const RingInstance& instance, const Routing& routing);

// ||P||_a and ||P||_b.
LatencyValue NormA(const RingInstance& instance, const LinkSet& links);
LatencyValue NormB(const RingInstance& instance, const LinkSet& links);

// M(routing): the largest agent latency.
LatencyValue MaxLatency(const RingInstance& instance, const Routing& routing);

// Precomputed link lists for both orientations of every agent. Used by the
// enumerators to avoid rebuilding masks per routing.
class PathTable {
 public:
  explicit PathTable(const RingInstance& instance);

  const std::vector<int>& path(int agent, Orientation o) const {
    return paths_[2 * agent + static_cast<int>(o)];
  }
  int num_agents() const { return static_cast<int>(paths_.size() / 2); }

 private:
  std::vector<std::vector<int>> paths_;
};

}  // namespace ringpoa

#endif  // RINGPOA_RING_MODEL_H_
