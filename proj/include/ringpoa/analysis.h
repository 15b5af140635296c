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

#ifndef RINGPOA_ANALYSIS_H_
#define RINGPOA_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringpoa/equilibria.h"
#include "ringpoa/rational.h"
#include "ringpoa/ring_model.h"

// Structural classification of a (worst Nash, min-h optimum) pair and exact
// checks of every ratio bound used in the price-of-anarchy argument.
//
// Throughout, the switching agents are those routed differently in the Nash
// and the optimal routing; h is their number.

namespace ringpoa {

class DegenerateOptimumError : public std::domain_error {
 public:
  DegenerateOptimumError()
      : std::domain_error("degenerate: optimum latency zero") {}
};

struct Classification {
  int h = 0;
  std::vector<int> switching;
  // The switching agents' Nash paths cover the ring. False when h = 0.
  bool covering = false;
  // M(nash) is attained only by non-switching agents. False when h = 0.
  bool singular = false;
};

// Checks that `nash` is a Nash routing and `opt` attains the optimum, then
// classifies. Throws std::invalid_argument("not a Nash routing" / "not
// optimal").
Classification Classify(const RingInstance& instance, const Routing& nash,
                        const Routing& opt, int limit = kDefaultAgentLimit);

// Classification without the Nash/optimality preconditions.
Classification ClassifyPair(const RingInstance& instance, const Routing& nash,
                            const Routing& opt);

// One evaluated inequality lhs <= rhs. Inapplicable checks carry no sides and
// never pass.
struct BoundCheck {
  std::string name;
  bool applicable = false;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  bool pass = false;
  std::optional<std::string> witness;

  static BoundCheck AtMost(std::string name, Rational lhs, Rational rhs,
                           std::optional<std::string> witness = std::nullopt);
  static BoundCheck Skipped(std::string name, std::string reason);
};

// Nash paths of any two switching agents share a link. Vacuous for h <= 1.
// lhs counts link-disjoint pairs; the witness names the first one.
BoundCheck PairwiseIntersectionCheck(const RingInstance& instance,
                                     const Routing& nash, const Routing& opt);

// Result of removing non-switching agents. Every link on a removed agent's
// path gets b += a, so the remaining agents see unchanged link latencies.
struct ReductionResult {
  RingInstance instance;
  Routing nash;
  Routing opt;                    // induced optimal routing
  std::vector<int> kept_agents;   // original indices, ascending
  LatencyValue ring_latency_before = 0;
  LatencyValue ring_latency_after = 0;
  LatencyValue opt_value_before = 0;   // M(opt) in the original instance
  LatencyValue induced_opt_value = 0;  // M'(induced opt)
  LatencyValue reduced_opt_value = 0;  // exact optimum of the reduced instance
  bool reduced_nash_is_nash = false;

  bool ring_latency_preserved() const {
    return ring_latency_before == ring_latency_after;
  }
  bool optimum_not_increased() const {
    return reduced_opt_value <= opt_value_before &&
           induced_opt_value <= opt_value_before;
  }
};

// Removes the single non-switching agent q. Requires degree 1.
// Throws std::invalid_argument("agent is switching") otherwise.
ReductionResult SingularReduction(const RingInstance& instance,
                                  const Routing& nash, const Routing& opt,
                                  int q, int limit = kDefaultAgentLimit);

// Repeated reduction. With `keep_singular_witness`, one non-switching agent
// attaining M(nash) survives when the pair is singular, so afterwards
// h <= k <= h+1 with k = h+1 exactly in the singular case. Otherwise every
// non-switching agent is removed (k = h).
ReductionResult ReduceNonSwitching(const RingInstance& instance,
                                   const Routing& nash, const Routing& opt,
                                   bool keep_singular_witness,
                                   int limit = kDefaultAgentLimit);

struct SplitResult {
  RingInstance instance;
  std::vector<int> node_map;     // original node -> split node
  std::vector<int> link_origin;  // split link -> original link
};

// Replaces a link a*x + b by a unit-slope links followed by b unit-constant
// links. A zero link becomes one (0,0) placeholder so the ring keeps its
// shape. Agent endpoints are remapped; every path latency is unchanged under
// the same routing. Requires degree 1.
SplitResult SplitLinks(const RingInstance& instance);

// Link-count profile of a covering Nash routing in which every agent
// switches. Vectors are indexed by load - 1 (load 1..h).
struct SplitProfile {
  int h = 0;
  std::vector<std::int64_t> A;  // unit-slope links carrying i switching agents
  std::vector<std::int64_t> B;  // unit-constant links carrying i agents
  std::vector<Rational> C;      // (i/h) A_i
  std::vector<Rational> D;      // C_i / sum C (zero when sum C = 0)
  Rational beta;                // sum B / (h sum C)
  Rational z;                   // sum i B_i / (h^2 sum C)
  bool sum_c_zero = false;
};

// Throws std::invalid_argument("not covering") or
// ("singular instance — reduce first") when non-switching agents remain.
SplitProfile Profile(const RingInstance& instance, const Routing& nash,
                     const Routing& opt);

// Inequalities over a profile. `ring_over_opt` is l^N(R)/M* of the instance
// the profile was reduced from.
std::vector<BoundCheck> ProfileChecks(const SplitProfile& profile,
                                      const Rational& ring_over_opt);

struct BoundReport {
  Routing nash;  // worst Nash
  Routing opt;   // min-h optimum
  Classification classification;
  LatencyValue nash_value = 0;
  LatencyValue opt_value = 0;
  LatencyValue ring_latency = 0;
  std::vector<BoundCheck> checks;

  bool all_passed() const;
  const BoundCheck* find(const std::string& name) const;
};

// Evaluates every applicable bound on the worst Nash routing against the
// min-h optimum. Requires degree 1. Throws DegenerateOptimumError when
// M* = 0.
BoundReport CheckAllBounds(const RingInstance& instance,
                           int limit = kDefaultAgentLimit, int jobs = 1);

}  // namespace ringpoa

#endif  // RINGPOA_ANALYSIS_H_
