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

#ifndef RINGPOA_SEARCH_H_
#define RINGPOA_SEARCH_H_

#include <cstdint>
#include <optional>
#include <random>

#include "ringpoa/rational.h"
#include "ringpoa/ring_model.h"

namespace ringpoa {

struct GenParams {
  int max_n = 8;
  int max_k = 6;
  int max_coef = 3;
  int degree = 1;
};

// n, k, every coefficient and every endpoint drawn uniformly within the
// bounds; t = s is redrawn.
RingInstance RandomInstance(const GenParams& params, std::mt19937_64& rng);
RingInstance RandomInstance(const GenParams& params, std::uint64_t seed);

// Every instance with 2 <= n <= max_n nodes, exactly k agents and
// sum of all coefficients at most `budget`.
struct SearchSpace {
  int max_n = 6;
  int k = 2;
  int budget = 6;
  int degree = 1;
};

struct SearchResult {
  // Lexicographically first maximizer in the order (n, coefficient vector
  // a0 b0 a1 b1 ..., agent tuple s0 t0 s1 t1 ...).
  std::optional<RingInstance> best;
  std::optional<Rational> poa;
  LatencyValue nash_value = 0;
  LatencyValue opt_value = 0;
  std::int64_t examined = 0;
  std::int64_t degenerate = 0;  // M* = 0, excluded from the argmax
  // The maximizer's worst Nash and optimum recomputed from scratch agree.
  bool reverified = false;
};

// Exhaustive enumeration. Requires n <= 16 and k <= 8.
SearchResult ExhaustivePoaSearch(const SearchSpace& space, int jobs = 1);

struct DegreeProbe {
  int degree = 1;
  Rational target;           // 2^degree
  std::optional<Rational> tight_poa;  // the given instance at this degree
  bool tight_reaches_target = false;
  SearchResult search;       // the same space searched at this degree
  bool found = false;        // search.poa >= target
};

DegreeProbe ProbeDegree(const RingInstance& tight, int degree,
                        const SearchSpace& space, int jobs = 1);

}  // namespace ringpoa

#endif  // RINGPOA_SEARCH_H_
