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

#ifndef RINGPOA_TESTS_FIXTURES_H_
#define RINGPOA_TESTS_FIXTURES_H_

#include "ringpoa/ring_model.h"

namespace ringpoa::testing {

constexpr Orientation CW = Orientation::kClockwise;
constexpr Orientation CCW = Orientation::kCounterclockwise;

inline Routing R(std::initializer_list<Orientation> o) {
  return Routing(std::vector<Orientation>(o));
}

// Two nodes, two unit-slope links, two agents on the same pair.
inline RingInstance FixA() {
  return {2, 1, {{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}};
}

// Four nodes alternating slope and constant links, two opposite agents.
inline RingInstance FixB() {
  return {4, 1, {{1, 0}, {0, 1}, {1, 0}, {0, 1}}, {{0, 2}, {2, 0}}};
}

// Worst Nash twice the optimum.
inline RingInstance Tight() {
  return {3, 1, {{0, 1}, {1, 0}, {1, 0}}, {{0, 2}, {1, 2}}};
}

}  // namespace ringpoa::testing

#endif  // RINGPOA_TESTS_FIXTURES_H_
