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

#include <random>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracles.h"
#include "ringpoa/search.h"

namespace ringpoa {
namespace {

using namespace ringpoa::testing;

TEST(IsNash, Examples) {
  EXPECT_TRUE(IsNash(FixA(), R({CW, CCW})).is_nash);
  const NashCheck bad = IsNash(FixA(), R({CW, CW}));
  ASSERT_FALSE(bad.is_nash);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(bad.witness->agent, 0);
  EXPECT_EQ(bad.witness->current_latency, 2);
  EXPECT_EQ(bad.witness->deviation_latency, 1);
  EXPECT_TRUE(IsNash(FixB(), R({CW, CW})).is_nash);
  EXPECT_EQ(DeviationLatency(FixB(), R({CW, CW}), 0), 3);
}

TEST(Potential, Examples) {
  EXPECT_EQ(Potential(FixA(), R({CW, CW})), 3);
  EXPECT_EQ(Potential(FixA(), R({CW, CCW})), 2);
  RingInstance one{3, 1, {{2, 1}, {0, 4}, {1, 1}}, {{0, 2}}};
  EXPECT_EQ(Potential(one, R({CW})), AgentLatency(one, R({CW}), 0));
  EXPECT_EQ(Potential(one, R({CCW})), AgentLatency(one, R({CCW}), 0));
}

TEST(BestResponse, Examples) {
  BestResponseRun a = BestResponse(FixA(), R({CW, CW}));
  EXPECT_EQ(a.routing, R({CCW, CW}));
  EXPECT_EQ(a.moves, 1);
  BestResponseRun b = BestResponse(FixA(), R({CW, CCW}));
  EXPECT_EQ(b.routing, R({CW, CCW}));
  EXPECT_EQ(b.moves, 0);
  BestResponseRun c = BestResponse(FixB(), R({CW, CCW}));
  EXPECT_TRUE(IsNash(FixB(), c.routing).is_nash);
  EXPECT_EQ(MaxLatency(FixB(), c.routing), 2);
  EXPECT_EQ(c.routing, R({CCW, CCW}));
}

TEST(EnumerateNash, Examples) {
  EXPECT_EQ(EnumerateNash(FixA()), (std::vector<Routing>{R({CW, CCW}), R({CCW, CW})}));
  EXPECT_EQ(EnumerateNash(FixB()), (std::vector<Routing>{R({CW, CW}), R({CCW, CCW})}));
  RingInstance one{2, 1, {{1, 0}, {0, 5}}, {{0, 1}}};
  EXPECT_EQ(EnumerateNash(one), (std::vector<Routing>{R({CW})}));
}

TEST(EnumerateNash, Limit) {
  RingInstance big{2, 1, {{1, 0}, {1, 0}}, std::vector<Agent>(5, Agent{0, 1})};
  EXPECT_THROW(EnumerateNash(big, 4), std::length_error);
  try {
    EnumerateNash(big, 4);
  } catch (const std::length_error& e) {
    EXPECT_NE(std::string(e.what()).find("instance too large"), std::string::npos);
  }
}

TEST(WorstNash, Examples) {
  EXPECT_EQ(WorstNash(FixA()), R({CW, CCW}));
  EXPECT_EQ(WorstNash(FixB()), R({CW, CW}));
  const Routing t = WorstNash(Tight());
  EXPECT_EQ(MaxLatency(Tight(), t), 2);
}

TEST(Properties, OracleAndPotential) {
  std::mt19937_64 rng(11);
  GenParams params;
  params.max_k = 7;
  for (int trial = 0; trial < 200; ++trial) {
    params.degree = 1 + trial % 2;
    const RingInstance inst = RandomInstance(params, rng);
    const int k = inst.num_agents();
    std::vector<Routing> expected;
    for (std::uint64_t m : oracle::NashMasks(inst)) {
      expected.push_back(Routing::FromMask(k, m));
    }
    const auto nash = EnumerateNash(inst);
    EXPECT_FALSE(nash.empty());
    EXPECT_EQ(nash, expected);
    EXPECT_EQ(EnumerateNash(inst, kDefaultAgentLimit, 3), expected);
    EXPECT_EQ(WorstNash(inst, kDefaultAgentLimit, 3), WorstNash(inst));
    EXPECT_EQ(MaxLatency(inst, WorstNash(inst)), oracle::WorstNashValue(inst));

    const Routing r = Routing::FromMask(k, rng() % (std::uint64_t{1} << k));
    for (int i = 0; i < k; ++i) {
      Routing moved = r;
      moved.flip(i);
      EXPECT_EQ(Potential(inst, moved) - Potential(inst, r),
                AgentLatency(inst, moved, i) - AgentLatency(inst, r, i));
      EXPECT_EQ(DeviationLatency(inst, r, i), AgentLatency(inst, moved, i));
    }
    const BestResponseRun run = BestResponse(inst, r);
    EXPECT_TRUE(IsNash(inst, run.routing).is_nash);
    EXPECT_LE(run.moves, Potential(inst, r));
  }
}

}  // namespace
}  // namespace ringpoa
