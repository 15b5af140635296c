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

#include "ringpoa/search.h"

#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "fixtures.h"
#include "oracles.h"
#include "ringpoa/optimum.h"

namespace ringpoa {
namespace {

TEST(RandomInstance, SameSeedSameInstance) {
  GenParams p;
  EXPECT_EQ(RandomInstance(p, 1), RandomInstance(p, 1));
  EXPECT_NE(RandomInstance(p, 1), RandomInstance(p, 2));
}

TEST(RandomInstance, SamplesAreValidAndInBounds) {
  GenParams p;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const RingInstance inst = RandomInstance(p, rng);
    EXPECT_TRUE(Validate(inst).empty());
    EXPECT_LE(inst.n, p.max_n);
    EXPECT_GE(inst.num_agents(), 1);
    EXPECT_LE(inst.num_agents(), p.max_k);
    for (const Link& l : inst.links) {
      EXPECT_LE(l.a, p.max_coef);
      EXPECT_LE(l.b, p.max_coef);
    }
    for (const Agent& a : inst.agents) EXPECT_NE(a.s, a.t);
  }
}

TEST(RandomInstance, RejectsBadParams) {
  GenParams p;
  p.max_n = 1;
  EXPECT_THROW(RandomInstance(p, 1), std::invalid_argument);
}

// Plain enumeration of the same space with the set-based oracle.
struct OracleBest {
  RingInstance best;
  std::int64_t nash = 0, opt = 1;
  bool any = false;
  std::int64_t examined = 0, degenerate = 0;
};

OracleBest OracleSearch(const SearchSpace& s) {
  OracleBest out;
  for (int n = 2; n <= s.max_n; ++n) {
    std::vector<Agent> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) pairs.push_back({a, b});
    std::vector<std::int64_t> coef(2 * n, 0);
    std::function<void(int, int)> coefs = [&](int pos, int left) {
      if (pos == 2 * n) {
        std::vector<int> idx(s.k, 0);
        while (true) {
          RingInstance inst;
          inst.n = n;
          inst.degree = s.degree;
          for (int e = 0; e < n; ++e) inst.links.push_back({coef[2 * e], coef[2 * e + 1]});
          for (int i : idx) inst.agents.push_back(pairs[i]);
          ++out.examined;
          const std::int64_t opt = oracle::OptimumValue(inst);
          if (opt == 0) {
            ++out.degenerate;
          } else {
            const std::int64_t nash = oracle::WorstNashValue(inst);
            if (!out.any || nash * out.opt > out.nash * opt) {
              out = {inst, nash, opt, true, out.examined, out.degenerate};
            }
          }
          int p = s.k - 1;
          while (p >= 0 && ++idx[p] == static_cast<int>(pairs.size())) idx[p--] = 0;
          if (p < 0) break;
        }
        return;
      }
      for (int v = 0; v <= left; ++v) {
        coef[pos] = v;
        coefs(pos + 1, left - v);
      }
      coef[pos] = 0;
    };
    coefs(0, s.budget);
  }
  return out;
}

TEST(Exhaustive, MatchesOracleOnSmallSpaces) {
  for (SearchSpace s : {SearchSpace{3, 2, 3, 1}, SearchSpace{3, 3, 2, 1},
                        SearchSpace{4, 2, 2, 1}, SearchSpace{3, 2, 2, 2}}) {
    const SearchResult r = ExhaustivePoaSearch(s);
    const OracleBest o = OracleSearch(s);
    EXPECT_EQ(r.examined, o.examined);
    EXPECT_EQ(r.degenerate, o.degenerate);
    ASSERT_TRUE(o.any);
    ASSERT_TRUE(r.best.has_value());
    EXPECT_EQ(*r.poa, Rational(o.nash, o.opt));
    EXPECT_EQ(*r.best, o.best);
    EXPECT_TRUE(r.reverified);
  }
}

TEST(Exhaustive, FindsRatioTwo) {
  const SearchResult r = ExhaustivePoaSearch({3, 2, 3, 1});
  ASSERT_TRUE(r.poa.has_value());
  EXPECT_EQ(*r.poa, Rational(2));
  EXPECT_EQ(Poa(*r.best).ratio, Rational(2));
}

TEST(Exhaustive, LinearNeverExceedsTwo) {
  for (SearchSpace s : {SearchSpace{4, 2, 4, 1}, SearchSpace{4, 3, 3, 1}}) {
    const SearchResult r = ExhaustivePoaSearch(s);
    ASSERT_TRUE(r.poa.has_value());
    EXPECT_LE(*r.poa, Rational(2));
  }
}

TEST(Exhaustive, JobsDoNotChangeResult) {
  const SearchSpace s{4, 2, 3, 1};
  const SearchResult a = ExhaustivePoaSearch(s, 1);
  for (int jobs : {2, 3, 7}) {
    const SearchResult b = ExhaustivePoaSearch(s, jobs);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.poa, b.poa);
    EXPECT_EQ(a.examined, b.examined);
    EXPECT_EQ(a.degenerate, b.degenerate);
  }
}

TEST(Exhaustive, RejectsOversizedSpace) {
  EXPECT_THROW(ExhaustivePoaSearch({17, 2, 1, 1}), std::invalid_argument);
  EXPECT_THROW(ExhaustivePoaSearch({4, 9, 1, 1}), std::invalid_argument);
}

TEST(Probe, TightInstanceAtDegreeTwo) {
  const DegreeProbe p = ProbeDegree(testing::Tight(), 2, {3, 2, 3, 1});
  EXPECT_EQ(p.degree, 2);
  EXPECT_EQ(p.target, Rational(4));
  ASSERT_TRUE(p.tight_poa.has_value());
  RingInstance lifted = testing::Tight();
  lifted.degree = 2;
  EXPECT_EQ(*p.tight_poa, Rational(oracle::WorstNashValue(lifted),
                                   oracle::OptimumValue(lifted)));
  EXPECT_EQ(p.tight_reaches_target, *p.tight_poa >= Rational(4));
  ASSERT_TRUE(p.search.poa.has_value());
  EXPECT_EQ(p.found, *p.search.poa >= Rational(4));
  EXPECT_TRUE(p.search.reverified);
}

}  // namespace
}  // namespace ringpoa
