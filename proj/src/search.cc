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

#include <array>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "ringpoa/optimum.h"
#include "ringpoa/parallel.h"

namespace ringpoa {

RingInstance RandomInstance(const GenParams& params, std::mt19937_64& rng) {
  if (params.max_n < 2 || params.max_k < 1 || params.max_coef < 0 ||
      params.degree < 1) {
    throw std::invalid_argument("bad generator parameters");
  }
  using Dist = std::uniform_int_distribution<int>;
  RingInstance inst;
  inst.degree = params.degree;
  inst.n = Dist(2, params.max_n)(rng);
  const int k = Dist(1, params.max_k)(rng);
  Dist coef(0, params.max_coef);
  for (int e = 0; e < inst.n; ++e) {
    const std::int64_t a = coef(rng);
    const std::int64_t b = coef(rng);
    inst.links.push_back({a, b});
  }
  Dist node(0, inst.n - 1);
  for (int i = 0; i < k; ++i) {
    Agent agent;
    do {
      agent.s = node(rng);
      agent.t = node(rng);
    } while (agent.s == agent.t);
    inst.agents.push_back(agent);
  }
  return inst;
}

RingInstance RandomInstance(const GenParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return RandomInstance(params, rng);
}

namespace {

constexpr int kMaxNodes = 16;
constexpr int kMaxAgents = 8;

using LinkMask = std::uint32_t;

struct Candidate {
  bool valid = false;
  LatencyValue nash = 0;
  LatencyValue opt = 1;
  std::uint64_t coef_index = 0;
  std::uint64_t agent_index = 0;
};

// True when a beats b: larger PoA, then earlier in the enumeration order.
bool Better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  const __int128 lhs = static_cast<__int128>(a.nash) * b.opt;
  const __int128 rhs = static_cast<__int128>(b.nash) * a.opt;
  if (lhs != rhs) return lhs > rhs;
  return std::tie(a.coef_index, a.agent_index) <
         std::tie(b.coef_index, b.agent_index);
}

// All coefficient vectors of length 2n with sum <= budget, lexicographic.
std::vector<std::vector<std::int64_t>> CoefficientVectors(int n, int budget) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(2 * n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == 2 * n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, budget);
  return out;
}

struct AgentTuple {
  std::vector<Agent> agents;
  // Path masks indexed [agent][orientation].
  std::array<std::array<LinkMask, 2>, kMaxAgents> paths{};
};

std::vector<AgentTuple> AgentTuples(int n, int k) {
  std::vector<Agent> pairs;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s != t) pairs.push_back({s, t});
    }
  }
  std::vector<AgentTuple> out;
  std::vector<int> idx(k, 0);
  while (true) {
    AgentTuple tuple;
    for (int i = 0; i < k; ++i) {
      const Agent a = pairs[idx[i]];
      tuple.agents.push_back(a);
      LinkMask cw = 0;
      for (int e = a.s; e != a.t; e = (e + 1) % n) cw |= LinkMask{1} << e;
      const LinkMask full = (LinkMask{1} << n) - 1;
      tuple.paths[i] = {cw, full & ~cw};
    }
    out.push_back(std::move(tuple));
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == static_cast<int>(pairs.size())) {
      idx[pos--] = 0;
    }
    if (pos < 0) break;
  }
  return out;
}

// Worst Nash M and optimum M* of one instance by full enumeration.
void Evaluate(int n, int k, const LatencyValue* table, int stride,
              const AgentTuple& tuple, LatencyValue& worst_nash,
              LatencyValue& opt) {
  worst_nash = -1;
  opt = -1;
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::array<int, kMaxNodes> load{};
    std::array<LinkMask, kMaxAgents> chosen{};
    for (int i = 0; i < k; ++i) {
      const int o = (mask >> (k - 1 - i)) & 1;
      chosen[i] = tuple.paths[i][o];
    }
    for (int e = 0; e < n; ++e) {
      const LinkMask bit = LinkMask{1} << e;
      for (int i = 0; i < k; ++i) load[e] += (chosen[i] & bit) != 0;
    }
    LatencyValue m = 0;
    bool nash = true;
    for (int i = 0; i < k; ++i) {
      const int o = (mask >> (k - 1 - i)) & 1;
      const LinkMask other = tuple.paths[i][1 - o];
      LatencyValue cur = 0, dev = 0;
      for (int e = 0; e < n; ++e) {
        const LinkMask bit = LinkMask{1} << e;
        if (chosen[i] & bit) cur += table[e * stride + load[e]];
        if (other & bit) dev += table[e * stride + load[e] + 1];
      }
      m = std::max(m, cur);
      if (dev < cur) nash = false;
    }
    if (opt < 0 || m < opt) opt = m;
    if (nash && m > worst_nash) worst_nash = m;
  }
}

}  // namespace

SearchResult ExhaustivePoaSearch(const SearchSpace& space, int jobs) {
  if (space.max_n < 2 || space.max_n > kMaxNodes || space.k < 1 ||
      space.k > kMaxAgents || space.budget < 0 || space.degree < 1) {
    throw std::invalid_argument("search space out of range");
  }
  SearchResult result;
  Candidate best;
  int best_n = 0;

  for (int n = 2; n <= space.max_n; ++n) {
    const auto coefs = CoefficientVectors(n, space.budget);
    const auto tuples = AgentTuples(n, space.k);
    const int stride = space.k + 2;

    struct Block {
      Candidate best;
      std::int64_t examined = 0;
      std::int64_t degenerate = 0;
    };
    std::vector<Block> blocks(std::max(1, jobs));
    ForEachBlock(coefs.size(), jobs,
                 [&](int b, std::uint64_t begin, std::uint64_t end) {
      Block& blk = blocks[b];
      std::vector<LatencyValue> table(n * stride);
      for (std::uint64_t c = begin; c < end; ++c) {
        const auto& v = coefs[c];
        for (int e = 0; e < n; ++e) {
          for (int x = 0; x < stride; ++x) {
            LatencyValue p = 1;
            for (int d = 0; d < space.degree; ++d) p *= x;
            table[e * stride + x] = v[2 * e] * p + v[2 * e + 1];
          }
        }
        for (std::uint64_t t = 0; t < tuples.size(); ++t) {
          LatencyValue nash, opt;
          Evaluate(n, space.k, table.data(), stride, tuples[t], nash, opt);
          ++blk.examined;
          if (opt == 0) {
            ++blk.degenerate;
            continue;
          }
          Candidate cand{true, nash, opt, c, t};
          if (Better(cand, blk.best)) blk.best = cand;
        }
      }
    });
    for (const Block& blk : blocks) {
      result.examined += blk.examined;
      result.degenerate += blk.degenerate;
      // Earlier n wins ties, so only a strictly larger ratio replaces it.
      if (!blk.best.valid) continue;
      const bool replace =
          !best.valid ||
          (best_n == n ? Better(blk.best, best)
                       : static_cast<__int128>(blk.best.nash) * best.opt >
                             static_cast<__int128>(best.nash) * blk.best.opt);
      if (replace) {
        best = blk.best;
        best_n = n;
        RingInstance inst;
        inst.n = n;
        inst.degree = space.degree;
        const auto& v = coefs[best.coef_index];
        for (int e = 0; e < n; ++e) inst.links.push_back({v[2 * e], v[2 * e + 1]});
        inst.agents = tuples[best.agent_index].agents;
        result.best = inst;
      }
    }
  }

  if (best.valid) {
    result.nash_value = best.nash;
    result.opt_value = best.opt;
    result.poa = Rational(best.nash, best.opt);
    const PoaResult check = Poa(*result.best);
    result.reverified = check.nash_value == best.nash &&
                        check.opt_value == best.opt && check.ratio == result.poa;
  }
  return result;
}

DegreeProbe ProbeDegree(const RingInstance& tight, int degree,
                        const SearchSpace& space, int jobs) {
  DegreeProbe probe;
  probe.degree = degree;
  probe.target = Rational(std::int64_t{1} << degree);
  RingInstance lifted = tight;
  lifted.degree = degree;
  const PoaResult tight_result = Poa(lifted);
  probe.tight_poa = tight_result.ratio;
  probe.tight_reaches_target =
      tight_result.ratio && *tight_result.ratio >= probe.target;
  SearchSpace at_degree = space;
  at_degree.degree = degree;
  probe.search = ExhaustivePoaSearch(at_degree, jobs);
  probe.found = probe.search.poa && *probe.search.poa >= probe.target;
  return probe;
}

}  // namespace ringpoa
