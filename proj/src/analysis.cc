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

#include "ringpoa/analysis.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ringpoa/optimum.h"

namespace ringpoa {
namespace {

Rational Ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }

void RequireLinear(const RingInstance& instance, const char* what) {
  if (instance.degree != 1) {
    throw std::invalid_argument(std::string(what) + " requires degree 1");
  }
}

BoundCheck Equality(std::string name, Rational lhs, Rational rhs) {
  BoundCheck c;
  c.name = std::move(name);
  c.applicable = true;
  c.lhs = lhs;
  c.rhs = rhs;
  c.pass = lhs == rhs;
  return c;
}

BoundCheck Holds(std::string name, bool ok, std::string witness) {
  BoundCheck c;
  c.name = std::move(name);
  c.applicable = true;
  c.lhs = Rational(ok ? 1 : 0);
  c.rhs = Rational(1);
  c.pass = ok;
  if (!ok) c.witness = std::move(witness);
  return c;
}

// Drops agent q from `routing`.
Routing Without(const Routing& routing, int q) {
  std::vector<Orientation> choices = routing.choices();
  choices.erase(choices.begin() + q);
  return Routing(std::move(choices));
}

std::string PairText(const Routing& nash, const Routing& opt) {
  return "nash=" + ToString(nash) + " opt=" + ToString(opt);
}

}  // namespace

BoundCheck BoundCheck::AtMost(std::string name, Rational lhs, Rational rhs,
                              std::optional<std::string> witness) {
  BoundCheck c;
  c.name = std::move(name);
  c.applicable = true;
  c.lhs = lhs;
  c.rhs = rhs;
  c.pass = lhs <= rhs;
  if (!c.pass) c.witness = std::move(witness);
  return c;
}

BoundCheck BoundCheck::Skipped(std::string name, std::string reason) {
  BoundCheck c;
  c.name = std::move(name);
  c.applicable = false;
  c.pass = false;
  c.witness = std::move(reason);
  return c;
}

Classification ClassifyPair(const RingInstance& instance, const Routing& nash,
                            const Routing& opt) {
  if (nash.size() != instance.num_agents() ||
      opt.size() != instance.num_agents()) {
    throw std::invalid_argument("routing size does not match agent count");
  }
  Classification out;
  for (int i = 0; i < instance.num_agents(); ++i) {
    if (nash[i] != opt[i]) out.switching.push_back(i);
  }
  out.h = static_cast<int>(out.switching.size());
  if (out.h == 0) return out;

  LinkSet covered(instance.n);
  LatencyValue switching_max = 0;
  for (int i : out.switching) {
    covered = covered.Union(ChosenPath(instance, nash, i));
    switching_max = std::max(switching_max, AgentLatency(instance, nash, i));
  }
  out.covering = covered.size() == instance.n;
  out.singular = MaxLatency(instance, nash) > switching_max;
  return out;
}

Classification Classify(const RingInstance& instance, const Routing& nash,
                        const Routing& opt, int limit) {
  ValidateOrThrow(instance);
  if (!IsNash(instance, nash).is_nash) {
    throw std::invalid_argument("not a Nash routing");
  }
  if (MaxLatency(instance, opt) != ExactOptimum(instance, limit).value) {
    throw std::invalid_argument("not optimal");
  }
  return ClassifyPair(instance, nash, opt);
}

BoundCheck PairwiseIntersectionCheck(const RingInstance& instance,
                                     const Routing& nash, const Routing& opt) {
  const Classification cls = ClassifyPair(instance, nash, opt);
  std::int64_t disjoint = 0;
  std::optional<std::string> first;
  for (std::size_t x = 0; x < cls.switching.size(); ++x) {
    const LinkSet nx = ChosenPath(instance, nash, cls.switching[x]);
    for (std::size_t y = x + 1; y < cls.switching.size(); ++y) {
      const int i = cls.switching[x];
      const int j = cls.switching[y];
      if (nx.Intersect(ChosenPath(instance, nash, j)).empty()) {
        ++disjoint;
        if (!first) {
          first = "agents " + std::to_string(i) + " and " + std::to_string(j);
        }
      }
    }
  }
  return BoundCheck::AtMost("switching_paths_intersect", Rational(disjoint),
                            Rational(0), first);
}

ReductionResult SingularReduction(const RingInstance& instance,
                                  const Routing& nash, const Routing& opt,
                                  int q, int limit) {
  RequireLinear(instance, "singular reduction");
  if (q < 0 || q >= instance.num_agents()) {
    throw std::out_of_range("agent index out of range");
  }
  if (nash[q] != opt[q]) throw std::invalid_argument("agent is switching");
  if (instance.num_agents() < 2) {
    throw std::invalid_argument("cannot remove the only agent");
  }

  ReductionResult r;
  r.instance = instance;
  for (int e : PathLinks(instance, q, nash[q]).indices()) {
    r.instance.links[e].b += r.instance.links[e].a;
  }
  r.instance.agents.erase(r.instance.agents.begin() + q);
  r.nash = Without(nash, q);
  r.opt = Without(opt, q);
  for (int i = 0; i < instance.num_agents(); ++i) {
    if (i != q) r.kept_agents.push_back(i);
  }
  r.ring_latency_before = RingLatency(instance, nash);
  r.ring_latency_after = RingLatency(r.instance, r.nash);
  r.opt_value_before = MaxLatency(instance, opt);
  r.induced_opt_value = MaxLatency(r.instance, r.opt);
  r.reduced_opt_value = ExactOptimum(r.instance, limit).value;
  r.reduced_nash_is_nash = IsNash(r.instance, r.nash).is_nash;
  return r;
}

ReductionResult ReduceNonSwitching(const RingInstance& instance,
                                   const Routing& nash, const Routing& opt,
                                   bool keep_singular_witness, int limit) {
  RequireLinear(instance, "singular reduction");
  const Classification cls = ClassifyPair(instance, nash, opt);

  int keep = -1;
  if (keep_singular_witness && cls.singular) {
    const LatencyValue m = MaxLatency(instance, nash);
    for (int i = 0; i < instance.num_agents() && keep < 0; ++i) {
      if (nash[i] == opt[i] && AgentLatency(instance, nash, i) == m) keep = i;
    }
  }

  ReductionResult r;
  r.instance = instance;
  r.nash = nash;
  r.opt = opt;
  for (int i = 0; i < instance.num_agents(); ++i) r.kept_agents.push_back(i);
  r.ring_latency_before = r.ring_latency_after = RingLatency(instance, nash);
  r.opt_value_before = r.induced_opt_value = MaxLatency(instance, opt);
  r.reduced_opt_value = ExactOptimum(instance, limit).value;
  r.reduced_nash_is_nash = IsNash(instance, nash).is_nash;

  // Highest index first so the remaining indices stay valid.
  for (int i = instance.num_agents() - 1; i >= 0; --i) {
    if (nash[i] != opt[i] || i == keep) continue;
    if (r.instance.num_agents() < 2) break;
    ReductionResult step = SingularReduction(r.instance, r.nash, r.opt, i, limit);
    const bool ring_ok = r.ring_latency_preserved();
    r.instance = std::move(step.instance);
    r.nash = std::move(step.nash);
    r.opt = std::move(step.opt);
    r.kept_agents.erase(r.kept_agents.begin() + i);
    r.induced_opt_value = step.induced_opt_value;
    r.reduced_opt_value = step.reduced_opt_value;
    r.reduced_nash_is_nash = r.reduced_nash_is_nash && step.reduced_nash_is_nash;
    // The first step that changes the ring latency is the one reported.
    if (ring_ok) r.ring_latency_after = step.ring_latency_after;
  }
  return r;
}

SplitResult SplitLinks(const RingInstance& instance) {
  RequireLinear(instance, "link splitting");
  ValidateOrThrow(instance);
  SplitResult out;
  out.instance.degree = 1;
  out.node_map.resize(instance.n);
  for (int e = 0; e < instance.n; ++e) {
    const Link& link = instance.links[e];
    out.node_map[e] = static_cast<int>(out.instance.links.size());
    if (link.a == 0 && link.b == 0) {
      out.instance.links.push_back({0, 0});
      out.link_origin.push_back(e);
      continue;
    }
    for (std::int64_t u = 0; u < link.a; ++u) {
      out.instance.links.push_back({1, 0});
      out.link_origin.push_back(e);
    }
    for (std::int64_t u = 0; u < link.b; ++u) {
      out.instance.links.push_back({0, 1});
      out.link_origin.push_back(e);
    }
  }
  out.instance.n = static_cast<int>(out.instance.links.size());
  for (const Agent& agent : instance.agents) {
    out.instance.agents.push_back({out.node_map[agent.s], out.node_map[agent.t]});
  }
  return out;
}

SplitProfile Profile(const RingInstance& instance, const Routing& nash,
                     const Routing& opt) {
  RequireLinear(instance, "profile");
  const Classification cls = ClassifyPair(instance, nash, opt);
  if (!cls.covering) throw std::invalid_argument("not covering");
  if (cls.h != instance.num_agents()) {
    throw std::invalid_argument("singular instance — reduce first");
  }

  const SplitResult split = SplitLinks(instance);
  const std::vector<std::int64_t> loads = Loads(split.instance, nash);
  SplitProfile p;
  p.h = cls.h;
  p.A.assign(p.h, 0);
  p.B.assign(p.h, 0);
  for (int e = 0; e < split.instance.n; ++e) {
    const Link& link = split.instance.links[e];
    if (link.a == 0 && link.b == 0) continue;
    const std::int64_t i = loads[e];
    if (i < 1 || i > p.h) throw std::logic_error("covering link without load");
    (link.a == 1 ? p.A : p.B)[i - 1] += 1;
  }

  Rational sum_c = 0;
  std::int64_t sum_b = 0;
  std::int64_t sum_ib = 0;
  for (int i = 1; i <= p.h; ++i) {
    p.C.push_back(Ratio(i * p.A[i - 1], p.h));
    sum_c += p.C.back();
    sum_b += p.B[i - 1];
    sum_ib += i * p.B[i - 1];
  }
  p.sum_c_zero = sum_c == Rational(0);
  for (const Rational& c : p.C) {
    p.D.push_back(p.sum_c_zero ? Rational(0) : c / sum_c);
  }
  if (!p.sum_c_zero) {
    p.beta = Rational(sum_b) / (Rational(p.h) * sum_c);
    p.z = Rational(sum_ib) / (Rational(p.h * p.h) * sum_c);
  }
  return p;
}

std::vector<BoundCheck> ProfileChecks(const SplitProfile& p,
                                      const Rational& ring_over_opt) {
  std::vector<BoundCheck> out;
  const std::int64_t h = p.h;

  Rational lhs = 0, rhs = 0;
  for (std::int64_t i = 1; i <= h; ++i) {
    const std::int64_t a = p.A[i - 1], b = p.B[i - 1];
    lhs += (2 * i * i - h) * a + 2 * i * b;
    rhs += (h - 1) * i * a + h * b;
  }
  out.push_back(BoundCheck::AtMost("profile_constraint", lhs, rhs));

  Rational num = 0, den = 0;
  for (std::int64_t i = 1; i <= h; ++i) {
    const std::int64_t a = p.A[i - 1], b = p.B[i - 1];
    num += i * a + b;
    den += Rational((h - i) * (h - i) * a + (h - i) * b, h);
  }
  if (den > Rational(0)) {
    out.push_back(BoundCheck::AtMost("ratio_upper_bound", ring_over_opt,
                                     num / den));
  } else {
    out.push_back(BoundCheck::Skipped("ratio_upper_bound",
                                      "optimum lower bound is zero"));
  }

  if (p.sum_c_zero) {
    out.push_back(
        BoundCheck::AtMost("zero_slope_ratio", ring_over_opt, Rational(2)));
    for (const char* name : {"normalized_constraint", "rewritten_ratio_bound",
                             "z_lower", "z_upper"}) {
      out.push_back(BoundCheck::Skipped(name, "sum C = 0"));
    }
    return out;
  }
  out.push_back(BoundCheck::Skipped("zero_slope_ratio", "sum C > 0"));

  Rational norm = 2 * p.z, harmonic = 0;
  for (std::int64_t i = 1; i <= h; ++i) {
    norm += (Rational(2 * i, h) - Rational(1, i)) * p.D[i - 1];
    harmonic += (Rational(h, i) + Rational(i, h)) * p.D[i - 1];
  }
  out.push_back(BoundCheck::AtMost("normalized_constraint", norm,
                                   Rational(h - 1, h) + p.beta));
  const Rational rewritten_den = harmonic - 2 + p.beta - p.z;
  if (rewritten_den > Rational(0)) {
    out.push_back(BoundCheck::AtMost("rewritten_ratio_bound", ring_over_opt,
                                     (1 + p.beta) / rewritten_den));
  } else {
    out.push_back(BoundCheck::Skipped("rewritten_ratio_bound",
                                      "nonpositive denominator"));
  }
  out.push_back(BoundCheck::AtMost("z_lower", p.beta / h, p.z));
  out.push_back(BoundCheck::AtMost("z_upper", p.z, p.beta));
  return out;
}

bool BoundReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) {
    return !c.applicable || c.pass;
  });
}

const BoundCheck* BoundReport::find(const std::string& name) const {
  for (const BoundCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

BoundReport CheckAllBounds(const RingInstance& instance, int limit, int jobs) {
  ValidateOrThrow(instance);
  RequireLinear(instance, "bound checking");
  CheckAgentLimit(instance, limit);

  BoundReport rep;
  rep.nash = WorstNash(instance, limit, jobs);
  rep.nash_value = MaxLatency(instance, rep.nash);
  const MinHResult min_h = MinHOptimum(instance, rep.nash, limit, jobs);
  if (min_h.value == 0) throw DegenerateOptimumError();
  rep.opt = min_h.routing;
  rep.opt_value = min_h.value;
  rep.ring_latency = RingLatency(instance, rep.nash);
  rep.classification = ClassifyPair(instance, rep.nash, rep.opt);

  const Classification& cls = rep.classification;
  const int h = cls.h;
  const int k = instance.num_agents();
  const Rational max_over_opt = Ratio(rep.nash_value, rep.opt_value);
  const Rational ring_over_opt = Ratio(rep.ring_latency, rep.opt_value);
  const std::string pair = PairText(rep.nash, rep.opt);
  auto& checks = rep.checks;
  auto skip = [&](const char* name, const std::string& why) {
    checks.push_back(BoundCheck::Skipped(name, why));
  };

  checks.push_back(
      BoundCheck::AtMost("poa_at_most_two", max_over_opt, 2, pair));

  static const char* const kStructural[] = {
      "switching_paths_intersect", "reduction_ring_latency_preserved",
      "reduction_keeps_nash", "reduction_optimum_not_increased",
      "reduced_agent_count"};
  static const char* const kBuckets[] = {
      "covering_ring_over_opt_h_le_2", "covering_ring_over_opt_h_3_4_6",
      "covering_ring_over_opt_h_5", "covering_ring_over_opt_h_ge_7"};
  static const char* const kCovering[] = {
      "covering_max_over_ring", "covering_ring_over_opt",
      "covering_ring_over_opt_h_le_2", "covering_ring_over_opt_h_3_4_6",
      "covering_ring_over_opt_h_5", "covering_ring_over_opt_h_ge_7"};
  static const char* const kNonCovering[] = {
      "noncovering_ring_over_opt", "noncovering_max_over_opt",
      "noncovering_max_over_opt_h_ge_3", "h2_noncovering_max_over_opt"};
  static const char* const kH1[] = {"h1_max_over_opt", "h1_ring_over_opt"};
  static const char* const kProfile[] = {
      "profile_constraint", "ratio_upper_bound", "zero_slope_ratio",
      "normalized_constraint", "rewritten_ratio_bound", "z_lower", "z_upper"};

  if (h == 0) {
    const std::string why = "h=0: worst Nash is optimal";
    for (const char* n : kStructural) skip(n, why);
    for (const char* n : kCovering) skip(n, why);
    for (const char* n : kNonCovering) skip(n, why);
    for (const char* n : kH1) skip(n, why);
    for (const char* n : kProfile) skip(n, why);
    return rep;
  }

  checks.push_back(PairwiseIntersectionCheck(instance, rep.nash, rep.opt));

  // Full reduction: every non-switching agent removed, k = h.
  const ReductionResult full =
      ReduceNonSwitching(instance, rep.nash, rep.opt, false, limit);
  if (k > h) {
    checks.push_back(Equality("reduction_ring_latency_preserved",
                              Rational(full.ring_latency_after),
                              Rational(full.ring_latency_before)));
    checks.push_back(Holds("reduction_keeps_nash", full.reduced_nash_is_nash,
                           "reduced nash=" + ToString(full.nash)));
    checks.push_back(BoundCheck::AtMost(
        "reduction_optimum_not_increased",
        Rational(std::max(full.reduced_opt_value, full.induced_opt_value)),
        Rational(full.opt_value_before)));
  } else {
    for (const char* n : {"reduction_ring_latency_preserved",
                          "reduction_keeps_nash",
                          "reduction_optimum_not_increased"}) {
      skip(n, "no non-switching agent");
    }
  }
  {
    const ReductionResult kept =
        k > h ? ReduceNonSwitching(instance, rep.nash, rep.opt, true, limit)
              : full;
    const int k_after = kept.instance.num_agents();
    checks.push_back(Equality("reduced_agent_count", Rational(k_after),
                              Rational(h + (cls.singular ? 1 : 0))));
  }

  if (cls.covering) {
    checks.push_back(BoundCheck::AtMost(
        "covering_max_over_ring", Ratio(rep.nash_value, rep.ring_latency),
        Rational(2, 3), pair));
    checks.push_back(BoundCheck::AtMost("covering_ring_over_opt", ring_over_opt,
                                        3, pair));
    const char* bucket = h <= 2                         ? kBuckets[0]
                         : (h == 3 || h == 4 || h == 6) ? kBuckets[1]
                         : h == 5                       ? kBuckets[2]
                                                        : kBuckets[3];
    for (const char* n : kBuckets) {
      if (std::string(n) == bucket) {
        checks.push_back(BoundCheck::AtMost(n, ring_over_opt, 3, pair));
      } else {
        skip(n, "h=" + std::to_string(h));
      }
    }
    for (const char* n : kNonCovering) skip(n, "covering");
  } else {
    for (const char* n : kCovering) skip(n, "not covering");
    const Rational alpha = 2 + Rational(2, h);
    checks.push_back(BoundCheck::AtMost("noncovering_ring_over_opt",
                                        ring_over_opt, alpha, pair));
    checks.push_back(BoundCheck::AtMost("noncovering_max_over_opt",
                                        max_over_opt,
                                        (2 * alpha + Rational(1, h)) / 3, pair));
    if (h >= 3) {
      checks.push_back(BoundCheck::AtMost(
          "noncovering_max_over_opt_h_ge_3", max_over_opt,
          Rational(4, 3) + Rational(5, 3 * h), pair));
    } else {
      skip("noncovering_max_over_opt_h_ge_3", "h<3");
    }
    if (h == 2) {
      checks.push_back(BoundCheck::AtMost("h2_noncovering_max_over_opt",
                                          max_over_opt, 2, pair));
    } else {
      skip("h2_noncovering_max_over_opt", "h!=2");
    }
  }

  if (h == 1) {
    checks.push_back(
        BoundCheck::AtMost("h1_max_over_opt", max_over_opt, 2, pair));
    checks.push_back(BoundCheck::AtMost("h1_ring_over_opt",
                                        ring_over_opt, 2, pair));
  } else {
    for (const char* n : kH1) skip(n, "h!=1");
  }

  if (cls.covering) {
    const SplitProfile profile = Profile(full.instance, full.nash, full.opt);
    for (BoundCheck& c : ProfileChecks(profile, ring_over_opt)) {
      if (c.applicable && !c.pass) c.witness = pair;
      checks.push_back(std::move(c));
    }
  } else {
    for (const char* n : kProfile) skip(n, "not covering");
  }
  return rep;
}

}  // namespace ringpoa
