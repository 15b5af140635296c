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

#include "ringpoa/cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringpoa/analysis.h"
#include "ringpoa/equilibria.h"
#include "ringpoa/json_io.h"
#include "ringpoa/np_verifier.h"
#include "ringpoa/optimum.h"
#include "ringpoa/search.h"

namespace ringpoa {
namespace {

// Input problems that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string out;
  int jobs = 1;
  int limit = kDefaultAgentLimit;
};

RingInstance LoadInstance(const Options& opt) {
  if (opt.in.empty()) throw UsageError("--in FILE is required");
  std::ifstream file(opt.in);
  if (!file) throw UsageError("cannot read " + opt.in);
  std::stringstream buf;
  buf << file.rdbuf();
  try {
    return ParseInstance(buf.str());
  } catch (const std::invalid_argument& e) {
    throw UsageError(opt.in + ": " + e.what());
  }
}

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* kCsvHeader = "h,beta,branch,x,y,z,f,g,margin\n";

std::string CsvRow(int h, double beta, const std::string& branch, double x,
                   double y, double z, double f, double g) {
  return std::to_string(h) + "," + Num(beta) + "," + branch + "," + Num(x) +
         "," + Num(y) + "," + Num(z) + "," + Num(f) + "," + Num(g) + "," +
         Num(f - np::TargetBound(beta)) + "\n";
}

Routing ParseRoutingText(const std::string& text, int k) {
  std::vector<Orientation> choices;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto o = ParseOrientation(item);
    if (!o) throw UsageError("bad orientation \"" + item + "\"");
    choices.push_back(*o);
  }
  if (static_cast<int>(choices.size()) != k) {
    throw UsageError("start routing needs " + std::to_string(k) + " entries");
  }
  return Routing(std::move(choices));
}

struct Worst {
  Routing nash;
  MinHResult opt;
};

Worst WorstPair(const RingInstance& inst, const Options& opt) {
  Worst w;
  w.nash = WorstNash(inst, opt.limit, opt.jobs);
  w.opt = MinHOptimum(inst, w.nash, opt.limit, opt.jobs);
  return w;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Selfish ring routing: equilibria, optima and bound checks"};
  app.name("ringpoa");
  app.require_subcommand(1);
  // -h would collide with the --h option of npverify and tables.
  app.set_help_flag("--help", "Print help");
  app.fallthrough();
  Options opt;
  app.add_option("--in", opt.in, "Instance JSON file");
  app.add_option("--out", opt.out, "Write the result to FILE");
  app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--limit", opt.limit, "Largest agent count for enumeration")
      ->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Print the canonical instance");

  auto* nash = app.add_subcommand("nash", "Nash routings");
  bool all = false, worst = false, br = false;
  std::string start;
  auto* g_all = nash->add_flag("--all", all, "Every Nash routing");
  auto* g_worst = nash->add_flag("--worst", worst, "The worst Nash routing");
  auto* g_br = nash->add_flag("--br", br, "Best-response dynamics");
  g_all->excludes(g_worst)->excludes(g_br);
  g_worst->excludes(g_br);
  nash->add_option("--start", start, "Best-response start, e.g. cw,ccw");

  auto* optc = app.add_subcommand("opt", "Exact optimum");
  bool min_h = false;
  optc->add_flag("--min-h", min_h, "Closest optimum to the worst Nash routing");

  auto* poa = app.add_subcommand("poa", "Exact price of anarchy");
  auto* classify = app.add_subcommand("classify", "Classify the worst Nash routing");
  auto* check = app.add_subcommand("check", "Evaluate every bound");
  auto* profile = app.add_subcommand("profile", "Split-link profile");

  auto* npverify = app.add_subcommand("npverify", "Grid certification");
  int np_h = 3;
  double beta_max = 2.0, beta_step = 0.01, res = 1e-3;
  bool kkt = false;
  npverify->add_option("--h", np_h, "h")->required()->check(CLI::Range(3, 1000));
  npverify->add_option("--beta-max", beta_max, "Largest beta")->check(CLI::NonNegativeNumber);
  npverify->add_option("--beta-step", beta_step, "Beta step")->check(CLI::PositiveNumber);
  npverify->add_option("--res", res, "x resolution")->check(CLI::PositiveNumber);
  npverify->add_flag("--kkt", kkt, "Also emit KKT candidates (h >= 7)");

  auto* tables = app.add_subcommand("tables", "Case tables for h in {3,4,6}");
  int table_h = 3;
  double table_beta = 0;
  tables->add_option("--h", table_h, "h")->required()->check(CLI::IsMember({3, 4, 6}));
  tables->add_option("--beta", table_beta, "beta")->check(CLI::NonNegativeNumber);

  auto* search = app.add_subcommand("search", "Exhaustive worst-case search");
  SearchSpace space;
  search->add_option("--n", space.max_n, "Largest ring")->check(CLI::Range(2, 16));
  search->add_option("--k", space.k, "Agents")->check(CLI::Range(1, 8));
  search->add_option("--budget", space.budget, "Coefficient budget")->check(CLI::NonNegativeNumber);
  search->add_option("--degree", space.degree, "Latency degree")->check(CLI::Range(1, 8));

  auto* gen = app.add_subcommand("gen", "Random instance");
  std::uint64_t seed = 1;
  GenParams params;
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("--max-n", params.max_n, "Largest ring")->check(CLI::Range(2, 64));
  gen->add_option("--max-k", params.max_k, "Largest agent count")->check(CLI::Range(1, 64));
  gen->add_option("--max-coef", params.max_coef, "Largest coefficient")->check(CLI::NonNegativeNumber);
  gen->add_option("--degree", params.degree, "Latency degree")->check(CLI::Range(1, 8));

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream result;
  int code = kExitOk;
  try {
    if (*validate) {
      result << CanonicalText(LoadInstance(opt));
    } else if (*nash) {
      const RingInstance inst = LoadInstance(opt);
      Json j;
      if (br) {
        const Routing from = start.empty()
                                 ? Routing(inst.num_agents(), Orientation::kClockwise)
                                 : ParseRoutingText(start, inst.num_agents());
        const BestResponseRun run = BestResponse(inst, from);
        j["routing"] = ToJson(run.routing);
        j["moves"] = run.moves;
        j["max_latency"] = MaxLatency(inst, run.routing);
      } else if (worst) {
        const Routing r = WorstNash(inst, opt.limit, opt.jobs);
        j["routing"] = ToJson(r);
        j["max_latency"] = MaxLatency(inst, r);
      } else {
        j["nash"] = Json::array();
        for (const Routing& r : EnumerateNash(inst, opt.limit, opt.jobs)) {
          j["nash"].push_back(ToJson(r));
        }
      }
      result << j.dump() << "\n";
    } else if (*optc) {
      const RingInstance inst = LoadInstance(opt);
      Json j;
      if (min_h) {
        const Worst w = WorstPair(inst, opt);
        j["value"] = w.opt.value;
        j["routing"] = ToJson(w.opt.routing);
        j["nash"] = ToJson(w.nash);
        j["h"] = w.opt.h;
      } else {
        const OptimumResult r = ExactOptimum(inst, opt.limit);
        j["value"] = r.value;
        j["routing"] = ToJson(r.routing);
      }
      result << j.dump() << "\n";
    } else if (*poa) {
      const PoaResult r = Poa(LoadInstance(opt), opt.limit, opt.jobs);
      if (r.degenerate()) throw DegenerateOptimumError();
      result << ToString(*r.ratio) << "\n";
    } else if (*classify) {
      const RingInstance inst = LoadInstance(opt);
      const Worst w = WorstPair(inst, opt);
      Json j = ToJson(ClassifyPair(inst, w.nash, w.opt.routing));
      j["nash"] = ToJson(w.nash);
      j["opt"] = ToJson(w.opt.routing);
      result << j.dump() << "\n";
    } else if (*check) {
      const RingInstance inst = LoadInstance(opt);
      const BoundReport rep = CheckAllBounds(inst, opt.limit, opt.jobs);
      result << ToJson(rep).dump(2) << "\n";
      if (!rep.all_passed()) code = kExitCheckFailed;
    } else if (*profile) {
      const RingInstance inst = LoadInstance(opt);
      const Worst w = WorstPair(inst, opt);
      const ReductionResult red =
          ReduceNonSwitching(inst, w.nash, w.opt.routing, false, opt.limit);
      try {
        result << ToJson(Profile(red.instance, red.nash, red.opt)).dump() << "\n";
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    } else if (*npverify) {
      const np::GridReport rep =
          np::GridCertify(np_h, beta_max, beta_step, res, opt.jobs);
      result << kCsvHeader;
      for (const np::GridMin& m : rep.per_beta) {
        result << CsvRow(np_h, m.beta, "grid:" + m.cell, m.x, m.y, m.z, m.f, m.g);
      }
      bool kkt_ok = true;
      if (kkt && np_h >= 7) {
        const auto count =
            static_cast<int>(std::floor(beta_max / beta_step + 1e-9)) + 1;
        for (int i = 0; i < count; ++i) {
          for (const np::NPCandidate& c : np::KktCandidates(np_h, i * beta_step)) {
            result << CsvRow(np_h, c.beta, c.source + (c.feasible ? "" : ":infeasible"),
                             c.x, c.y, c.z, c.f, c.g);
            if (c.feasible && c.margin() < -1e-9) kkt_ok = false;
          }
        }
      }
      err << "h=" << np_h << " " << (rep.integer_x ? "integer" : "continuous")
          << " x, beta in [0," << Num(beta_max) << "] (cap), min margin "
          << Num(rep.worst.margin) << " at beta=" << Num(rep.worst.beta)
          << " x=" << Num(rep.worst.x) << " y=" << Num(rep.worst.y) << "\n";
      const bool gap_expected = np_h == 5;
      const bool certified = rep.worst.margin >= -1e-6;
      if (gap_expected) {
        err << (certified ? "no gap found for h=5\n" : "h=5 gap present\n");
        if (certified || !kkt_ok) code = kExitCheckFailed;
      } else if (!certified || !kkt_ok) {
        code = kExitCheckFailed;
      }
    } else if (*tables) {
      result << kCsvHeader;
      for (const np::TableRow& row : np::TableCases(table_h, table_beta)) {
        const double x = row.x;
        const np::FgValue v = np::EvalFg(table_h, table_beta, x, row.y, row.z);
        std::string branch = "table" + std::to_string(row.table) + ":" + row.label;
        if (!row.in_range) branch += ":infeasible";
        result << CsvRow(table_h, table_beta, branch, x, row.y, row.z, v.f, v.g);
        if (row.in_range) {
          if (row.margin() < -1e-9) code = kExitCheckFailed;
          if (!row.printed_is_f) {
            err << row.label << ": printed value " << Num(row.printed_closed)
                << " equals f+2-beta=" << Num(row.f_plus_2_minus_beta)
                << ", not f=" << Num(row.f) << "\n";
          }
        }
      }
    } else if (*search) {
      const SearchResult r = ExhaustivePoaSearch(space, opt.jobs);
      Json j;
      j["space"] = {{"max_n", space.max_n}, {"k", space.k},
                    {"budget", space.budget}, {"degree", space.degree}};
      j["examined"] = r.examined;
      j["degenerate"] = r.degenerate;
      j["poa"] = r.poa ? Json(ToString(*r.poa)) : Json(nullptr);
      j["nash_value"] = r.nash_value;
      j["opt_value"] = r.opt_value;
      j["reverified"] = r.reverified;
      j["instance"] = r.best ? ToJson(*r.best) : Json(nullptr);
      if (!opt.out.empty() && r.best) {
        result << CanonicalText(*r.best);
        Json side = j;
        side.erase("instance");
        side["seed"] = nullptr;
        side["order"] = "n, then a0 b0 a1 b1 ..., then s0 t0 s1 t1 ...";
        std::ofstream sidecar(opt.out + ".provenance.json");
        sidecar << side.dump(2) << "\n";
      } else {
        result << j.dump(2) << "\n";
      }
      if (space.degree == 1 && r.poa && *r.poa > Rational(2)) code = kExitCheckFailed;
      if (r.best && !r.reverified) code = kExitCheckFailed;
    } else if (*gen) {
      result << CanonicalText(RandomInstance(params, seed));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateOptimumError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (opt.out.empty()) {
    out << result.str();
  } else {
    std::ofstream file(opt.out);
    if (!file) {
      err << "error: cannot write " << opt.out << "\n";
      return kExitUsage;
    }
    file << result.str();
  }
  return code;
}

}  // namespace ringpoa
