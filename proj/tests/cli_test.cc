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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "ringpoa/json_io.h"

namespace ringpoa {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ringpoa");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("ringpoa_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string WriteInstance(const std::string& name, const RingInstance& inst) {
    return Write(name, CanonicalText(inst));
  }

  fs::path dir_;
};

TEST_F(CliTest, PoaOfTightInstance) {
  const CliRun r = Cli({"poa", "--in", WriteInstance("tight.json", testing::Tight())});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "2/1\n");
}

TEST_F(CliTest, CheckFixB) {
  const CliRun r = Cli({"check", "--in", WriteInstance("fixb.json", testing::FixB())});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  for (const Json& c : j) {
    if (c["applicable"].get<bool>()) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
  }
}

TEST_F(CliTest, CheckTightReportsEveryCheck) {
  const CliRun r = Cli({"check", "--in", WriteInstance("t.json", testing::Tight())});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  const Json j = Json::parse(r.out);
  bool saw_poa_check = false;
  for (const Json& c : j) {
    ASSERT_TRUE(c.contains("check") && c.contains("lhs") && c.contains("witness"));
    if (c["check"] == "poa_at_most_two") {
      saw_poa_check = true;
      EXPECT_EQ(c["lhs"], "2/1");
      EXPECT_EQ(c["rhs"], "2/1");
    }
  }
  EXPECT_TRUE(saw_poa_check);
}

TEST_F(CliTest, TablesHThree) {
  const CliRun r = Cli({"tables", "--h", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "h,beta,branch,x,y,z,f,g,margin");
  std::vector<std::string> cells;
  std::stringstream ss(first);
  for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
  ASSERT_EQ(cells.size(), 9u);
  EXPECT_NEAR(std::stod(cells[4]), 6.0 / 7, 1e-9);
  EXPECT_NEAR(std::stod(cells[6]), 1.0 / 3, 1e-9);
  EXPECT_NEAR(std::stod(cells[8]), 0, 1e-9);
}

TEST_F(CliTest, TablesRejectFive) {
  EXPECT_EQ(Cli({"tables", "--h", "5"}).code, kExitUsage);
}

TEST_F(CliTest, GenValidateRoundTrip) {
  const std::string path = (dir_ / "g.json").string();
  for (const char* seed : {"1", "2", "99"}) {
    const CliRun g = Cli({"gen", "--seed", seed, "--out", path});
    ASSERT_EQ(g.code, kExitOk) << g.err;
    const std::string text = Slurp(path);
    const CliRun v = Cli({"validate", "--in", path});
    EXPECT_EQ(v.code, kExitOk) << v.err;
    EXPECT_EQ(v.out, text);
    EXPECT_EQ(Cli({"gen", "--seed", seed}).out, text);
  }
}

TEST_F(CliTest, MalformedInput) {
  EXPECT_EQ(Cli({"validate", "--in", Write("bad.json", "{\"n\": 2")}).code, kExitUsage);
  EXPECT_EQ(Cli({"validate", "--in", Write("neg.json",
                                           R"({"n":2,"degree":1,"links":[[1,0]],"agents":[[0,1]]})")})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"poa", "--in", (dir_ / "missing.json").string()}).code, kExitUsage);
  EXPECT_EQ(Cli({"poa"}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({}).code, kExitUsage);
}

TEST_F(CliTest, DegeneratePoaIsUsageError) {
  const RingInstance zero{3, 1, {{0, 0}, {0, 0}, {0, 0}}, {{0, 1}}};
  const CliRun r = Cli({"poa", "--in", WriteInstance("z.json", zero)});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("degenerate"), std::string::npos);
}

TEST_F(CliTest, NashAndOpt) {
  const std::string in = WriteInstance("t.json", testing::Tight());
  const Json worst = Json::parse(Cli({"nash", "--worst", "--in", in}).out);
  EXPECT_EQ(worst["max_latency"], 2);
  const Json opt = Json::parse(Cli({"opt", "--in", in}).out);
  EXPECT_EQ(opt["value"], 1);
  const Json minh = Json::parse(Cli({"opt", "--min-h", "--in", in}).out);
  EXPECT_EQ(minh["h"], 2);
  const Json br = Json::parse(Cli({"nash", "--br", "--start", "ccw,ccw", "--in", in}).out);
  EXPECT_TRUE(br.contains("moves"));
  EXPECT_EQ(Cli({"nash", "--br", "--start", "up", "--in", in}).code, kExitUsage);
}

TEST_F(CliTest, JobsDoNotChangeOutput) {
  const std::string in = WriteInstance("t.json", testing::Tight());
  for (const char* cmd : {"check", "classify"}) {
    EXPECT_EQ(Cli({cmd, "--in", in}).out, Cli({cmd, "--jobs", "3", "--in", in}).out);
  }
  EXPECT_EQ(Cli({"npverify", "--h", "8", "--beta-max", "0.5", "--beta-step", "0.1", "--res", "0.01"}).out,
            Cli({"npverify", "--jobs", "4", "--h", "8", "--beta-max", "0.5", "--beta-step", "0.1",
                 "--res", "0.01"})
                .out);
}

TEST_F(CliTest, NpverifyHFiveReportsGap) {
  const CliRun r = Cli({"npverify", "--h", "5", "--beta-max", "0.3", "--beta-step", "0.05"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("gap present"), std::string::npos);
  const CliRun six = Cli({"npverify", "--h", "6", "--beta-max", "2", "--beta-step", "0.1"});
  EXPECT_EQ(six.code, kExitOk) << six.err;
}

TEST_F(CliTest, SearchWritesInstanceAndSidecar) {
  const std::string path = (dir_ / "found.json").string();
  const CliRun r = Cli({"search", "--n", "3", "--k", "2", "--budget", "3", "--out", path});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const std::string text = Slurp(path);
  EXPECT_EQ(Cli({"validate", "--in", path}).out, text);
  EXPECT_EQ(Cli({"poa", "--in", path}).out, "2/1\n");
  const Json side = Json::parse(Slurp(path + ".provenance.json"));
  EXPECT_EQ(side["poa"], "2/1");
  EXPECT_EQ(side["space"]["budget"], 3);
}

}  // namespace
}  // namespace ringpoa
