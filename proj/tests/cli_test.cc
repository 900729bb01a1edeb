// Copyright 2026 The galelemke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "commands.h"
#include "galelemke/errors.h"

namespace galelemke::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("galelemke_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string Example() {
    return Write("ab.bgame", "3 3\n1 0 0\n0 1 0\n0 0 1\n\n0 2 4\n3 2 0\n0 2 0\n");
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, SolveLhWorkedExample) {
  SolveOptions o;
  o.game_path = Example();
  EXPECT_EQ(CmdSolve(o, out_, err_), kOk);
  EXPECT_NE(out_.str().find("x=1/3 2/3 0 ; y=1/2 1/2 0"), std::string::npos);
  EXPECT_NE(out_.str().find("path_length 8"), std::string::npos);
}

TEST_F(CliTest, SolveSupportAndEnumerateAgree) {
  for (const char* method : {"support", "enumerate"}) {
    SolveOptions o;
    o.game_path = Example();
    o.method = method;
    std::ostringstream out;
    EXPECT_EQ(CmdSolve(o, out, err_), kOk) << method;
    EXPECT_EQ(out.str().rfind("x=1/3 2/3 0 ; y=1/2 1/2 0\n", 0), 0u) << out.str();
  }
}

TEST_F(CliTest, PathCsvDump) {
  SolveOptions o;
  o.game_path = Example();
  o.path_csv = (dir_ / "path.csv").string();
  ASSERT_EQ(CmdSolve(o, out_, err_), kOk);
  std::ifstream in(o.path_csv);
  std::string header;
  std::getline(in, header);
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_FALSE(header.empty());
  EXPECT_GE(rows, 8);
}

TEST_F(CliTest, ExitCodes) {
  SolveOptions bad;
  bad.game_path = Write("bad.bgame", "2 2\n1 x\n");
  EXPECT_EQ(CmdSolve(bad, out_, err_), kParseFailure);
  EXPECT_NE(err_.str().find("line 2, column 3"), std::string::npos) << err_.str();

  SolveOptions missing;
  missing.game_path = (dir_ / "nope.bgame").string();
  EXPECT_EQ(CmdSolve(missing, out_, err_), kParseFailure);

  // No equilibrium has full row support in the example.
  SolveOptions none;
  none.game_path = Example();
  none.method = "support";
  none.universe = "all-m-subsets";
  EXPECT_EQ(CmdSolve(none, out_, err_), kSolverFailure);

  SolveOptions capped;
  capped.game_path = Example();
  capped.step_cap = 3;
  EXPECT_EQ(CmdSolve(capped, out_, err_), kBudgetFailure);

  SolveOptions method;
  method.game_path = Example();
  method.method = "simplex";
  EXPECT_EQ(CmdSolve(method, out_, err_), kParseFailure);
}

TEST_F(CliTest, StepCapFromEnvironment) {
  ::setenv("GALELEMKE_STEP_CAP", "3", 1);
  EXPECT_EQ(StepCapFromEnvironment(100), 3u);
  SolveOptions o;
  o.game_path = Example();
  EXPECT_EQ(CmdSolve(o, out_, err_), kBudgetFailure);
  ::setenv("GALELEMKE_STEP_CAP", "junk", 1);
  EXPECT_EQ(StepCapFromEnvironment(100), 100u);
  ::unsetenv("GALELEMKE_STEP_CAP");
  EXPECT_EQ(StepCapFromEnvironment(100), 100u);
}

TEST_F(CliTest, VerifyReports) {
  VerifyOptions o;
  o.game_path = Example();
  o.profile = "1/3 2/3 0 ; 1/2 1/2 0";
  std::istringstream none;
  EXPECT_EQ(CmdVerify(o, none, out_, err_), kOk);
  EXPECT_EQ(out_.str(), "equilibrium true\nlabels 345 | 126\nmissing none\n");

  std::ostringstream out;
  o.profile = "1 0 0 ; 1 0 0";
  EXPECT_EQ(CmdVerify(o, none, out, err_), kNotEquilibrium);
  EXPECT_NE(out.str().find("equilibrium false"), std::string::npos);
  EXPECT_NE(out.str().find("missing 4"), std::string::npos);

  o.profile = "1 0 ; 1 0 0";
  EXPECT_EQ(CmdVerify(o, none, out, err_), kParseFailure);
}

TEST_F(CliTest, SolveOutputPipesIntoVerify) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenOptions g;
    g.family = "random";
    g.m = 4;
    g.n = 3;
    g.seed = seed;
    g.out = (dir_ / "r.bgame").string();
    ASSERT_EQ(CmdGen(g, out_, err_), kOk);
    for (const char* method : {"lh", "support"}) {
      SolveOptions s;
      s.game_path = g.out;
      s.method = method;
      s.seed = seed;
      std::ostringstream solved;
      ASSERT_EQ(CmdSolve(s, solved, err_), kOk);
      VerifyOptions v;
      v.game_path = g.out;
      std::istringstream in(solved.str());
      std::ostringstream report;
      EXPECT_EQ(CmdVerify(v, in, report, err_), kOk) << solved.str();
      EXPECT_EQ(report.str().rfind("equilibrium true", 0), 0u);
    }
  }
}

TEST_F(CliTest, GenIsDeterministic) {
  GenOptions g;
  g.family = "permutation";
  g.n = 5;
  g.seed = 7;
  std::ostringstream a;
  std::ostringstream b;
  ASSERT_EQ(CmdGen(g, a, err_), kOk);
  ASSERT_EQ(CmdGen(g, b, err_), kOk);
  EXPECT_EQ(a.str(), b.str());
  g.seed = 8;
  std::ostringstream c;
  ASSERT_EQ(CmdGen(g, c, err_), kOk);
  EXPECT_EQ(c.str().substr(0, 4), "5 5\n");
}

TEST_F(CliTest, GenTripleMorrisLabels) {
  GenOptions g;
  g.family = "triple-morris";
  g.m = 6;
  ASSERT_EQ(CmdGen(g, out_, err_), kOk);
  std::istringstream in(out_.str());
  std::string header;
  std::string labels;
  std::getline(in, header);
  std::getline(in, labels);
  EXPECT_EQ(header, "6 18");
  EXPECT_EQ(labels, "6 4 5 2 3 1 1 3 2 5 4 6 6 4 5 2 3 1");

  g.m = 5;
  EXPECT_EQ(CmdGen(g, out_, err_), kParseFailure);
  g.family = "nonsense";
  EXPECT_EQ(CmdGen(g, out_, err_), kParseFailure);
}

TEST_F(CliTest, GeneratedUnitVectorGameSolves) {
  GenOptions g;
  g.family = "triple-morris";
  g.m = 2;
  g.shuffle_columns = true;
  g.seed = 3;
  g.out = (dir_ / "t.uvg").string();
  ASSERT_EQ(CmdGen(g, out_, err_), kOk);
  SolveOptions s;
  s.game_path = g.out;
  s.method = "support";
  s.universe = "one-per-label";
  EXPECT_EQ(CmdSolve(s, out_, err_), kOk) << err_.str();
  s.method = "enumerate";
  std::ostringstream out;
  EXPECT_EQ(CmdSolve(s, out, err_), kOk);
  EXPECT_NE(out.str().find("equilibria 3"), std::string::npos);
}

TEST_F(CliTest, BenchMorrisGrowthAndOrdering) {
  BenchOptions b;
  b.family = "morris";
  b.m_range = "4..8";
  b.labels = "all";
  std::ostringstream csv;
  std::ostringstream summary;
  ASSERT_EQ(CmdBench(b, csv, summary), kOk);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, BenchCsvHeader());
  std::getline(in, line);
  EXPECT_EQ(line.rfind("morris-m4,4,4,combinatorial-lemke,1,path_length,6,0,", 0), 0u);
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4 + 6 + 8);
  EXPECT_NE(summary.str().find("growth m=8 r=40/16"), std::string::npos);
}

std::string DropWallTime(const std::string& csv) {
  std::istringstream in(csv);
  std::string out;
  for (std::string line; std::getline(in, line);) {
    out += line.substr(0, line.rfind(',')) + "\n";
  }
  return out;
}

TEST_F(CliTest, BenchDeterministicAcrossJobs) {
  BenchOptions b;
  b.family = "triple-morris";
  b.m_range = "2..4";
  b.solver = "support";
  b.seeds = 12;
  std::ostringstream one;
  std::ostringstream summary;
  ASSERT_EQ(CmdBench(b, one, summary), kOk);
  b.jobs = 4;
  std::ostringstream four;
  ASSERT_EQ(CmdBench(b, four, summary), kOk);
  EXPECT_EQ(DropWallTime(one.str()), DropWallTime(four.str()));
  EXPECT_NE(summary.str().find("mean_guesses"), std::string::npos);
}

TEST_F(CliTest, BenchTripleMatchesSingle) {
  auto lengths = [&](const char* family) {
    BenchOptions b;
    b.family = family;
    b.m_range = "2..10";
    std::ostringstream csv;
    std::ostringstream summary;
    EXPECT_EQ(CmdBench(b, csv, summary), kOk);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    std::vector<std::string> values;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string f;
      for (int i = 0; i < 7; ++i) std::getline(fields, f, ',');
      values.push_back(f);
    }
    return values;
  };
  EXPECT_EQ(lengths("morris"), lengths("triple-morris"));
}

TEST_F(CliTest, BenchPermutationExhaustive) {
  BenchOptions b;
  b.family = "permutation";
  b.n = 4;
  b.exhaustive = true;
  std::ostringstream csv;
  std::ostringstream summary;
  ASSERT_EQ(CmdBench(b, csv, summary), kOk);
  EXPECT_NE(summary.str().find("mean_equilibria 4 over 24 games"), std::string::npos)
      << summary.str();
}

TEST_F(CliTest, BenchTruncation) {
  BenchOptions b;
  b.family = "morris";
  b.m_range = "10";
  b.step_cap = 50;
  b.out_csv = (dir_ / "b.csv").string();
  // With a CSV file the summary goes to the main stream.
  ASSERT_EQ(CmdBench(b, out_, err_), kOk);
  std::ifstream in(b.out_csv);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  EXPECT_EQ(line.rfind("morris-m10,10,10,combinatorial-lemke,1,path_length,50,1,", 0), 0u)
      << line;
  EXPECT_NE(out_.str().find("truncated 1"), std::string::npos);
}

TEST_F(CliTest, PathCommand) {
  PathOptions p;
  p.m = 2;
  ASSERT_EQ(CmdPath(p, out_, err_), kOk);
  EXPECT_EQ(out_.str(),
            "labels 21\nstart 11..\n.11.  drop 1 pick 2\n..11  drop 2 pick 1\n"
            "path_length 2\n");
}

TEST(ParseRangeTest, Forms) {
  EXPECT_EQ(ParseRange("4..16"), std::make_pair(4, 16));
  EXPECT_EQ(ParseRange("6"), std::make_pair(6, 6));
  EXPECT_THROW(ParseRange("8..4"), InvalidArgument);
  EXPECT_THROW(ParseRange("a..b"), InvalidArgument);
}

TEST(BenchCsvTest, RowFormat) {
  BenchRecord r{"morris-m4", 4, 4, "lh", 2, "path_length", 12, false, 0.5};
  EXPECT_EQ(BenchCsvRow(r), "morris-m4,4,4,lh,2,path_length,12,0,0.500000");
  EXPECT_EQ(BenchCsvHeader(), "instance,m,n,solver,param,metric,value,truncated,wall_time_s");
}

}  // namespace
}  // namespace galelemke::cli
