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

#ifndef GALELEMKE_TOOLS_COMMANDS_H_
#define GALELEMKE_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace galelemke::cli {

enum ExitCode {
  kOk = 0,
  kNotEquilibrium = 1,
  kParseFailure = 2,
  kSolverFailure = 3,
  kBudgetFailure = 4,
};

// GALELEMKE_STEP_CAP if set to a positive integer, else `fallback`.
std::uint64_t StepCapFromEnvironment(std::uint64_t fallback);

// "4..16" or a single "6". Throws galelemke::InvalidArgument.
std::pair<int, int> ParseRange(std::string_view text);

struct GenOptions {
  std::string family;  // morris, triple-morris, permutation, random
  int m = 0;
  int n = 0;
  std::uint64_t seed = 1;
  std::int64_t low = 0;
  std::int64_t high = 99;
  // Unit-vector families: permute columns (labels and B together) by seed.
  bool shuffle_columns = false;
  std::string out;  // empty writes to standard output
};

struct SolveOptions {
  std::string game_path;
  std::string method = "lh";  // lh, support, enumerate
  int missing_label = 1;
  std::uint64_t seed = 1;
  // all-pairs, all-m-subsets, or one-per-label (.uvg only)
  std::string universe = "all-pairs";
  std::string path_csv;
  std::uint64_t step_cap = 0;  // 0 means the environment or default cap
};

struct VerifyOptions {
  std::string game_path;
  // "x... ; y...". Empty reads the first line containing ';' from input.
  std::string profile;
};

struct BenchOptions {
  std::string family;  // morris, triple-morris, permutation
  std::string m_range = "4..16";
  std::string labels = "1";  // all, 1, half
  // combinatorial-lemke or lh for the Morris families, support for
  // randomized support search; permutation games use support.
  std::string solver = "combinatorial-lemke";
  std::string universe = "all-m-subsets";
  int n = 0;
  bool exhaustive = false;
  std::uint64_t seeds = 0;
  std::uint64_t first_seed = 1;
  std::string out_csv;  // empty writes CSV to standard output
  int jobs = 1;
  std::uint64_t step_cap = 0;
};

struct PathOptions {
  std::string family = "morris";  // morris, triple-morris
  int m = 0;
  std::string labels;  // explicit label string instead of a family
  int missing_label = 1;
  std::uint64_t step_cap = 0;
};

int CmdGen(const GenOptions& options, std::ostream& out, std::ostream& err);
int CmdSolve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int CmdVerify(const VerifyOptions& options, std::istream& in, std::ostream& out,
              std::ostream& err);
int CmdBench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int CmdPath(const PathOptions& options, std::ostream& out, std::ostream& err);

struct BenchRecord {
  std::string instance;
  int m = 0;
  int n = 0;
  std::string solver;
  std::uint64_t param = 0;  // missing label or seed
  std::string metric;       // path_length, guesses or equilibria
  std::uint64_t value = 0;
  bool truncated = false;
  double wall_time = 0;  // seconds
};

std::string BenchCsvHeader();
std::string BenchCsvRow(const BenchRecord& record);

}  // namespace galelemke::cli

#endif  // GALELEMKE_TOOLS_COMMANDS_H_
