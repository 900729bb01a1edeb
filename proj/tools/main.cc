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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"

namespace cli = galelemke::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact Lemke-Howson, support enumeration and hard-instance tools"};
  app.require_subcommand(1);

  cli::GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a game instance");
  gen_cmd->add_option("family", gen.family,
                      "morris, triple-morris, permutation or random")
      ->required();
  gen_cmd->add_option("--m", gen.m, "Rows (even for the Morris families)");
  gen_cmd->add_option("--n", gen.n, "Columns, or permutation size");
  gen_cmd->add_option("--seed", gen.seed, "Seed for permutation and random");
  gen_cmd->add_option("--low", gen.low, "Smallest random payoff");
  gen_cmd->add_option("--high", gen.high, "Largest random payoff");
  gen_cmd->add_flag("--shuffle-columns", gen.shuffle_columns,
                    "Permute the columns of a unit-vector game by --seed");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");

  cli::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Find an equilibrium");
  solve_cmd->add_option("game", solve.game_path, ".bgame or .uvg file")
      ->required();
  solve_cmd->add_option("--method", solve.method, "lh, support or enumerate");
  solve_cmd->add_option("--missing-label", solve.missing_label,
                        "Missing label for lh");
  solve_cmd->add_option("--seed", solve.seed, "Seed for support");
  solve_cmd->add_option("--universe", solve.universe,
                        "all-pairs, all-m-subsets or one-per-label");
  solve_cmd->add_option("--path-csv", solve.path_csv, "Dump the lh path");
  solve_cmd->add_option("--step-cap", solve.step_cap, "Pivot limit");

  cli::VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a profile and report its labels");
  verify_cmd->add_option("game", verify.game_path, ".bgame or .uvg file")
      ->required();
  verify_cmd->add_option("profile", verify.profile,
                         "\"x... ; y...\" (default: read from stdin)");

  cli::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Measure path lengths or guesses");
  bench_cmd->add_option("family", bench.family,
                        "morris, triple-morris or permutation")
      ->required();
  bench_cmd->add_option("--m", bench.m_range, "Range such as 4..16");
  bench_cmd->add_option("--labels", bench.labels, "all, 1 or half");
  bench_cmd->add_option("--solver", bench.solver,
                        "combinatorial-lemke, lh or support");
  bench_cmd->add_option("--universe", bench.universe,
                        "all-m-subsets or one-per-label");
  bench_cmd->add_option("--n", bench.n, "Permutation size");
  bench_cmd->add_flag("--exhaustive", bench.exhaustive, "All n! permutations");
  bench_cmd->add_option("--seeds", bench.seeds, "Number of seeds");
  bench_cmd->add_option("--first-seed", bench.first_seed, "First seed");
  bench_cmd->add_option("-o,--out", bench.out_csv, "CSV file (default stdout)");
  bench_cmd->add_option("--jobs", bench.jobs, "Concurrent runs");
  bench_cmd->add_option("--step-cap", bench.step_cap, "Pivot limit per run");

  cli::PathOptions path;
  auto* path_cmd = app.add_subcommand(
      "path", "Print a combinatorial Lemke path as Gale strings");
  path_cmd->add_option("family", path.family, "morris or triple-morris");
  path_cmd->add_option("--m", path.m, "Even dimension")->required();
  path_cmd->add_option("--labels", path.labels, "Explicit label string");
  path_cmd->add_option("--missing-label", path.missing_label, "Missing label");
  path_cmd->add_option("--step-cap", path.step_cap, "Pivot limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kParseFailure;
  }

  if (*gen_cmd) return cli::CmdGen(gen, std::cout, std::cerr);
  if (*solve_cmd) return cli::CmdSolve(solve, std::cout, std::cerr);
  if (*verify_cmd) return cli::CmdVerify(verify, std::cin, std::cout, std::cerr);
  if (*bench_cmd) return cli::CmdBench(bench, std::cout, std::cerr);
  return cli::CmdPath(path, std::cout, std::cerr);
}
