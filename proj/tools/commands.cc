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

#include "commands.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "galelemke/errors.h"
#include "galelemke/gale.h"
#include "galelemke/game.h"
#include "galelemke/game_io.h"
#include "galelemke/generators.h"
#include "galelemke/lh_solver.h"
#include "galelemke/support_solver.h"

namespace galelemke::cli {
namespace {

int Guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kBudgetFailure;
  } catch (const SolverError& e) {
    err << "error: solver failed: " << e.what() << "\n";
    return kSolverFailure;
  }
}

std::uint64_t EffectiveStepCap(std::uint64_t requested) {
  return requested != 0 ? requested : StepCapFromEnvironment(kDefaultStepCap);
}

bool IsUnitVectorPath(const std::string& path) {
  return std::filesystem::path(path).extension() == ".uvg";
}

std::string JoinRationals(const RationalVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += v[i].ToString();
  }
  return out;
}

std::string FormatEquilibrium(const MixedProfile& p) {
  return "x=" + JoinRationals(p.x) + " ; y=" + JoinRationals(p.y);
}

UnitVectorGame ShuffleColumns(const UnitVectorGame& game, std::uint64_t seed) {
  const PermutationGameSpec order = RandomPermutation(game.n(), seed);
  UnitVectorGame out{game.m, std::vector<int>(game.n()),
                     RationalMatrix(game.m, game.n())};
  for (int j = 0; j < game.n(); ++j) {
    const int from = order.pi[j] - 1;
    out.labels[j] = game.labels[from];
    for (int i = 0; i < game.m; ++i) out.b(i, j) = game.b(i, from);
  }
  return out;
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    SaveText(path, text);
  }
}

std::vector<int> LabelsToRun(const std::string& which, int m) {
  if (which == "all") {
    std::vector<int> all(m);
    for (int k = 1; k <= m; ++k) all[k - 1] = k;
    return all;
  }
  if (which == "1") return {1};
  if (which == "half") return {m / 2};
  throw InvalidArgument("--labels must be all, 1 or half");
}

LabeledGalePolytope FamilyPolytope(const std::string& family, int m) {
  if (family == "morris") return MorrisPolytope(m);
  if (family == "triple-morris") return TripleMorrisPolytope(m);
  throw InvalidArgument("unknown family '" + family + "'");
}

// Runs tasks on up to `jobs` threads and hands each result to `sink` in task
// order as soon as every earlier task has finished.
void RunOrdered(const std::vector<std::function<BenchRecord()>>& tasks,
                int jobs, const std::function<void(const BenchRecord&)>& sink) {
  std::vector<std::optional<BenchRecord>> done(tasks.size());
  std::size_t committed = 0;
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        BenchRecord record = tasks[i]();
        std::lock_guard<std::mutex> lock(mu);
        done[i] = std::move(record);
        while (committed < done.size() && done[committed]) {
          sink(*done[committed]);
          ++committed;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <typename F>
BenchRecord Timed(BenchRecord record, F&& measure) {
  const auto start = std::chrono::steady_clock::now();
  measure(record);
  record.wall_time = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return record;
}

std::string FormatRatio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", r);
  return buf;
}

}  // namespace

std::uint64_t StepCapFromEnvironment(std::uint64_t fallback) {
  const char* text = std::getenv("GALELEMKE_STEP_CAP");
  if (text == nullptr) return fallback;
  std::uint64_t value = 0;
  const char* end = text + std::char_traits<char>::length(text);
  auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end || value == 0) return fallback;
  return value;
}

std::pair<int, int> ParseRange(std::string_view text) {
  auto number = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw InvalidArgument("bad range '" + std::string(text) + "'");
    }
    return value;
  };
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = number(text);
    return {v, v};
  }
  const int low = number(text.substr(0, dots));
  const int high = number(text.substr(dots + 2));
  if (low > high) throw InvalidArgument("empty range '" + std::string(text) + "'");
  return {low, high};
}

std::string BenchCsvHeader() {
  return "instance,m,n,solver,param,metric,value,truncated,wall_time_s";
}

std::string BenchCsvRow(const BenchRecord& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.6f", r.wall_time);
  std::ostringstream line;
  line << r.instance << ',' << r.m << ',' << r.n << ',' << r.solver << ','
       << r.param << ',' << r.metric << ',' << r.value << ','
       << (r.truncated ? 1 : 0) << ',' << time;
  return line.str();
}

int CmdGen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    if (o.family == "morris" || o.family == "triple-morris") {
      UnitVectorGame game = o.family == "morris"
                                ? CyclicUnitVectorGame(o.m, MorrisSigma(o.m))
                                : TripleMorrisGame(o.m);
      if (o.shuffle_columns) game = ShuffleColumns(game, o.seed);
      Emit(o.out, FormatUnitVectorGame(game), out);
    } else if (o.family == "permutation") {
      Emit(o.out, FormatBimatrixGame(PermutationGame(RandomPermutation(o.n, o.seed))),
           out);
    } else if (o.family == "random") {
      RandomGameOptions options;
      options.low = o.low;
      options.high = o.high;
      Emit(o.out,
           FormatBimatrixGame(RandomGame(o.m, o.n > 0 ? o.n : o.m, o.seed, options)),
           out);
    } else {
      throw InvalidArgument("unknown family '" + o.family +
                            "' (morris, triple-morris, permutation, random)");
    }
    return static_cast<int>(kOk);
  });
}

int CmdSolve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const BimatrixGame game = LoadGame(o.game_path);
    if (o.method == "lh") {
      LhOptions options;
      options.step_cap = EffectiveStepCap(o.step_cap);
      options.record_path = !o.path_csv.empty();
      const LhResult result = LhSolve(game, o.missing_label, options);
      if (result.path.endpoint == Endpoint::kTruncated) {
        throw BudgetExceeded("step cap of " + std::to_string(options.step_cap) +
                             " pivots reached");
      }
      if (!o.path_csv.empty()) SaveText(o.path_csv, PathToCsv(result.path));
      out << FormatEquilibrium(*result.equilibrium) << "\n"
          << "method lh\n"
          << "missing_label " << o.missing_label << "\n"
          << "path_length " << result.path_length << "\n";
    } else if (o.method == "support") {
      std::optional<SupportUniverse> universe;
      if (o.universe == "all-pairs") {
        universe = SupportUniverse::AllPairs(game.rows(), game.cols());
      } else if (o.universe == "all-m-subsets") {
        universe = SupportUniverse::AllMSubsets(game.rows(), game.cols());
      } else if (o.universe == "one-per-label") {
        if (!IsUnitVectorPath(o.game_path)) {
          throw InvalidArgument("one-per-label needs a .uvg game");
        }
        universe = SupportUniverse::OnePerLabelClass(LoadUnitVectorGame(o.game_path));
      } else {
        throw InvalidArgument("unknown universe '" + o.universe + "'");
      }
      const SupportSearchResult result =
          RandomizedSupportSearch(game, *universe, o.seed);
      out << FormatEquilibrium(result.equilibrium) << "\n"
          << "method support\n"
          << "seed " << o.seed << "\n"
          << "guesses " << result.stats.guesses << "\n"
          << "universe " << result.stats.universe_size << "\n";
    } else if (o.method == "enumerate") {
      const std::vector<MixedProfile> all = EnumerateEquilibria(game);
      for (const MixedProfile& p : all) out << FormatEquilibrium(p) << "\n";
      out << "equilibria " << all.size() << "\n";
    } else {
      throw InvalidArgument("unknown method '" + o.method +
                            "' (lh, support, enumerate)");
    }
    return static_cast<int>(kOk);
  });
}

int CmdVerify(const VerifyOptions& o, std::istream& in, std::ostream& out,
              std::ostream& err) {
  return Guarded(err, [&] {
    const BimatrixGame game = LoadGame(o.game_path);
    std::string text = o.profile;
    if (text.empty()) {
      std::string line;
      while (std::getline(in, line)) {
        if (line.find(';') != std::string::npos) {
          text = line;
          break;
        }
      }
      if (text.empty()) throw ParseError(1, 0, "no profile on standard input");
    }
    const MixedProfile profile = ParseProfile(text);
    profile.Validate(game.rows(), game.cols());
    const auto [x_labels, y_labels] = LabelsOfProfile(game, profile);
    const bool ok = VerifyEquilibrium(game, profile);
    const std::vector<int> missing = x_labels.Union(y_labels).Missing();
    out << "equilibrium " << (ok ? "true" : "false") << "\n"
        << "labels " << x_labels.ToString() << " | " << y_labels.ToString()
        << "\n"
        << "missing ";
    if (missing.empty()) {
      out << "none";
    } else {
      for (std::size_t i = 0; i < missing.size(); ++i) {
        out << (i > 0 ? "," : "") << missing[i];
      }
    }
    out << "\n";
    return static_cast<int>(ok ? kOk : kNotEquilibrium);
  });
}

int CmdPath(const PathOptions& o, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const LabeledGalePolytope polytope =
        o.labels.empty() ? FamilyPolytope(o.family, o.m)
                         : LabeledGalePolytope(o.m, ParseLabelString(o.labels, o.m));
    const std::uint64_t cap = EffectiveStepCap(o.step_cap);
    GaleLemkeWalker walker(polytope, o.missing_label);
    out << "labels " << FormatLabelString(polytope.labels(), polytope.m()) << "\n";
    out << "start " << walker.current().ToString() << "\n";
    while (!walker.done()) {
      if (walker.steps() >= cap) {
        throw BudgetExceeded("step cap of " + std::to_string(cap) +
                             " pivots reached");
      }
      const GaleLemkeWalker::Step s = walker.Advance();
      out << walker.current().ToString() << "  drop " << s.dropped_label
          << " pick " << s.picked_label << "\n";
    }
    out << "path_length " << walker.steps() << "\n";
    return static_cast<int>(kOk);
  });
}

int CmdBench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const std::uint64_t cap = EffectiveStepCap(o.step_cap);
    std::vector<std::function<BenchRecord()>> tasks;
    std::string kind;

    if (o.family == "morris" || o.family == "triple-morris") {
      const auto [low, high] = ParseRange(o.m_range);
      if (low < 2 || low % 2 != 0) {
        throw InvalidArgument("m range must start at an even m >= 2");
      }
      for (int m = low; m <= high; m += 2) {
        const std::string id = o.family + "-m" + std::to_string(m);
        const int n = o.family == "morris" ? m : 3 * m;
        if (o.solver == "combinatorial-lemke") {
          kind = "lemke";
          auto polytope = std::make_shared<LabeledGalePolytope>(
              FamilyPolytope(o.family, m));
          for (int k : LabelsToRun(o.labels, m)) {
            tasks.push_back([=] {
              return Timed({id, m, n, o.solver, std::uint64_t(k), "path_length"},
                           [&](BenchRecord& r) {
                             const PathLength len =
                                 CombinatorialLemkeLength(*polytope, k, cap);
                             r.value = len.length;
                             r.truncated = len.truncated;
                           });
            });
          }
        } else if (o.solver == "lh") {
          kind = "lemke";
          auto game = std::make_shared<BimatrixGame>(ToBimatrix(
              CyclicUnitVectorGame(m, FamilyPolytope(o.family, m).labels())));
          for (int k : LabelsToRun(o.labels, m)) {
            tasks.push_back([=] {
              return Timed({id, m, n, o.solver, std::uint64_t(k), "path_length"},
                           [&](BenchRecord& r) {
                             LhOptions options;
                             options.step_cap = cap;
                             options.record_path = false;
                             const LhResult res = LhSolve(*game, k, options);
                             r.value = res.path_length;
                             r.truncated =
                                 res.path.endpoint == Endpoint::kTruncated;
                           });
            });
          }
        } else if (o.solver == "support") {
          kind = "support";
          const UnitVectorGame uvg =
              CyclicUnitVectorGame(m, FamilyPolytope(o.family, m).labels());
          auto game = std::make_shared<BimatrixGame>(ToBimatrix(uvg));
          std::shared_ptr<SupportUniverse> universe;
          if (o.universe == "all-m-subsets") {
            universe = std::make_shared<SupportUniverse>(
                SupportUniverse::AllMSubsets(m, n));
          } else if (o.universe == "one-per-label") {
            universe = std::make_shared<SupportUniverse>(
                SupportUniverse::OnePerLabelClass(uvg));
          } else {
            throw InvalidArgument("unknown universe '" + o.universe + "'");
          }
          const std::uint64_t seeds = o.seeds > 0 ? o.seeds : 100;
          for (std::uint64_t s = o.first_seed; s < o.first_seed + seeds; ++s) {
            tasks.push_back([=] {
              return Timed({id, m, n, o.solver, s, "guesses"},
                           [&](BenchRecord& r) {
                             r.value = RandomizedSupportSearch(*game, *universe, s)
                                           .stats.guesses;
                           });
            });
          }
        } else {
          throw InvalidArgument("unknown solver '" + o.solver +
                                "' (combinatorial-lemke, lh, support)");
        }
      }
    } else if (o.family == "permutation") {
      kind = "permutation";
      if (o.n < 1) throw InvalidArgument("permutation bench needs --n >= 1");
      std::vector<PermutationGameSpec> specs;
      std::vector<std::uint64_t> params;
      if (o.exhaustive) {
        PermutationGameSpec spec = IdentityPermutation(o.n);
        std::uint64_t index = 0;
        do {
          specs.push_back(spec);
          params.push_back(index++);
        } while (std::next_permutation(spec.pi.begin(), spec.pi.end()));
      } else {
        const std::uint64_t seeds = o.seeds > 0 ? o.seeds : 100;
        for (std::uint64_t s = o.first_seed; s < o.first_seed + seeds; ++s) {
          specs.push_back(RandomPermutation(o.n, s));
          params.push_back(s);
        }
      }
      for (std::size_t i = 0; i < specs.size(); ++i) {
        const PermutationGameSpec spec = specs[i];
        const std::uint64_t param = params[i];
        tasks.push_back([=] {
          std::string id = "permutation";
          for (int v : spec.pi) id += "-" + std::to_string(v);
          return Timed({id, o.n, o.n, "support", param, "equilibria"},
                       [&](BenchRecord& r) {
                         r.value = EnumerateEquilibria(PermutationGame(spec)).size();
                       });
        });
      }
    } else {
      throw InvalidArgument("unknown bench family '" + o.family +
                            "' (morris, triple-morris, permutation)");
    }

    std::ofstream file;
    if (!o.out_csv.empty()) {
      file.open(o.out_csv, std::ios::out | std::ios::trunc);
      if (!file) throw ParseError(0, 0, "cannot write " + o.out_csv);
    }
    std::ostream& csv = o.out_csv.empty() ? out : file;
    std::ostream& summary = o.out_csv.empty() ? err : out;
    const std::string header = BenchCsvHeader() + "\n";
    csv.write(header.data(), header.size());
    csv.flush();

    std::vector<BenchRecord> records;
    RunOrdered(tasks, o.jobs, [&](const BenchRecord& r) {
      const std::string line = BenchCsvRow(r) + "\n";
      csv.write(line.data(), line.size());
      csv.flush();
      records.push_back(r);
    });

    std::size_t truncated = 0;
    for (const BenchRecord& r : records) truncated += r.truncated;
    summary << "records " << records.size() << "\n"
            << "truncated " << truncated << "\n";
    if (kind == "lemke") {
      std::map<int, std::uint64_t> first_label;
      for (const BenchRecord& r : records) {
        if (r.param == 1 && !r.truncated) first_label[r.m] = r.value;
      }
      for (const auto& [m, length] : first_label) {
        auto prev = first_label.find(m - 2);
        if (prev == first_label.end() || prev->second == 0) continue;
        summary << "growth m=" << m << " r=" << length << "/" << prev->second
                << "=" << FormatRatio(double(length) / double(prev->second))
                << "\n";
      }
    } else if (kind == "support") {
      std::map<int, std::pair<std::uint64_t, std::uint64_t>> totals;
      for (const BenchRecord& r : records) {
        totals[r.m].first += r.value;
        totals[r.m].second += 1;
      }
      for (const auto& [m, t] : totals) {
        const Rational mean = Rational(mpz_class(std::to_string(t.first)),
                                       mpz_class(std::to_string(t.second)));
        summary << "mean_guesses m=" << m << " " << mean.ToString() << " ("
                << FormatRatio(mean.ToDouble()) << ")\n";
      }
    } else if (kind == "permutation" && !records.empty()) {
      std::uint64_t total = 0;
      for (const BenchRecord& r : records) total += r.value;
      const Rational mean =
          Rational(mpz_class(std::to_string(total)),
                   mpz_class(std::to_string(records.size())));
      summary << "mean_equilibria " << mean.ToString() << " over "
              << records.size() << " games\n";
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace galelemke::cli
