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

#ifndef GALELEMKE_SUPPORT_SOLVER_H_
#define GALELEMKE_SUPPORT_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galelemke/game.h"

namespace galelemke {

// 1-based, ascending.
struct SupportPair {
  std::vector<int> rows;
  std::vector<int> cols;
};

// Equates the payoffs on each player's support and checks that the solution
// is positive on the support and that nothing outside pays more. A singular
// system means no equilibrium on this pair. Throws InvalidArgument when the
// supports differ in size, are empty or hold out-of-range indices.
std::optional<MixedProfile> SolveSupport(const BimatrixGame& game,
                                         const SupportPair& pair);

inline constexpr std::uint64_t kDefaultSupportBudget = std::uint64_t{1} << 24;

// Every equilibrium reachable by equal-size support pairs, deduplicated and
// sorted. Throws BudgetExceeded when more than `budget` pairs would be tried.
std::vector<MixedProfile> EnumerateEquilibria(
    const BimatrixGame& game, std::uint64_t budget = kDefaultSupportBudget);

// A finite set of support pairs addressed by index, so random orders over it
// need not be materialized.
class SupportUniverse {
 public:
  // Rows 1..m against every m-subset of the n columns.
  static SupportUniverse AllMSubsets(int m, int n);
  // Rows 1..m against one column from each class. Classes must be nonempty
  // and disjoint.
  static SupportUniverse OnePerClass(int m,
                                     std::vector<std::vector<int>> classes);
  // Rows 1..m against one column from each class N_1..N_m of a unit-vector
  // game.
  static SupportUniverse OnePerLabelClass(const UnitVectorGame& game);
  // Every pair of equal-size supports, smaller sizes first.
  static SupportUniverse AllPairs(int m, int n);

  // Throws BudgetExceeded at construction if the size overflows 64 bits.
  std::uint64_t size() const { return size_; }
  SupportPair Unrank(std::uint64_t index) const;

 private:
  enum class Kind { kMSubsets, kOnePerClass, kAllPairs };
  SupportUniverse() = default;

  Kind kind_ = Kind::kMSubsets;
  int m_ = 0;
  int n_ = 0;
  std::vector<std::vector<int>> classes_;
  std::uint64_t size_ = 0;
};

struct SearchStats {
  std::uint64_t seed = 0;
  // Supports tried, including the successful one.
  std::uint64_t guesses = 0;
  std::uint64_t universe_size = 0;
  // Supports of the universe that carry an equilibrium, when counted.
  std::optional<std::uint64_t> equilibrium_supports;
};

struct SupportSearchResult {
  MixedProfile equilibrium;
  SupportPair support;
  SearchStats stats;
};

struct SupportSearchOptions {
  // Also scan the whole universe to fill SearchStats::equilibrium_supports.
  bool count_equilibrium_supports = false;
};

// Visits the universe in a seeded uniform random order until SolveSupport
// succeeds. Throws SolverError when
// the universe holds no equilibrium.
SupportSearchResult RandomizedSupportSearch(
    const BimatrixGame& game, const SupportUniverse& universe,
    std::uint64_t seed, const SupportSearchOptions& options = {});

// Number of support pairs in the universe that yield an equilibrium.
std::uint64_t CountEquilibriumSupports(const BimatrixGame& game,
                                       const SupportUniverse& universe);

// (|U| - |E|) / (|E| + 1) + 1, the mean number of guesses when |E| of |U|
// supports succeed. Throws InvalidArgument unless 0 < |E| <= |U|.
Rational ExpectedGuesses(std::uint64_t universe_size,
                         std::uint64_t equilibrium_count);

std::string StatsCsvHeader();
std::string StatsCsvRow(const SearchStats& stats);

}  // namespace galelemke

#endif  // GALELEMKE_SUPPORT_SOLVER_H_
