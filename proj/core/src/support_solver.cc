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

#include "galelemke/support_solver.h"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "galelemke/errors.h"
#include "galelemke/generators.h"
#include "galelemke/linear_system.h"
#include "galelemke/polytope_vertices.h"

namespace galelemke {
namespace {

void CheckSupport(const std::vector<int>& support, int limit,
                  const char* player) {
  if (support.empty()) {
    throw InvalidArgument(std::string(player) + " support is empty");
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 1 || support[i] > limit ||
        (i > 0 && support[i] <= support[i - 1])) {
      throw InvalidArgument(std::string(player) +
                            " support must be ascending within 1.." +
                            std::to_string(limit));
    }
  }
}

// Finds the strategy on `own` (indices into the rows of `payoff`) that makes
// every column of `other` pay the same. payoff(i, j) is the opponent's payoff
// when own plays i and the opponent plays j. Returns probabilities on the
// full index range plus the common value.
std::optional<std::pair<RationalVector, Rational>> Indifference(
    const RationalMatrix& payoff, const std::vector<int>& own,
    const std::vector<int>& other) {
  const std::size_t k = own.size();
  RationalMatrix system(k + 1, k + 1);
  RationalVector rhs(k + 1);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      system(r, c) = payoff(own[c] - 1, other[r] - 1);
    }
    system(r, k) = Rational(-1);
  }
  for (std::size_t c = 0; c < k; ++c) system(k, c) = Rational(1);
  rhs[k] = Rational(1);
  std::optional<RationalVector> solution = SolveSquare(system, rhs);
  if (!solution) return std::nullopt;
  RationalVector full(payoff.rows());
  for (std::size_t c = 0; c < k; ++c) {
    if ((*solution)[c].sign() <= 0) return std::nullopt;
    full[own[c] - 1] = (*solution)[c];
  }
  return std::make_pair(std::move(full), (*solution)[k]);
}

bool NothingOutsidePaysMore(const RationalMatrix& payoff,
                            const RationalVector& strategy,
                            const Rational& value) {
  for (std::size_t j = 0; j < payoff.cols(); ++j) {
    Rational earned;
    for (std::size_t i = 0; i < payoff.rows(); ++i) {
      if (!strategy[i].is_zero()) earned += payoff(i, j) * strategy[i];
    }
    if (earned > value) return false;
  }
  return true;
}

std::uint64_t CheckedProduct(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw BudgetExceeded("support universe does not fit in 64 bits");
  }
  return a * b;
}

// k-subset of 1..n with the given rank in the combinatorial number system,
// smallest element first.
std::vector<int> UnrankSubset(int n, int k, std::uint64_t index) {
  std::vector<int> out;
  for (int v = 1; v <= n && k > 0; ++v) {
    const std::uint64_t with_v = Binomial(n - v, k - 1);
    if (index < with_v) {
      out.push_back(v);
      --k;
    } else {
      index -= with_v;
    }
  }
  return out;
}

std::uint64_t CheckedSum(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw BudgetExceeded("support universe does not fit in 64 bits");
  }
  return a + b;
}

std::vector<int> Iota(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i + 1;
  return out;
}

}  // namespace

std::optional<MixedProfile> SolveSupport(const BimatrixGame& game,
                                         const SupportPair& pair) {
  CheckSupport(pair.rows, game.rows(), "row");
  CheckSupport(pair.cols, game.cols(), "column");
  if (pair.rows.size() != pair.cols.size()) {
    throw InvalidArgument("supports must have equal size");
  }
  // x makes player 2 indifferent on the column support; y does the same for
  // player 1 using A^T.
  auto x = Indifference(game.b(), pair.rows, pair.cols);
  if (!x) return std::nullopt;
  const RationalMatrix a_transposed = game.a().Transposed();
  auto y = Indifference(a_transposed, pair.cols, pair.rows);
  if (!y) return std::nullopt;
  if (!NothingOutsidePaysMore(game.b(), x->first, x->second)) {
    return std::nullopt;
  }
  if (!NothingOutsidePaysMore(a_transposed, y->first, y->second)) {
    return std::nullopt;
  }
  return MixedProfile{std::move(x->first), std::move(y->first)};
}

std::vector<MixedProfile> EnumerateEquilibria(const BimatrixGame& game,
                                              std::uint64_t budget) {
  std::uint64_t pairs;
  try {
    pairs = SupportUniverse::AllPairs(game.rows(), game.cols()).size();
  } catch (const BudgetExceeded&) {
    pairs = std::numeric_limits<std::uint64_t>::max();
  }
  if (pairs > budget) {
    throw BudgetExceeded(std::to_string(pairs) + " support pairs exceed " +
                         std::to_string(budget));
  }
  const int m = game.rows();
  const int n = game.cols();
  std::vector<MixedProfile> out;
  for (int k = 1; k <= std::min(m, n); ++k) {
    const std::uint64_t row_count = Binomial(m, k);
    const std::uint64_t col_count = Binomial(n, k);
    for (std::uint64_t r = 0; r < row_count; ++r) {
      SupportPair pair{UnrankSubset(m, k, r), {}};
      for (std::uint64_t c = 0; c < col_count; ++c) {
        pair.cols = UnrankSubset(n, k, c);
        if (auto profile = SolveSupport(game, pair)) {
          out.push_back(std::move(*profile));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SupportUniverse SupportUniverse::AllMSubsets(int m, int n) {
  if (m < 1 || n < m) throw InvalidArgument("need 1 <= m <= n");
  SupportUniverse u;
  u.kind_ = Kind::kMSubsets;
  u.m_ = m;
  u.n_ = n;
  u.size_ = Binomial(n, m);
  if (u.size_ == std::numeric_limits<std::uint64_t>::max()) {
    throw BudgetExceeded("support universe does not fit in 64 bits");
  }
  return u;
}

SupportUniverse SupportUniverse::OnePerClass(
    int m, std::vector<std::vector<int>> classes) {
  if (m < 1 || static_cast<int>(classes.size()) != m) {
    throw InvalidArgument("need one class per row");
  }
  SupportUniverse u;
  u.kind_ = Kind::kOnePerClass;
  u.m_ = m;
  u.size_ = 1;
  std::vector<int> seen;
  for (const std::vector<int>& c : classes) {
    if (c.empty()) throw InvalidArgument("a class is empty");
    u.size_ = CheckedProduct(u.size_, c.size());
    seen.insert(seen.end(), c.begin(), c.end());
  }
  std::sort(seen.begin(), seen.end());
  if (seen.front() < 1 ||
      std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InvalidArgument("classes must be disjoint sets of positive columns");
  }
  u.n_ = seen.back();
  u.classes_ = std::move(classes);
  return u;
}

SupportUniverse SupportUniverse::OnePerLabelClass(const UnitVectorGame& game) {
  game.Validate();
  std::vector<std::vector<int>> classes;
  for (int i = 1; i <= game.m; ++i) classes.push_back(game.ColumnsWithLabel(i));
  return OnePerClass(game.m, std::move(classes));
}

SupportUniverse SupportUniverse::AllPairs(int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("game dimensions must be positive");
  SupportUniverse u;
  u.kind_ = Kind::kAllPairs;
  u.m_ = m;
  u.n_ = n;
  for (int k = 1; k <= std::min(m, n); ++k) {
    u.size_ = CheckedSum(u.size_, CheckedProduct(Binomial(m, k), Binomial(n, k)));
  }
  return u;
}

SupportPair SupportUniverse::Unrank(std::uint64_t index) const {
  if (index >= size_) throw InvalidArgument("support index out of range");
  switch (kind_) {
    case Kind::kMSubsets:
      return {Iota(m_), UnrankSubset(n_, m_, index)};
    case Kind::kOnePerClass: {
      std::vector<int> cols;
      for (auto it = classes_.rbegin(); it != classes_.rend(); ++it) {
        cols.push_back((*it)[index % it->size()]);
        index /= it->size();
      }
      std::sort(cols.begin(), cols.end());
      return {Iota(m_), std::move(cols)};
    }
    case Kind::kAllPairs:
      break;
  }
  for (int k = 1;; ++k) {
    const std::uint64_t col_count = Binomial(n_, k);
    const std::uint64_t block = Binomial(m_, k) * col_count;
    if (index < block) {
      return {UnrankSubset(m_, k, index / col_count),
              UnrankSubset(n_, k, index % col_count)};
    }
    index -= block;
  }
}

SupportSearchResult RandomizedSupportSearch(const BimatrixGame& game,
                                            const SupportUniverse& universe,
                                            std::uint64_t seed,
                                            const SupportSearchOptions& options) {
  const std::uint64_t total = universe.size();
  Rng rng(seed);
  // Fisher-Yates over 0..total-1, storing only displaced entries.
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  auto at = [&](std::uint64_t i) {
    auto it = displaced.find(i);
    return it == displaced.end() ? i : it->second;
  };
  for (std::uint64_t i = 0; i < total; ++i) {
    const std::uint64_t j = i + rng.UniformBelow(total - i);
    const std::uint64_t pick = at(j);
    displaced[j] = at(i);
    SupportPair pair = universe.Unrank(pick);
    if (auto profile = SolveSupport(game, pair)) {
      SupportSearchResult result{std::move(*profile), std::move(pair),
                                 {seed, i + 1, total, std::nullopt}};
      if (options.count_equilibrium_supports) {
        result.stats.equilibrium_supports =
            CountEquilibriumSupports(game, universe);
      }
      return result;
    }
  }
  throw SolverError("no support in the universe yields an equilibrium");
}

std::uint64_t CountEquilibriumSupports(const BimatrixGame& game,
                                       const SupportUniverse& universe) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < universe.size(); ++i) {
    if (SolveSupport(game, universe.Unrank(i))) ++count;
  }
  return count;
}

Rational ExpectedGuesses(std::uint64_t universe_size,
                         std::uint64_t equilibrium_count) {
  if (equilibrium_count == 0 || equilibrium_count > universe_size) {
    throw InvalidArgument("need 0 < equilibrium count <= universe size");
  }
  const mpz_class u(std::to_string(universe_size));
  const mpz_class e(std::to_string(equilibrium_count));
  return Rational(u - e, e + 1) + Rational(1);
}

std::string StatsCsvHeader() { return "seed,guesses,universe,equilibria_found"; }

std::string StatsCsvRow(const SearchStats& stats) {
  return std::to_string(stats.seed) + "," + std::to_string(stats.guesses) +
         "," + std::to_string(stats.universe_size) + "," +
         (stats.equilibrium_supports
              ? std::to_string(*stats.equilibrium_supports)
              : std::string("1"));
}

}  // namespace galelemke
