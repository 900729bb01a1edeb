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

#include "galelemke/generators.h"

#include <algorithm>
#include <limits>
#include <string>

#include "galelemke/cyclic_geometry.h"
#include "galelemke/errors.h"

namespace galelemke {

std::uint64_t Rng::UniformBelow(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

std::int64_t Rng::UniformInt(std::int64_t low, std::int64_t high) {
  if (low > high) throw InvalidArgument("empty range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(high) - static_cast<std::uint64_t>(low);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::int64_t>(engine_());
  }
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(low) +
                                   UniformBelow(span + 1));
}

std::vector<int> MorrisTau(int m) {
  if (m < 2 || m % 2 != 0) {
    throw InvalidArgument("Morris strings need even m >= 2, got " +
                          std::to_string(m));
  }
  std::vector<int> tau(m);
  for (int i = 1; i <= m; ++i) {
    if (i == 1 || i == m) {
      tau[i - 1] = i;
    } else {
      tau[i - 1] = i % 2 == 0 ? i + 1 : i - 1;
    }
  }
  return tau;
}

std::vector<int> MorrisSigma(int m) {
  std::vector<int> sigma = MorrisTau(m);
  std::reverse(sigma.begin(), sigma.end());
  return sigma;
}

std::vector<int> TripleMorrisLabels(int m) {
  const std::vector<int> sigma = MorrisSigma(m);
  const std::vector<int> tau = MorrisTau(m);
  std::vector<int> out = sigma;
  out.insert(out.end(), tau.begin(), tau.end());
  out.insert(out.end(), sigma.begin(), sigma.end());
  return out;
}

LabeledGalePolytope MorrisPolytope(int m) {
  return LabeledGalePolytope(m, MorrisSigma(m));
}

LabeledGalePolytope TripleMorrisPolytope(int m) {
  return LabeledGalePolytope(m, TripleMorrisLabels(m));
}

UnitVectorGame CyclicUnitVectorGame(int m, const std::vector<int>& labels) {
  static_cast<void>(LabeledGalePolytope(m, labels));  // validates
  const int f = m + static_cast<int>(labels.size());
  UnitVectorGame game{m, labels, ToCanonicalForm(CyclicGeometry(m, f)).b};
  game.Validate();
  return game;
}

UnitVectorGame TripleMorrisGame(int m) {
  return CyclicUnitVectorGame(m, TripleMorrisLabels(m));
}

void PermutationGameSpec::Validate() const {
  if (n < 1) throw InvalidArgument("permutation size must be positive");
  if (static_cast<int>(pi.size()) != n) {
    throw InvalidArgument("permutation has " + std::to_string(pi.size()) +
                          " entries, expected " + std::to_string(n));
  }
  std::vector<bool> hit(n + 1, false);
  for (int v : pi) {
    if (v < 1 || v > n || hit[v]) {
      throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    }
    hit[v] = true;
  }
}

std::vector<std::vector<int>> PermutationGameSpec::Cycles() const {
  Validate();
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(n + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[i]; i = pi[i - 1]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    std::sort(cycle.begin(), cycle.end());
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

PermutationGameSpec IdentityPermutation(int n) {
  PermutationGameSpec spec{n, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) spec.pi[i] = i + 1;
  spec.Validate();
  return spec;
}

BimatrixGame PermutationGame(const PermutationGameSpec& spec) {
  spec.Validate();
  RationalMatrix a = RationalMatrix::Identity(spec.n);
  RationalMatrix b(spec.n, spec.n);
  for (int i = 0; i < spec.n; ++i) b(i, spec.pi[i] - 1) = Rational(1);
  return BimatrixGame(std::move(a), std::move(b));
}

std::vector<MixedProfile> PermutationEquilibria(const PermutationGameSpec& spec) {
  const std::vector<std::vector<int>> cycles = spec.Cycles();
  const int k = static_cast<int>(cycles.size());
  if (k >= 63) throw BudgetExceeded("too many cycles to list every union");
  std::vector<MixedProfile> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> support;
    for (int c = 0; c < k; ++c) {
      if (mask >> c & 1) {
        support.insert(support.end(), cycles[c].begin(), cycles[c].end());
      }
    }
    const Rational weight =
        Rational(1) / Rational(static_cast<long>(support.size()));
    RationalVector x(spec.n);
    for (int i : support) x[i - 1] = weight;
    out.push_back({x, x});
  }
  std::sort(out.begin(), out.end());
  return out;
}

PermutationGameSpec RandomPermutation(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("permutation size must be positive");
  PermutationGameSpec spec = IdentityPermutation(n);
  Rng rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.UniformBelow(i + 1));
    std::swap(spec.pi[i], spec.pi[j]);
  }
  return spec;
}

BimatrixGame RandomGame(int m, int n, std::uint64_t seed,
                        const RandomGameOptions& options) {
  if (m < 1 || n < 1) throw InvalidArgument("game dimensions must be positive");
  const bool checkable = m + n <= options.budget.max_labels;
  std::int64_t low = options.low;
  std::int64_t high = options.high;
  if (options.require_nondegenerate && !checkable && high - low < 999'999) {
    high = low + 999'999;
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < std::max(1, options.max_retries); ++attempt) {
    RationalMatrix a(m, n);
    RationalMatrix b(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = Rational(rng.UniformInt(low, high));
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) b(i, j) = Rational(rng.UniformInt(low, high));
    }
    BimatrixGame game(std::move(a), std::move(b));
    if (!options.require_nondegenerate || !checkable ||
        IsNondegenerate(game, options.budget)) {
      return game;
    }
  }
  throw BudgetExceeded("no nondegenerate " + std::to_string(m) + "x" +
                       std::to_string(n) + " game within " +
                       std::to_string(options.max_retries) + " draws");
}

}  // namespace galelemke
