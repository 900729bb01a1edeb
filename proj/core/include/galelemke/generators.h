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

#ifndef GALELEMKE_GENERATORS_H_
#define GALELEMKE_GENERATORS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "galelemke/gale.h"
#include "galelemke/game.h"

namespace galelemke {

// Seeded generator whose output depends only on the seed, not on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);
  // Uniform in [low, high].
  std::int64_t UniformInt(std::int64_t low, std::int64_t high);

 private:
  std::mt19937_64 engine_;
};

// tau(1) = 1, tau(m) = m and tau(i) = i + (-1)^i in between. Throws
// InvalidArgument for odd or nonpositive m.
std::vector<int> MorrisTau(int m);
// tau reversed.
std::vector<int> MorrisSigma(int m);
// sigma followed by tau followed by sigma.
std::vector<int> TripleMorrisLabels(int m);

LabeledGalePolytope MorrisPolytope(int m);
LabeledGalePolytope TripleMorrisPolytope(int m);

// Unit-vector game of the dual cyclic polytope with f = m + labels.size()
// facets and moment-curve parameters 1..f, in canonical form.
UnitVectorGame CyclicUnitVectorGame(int m, const std::vector<int>& labels);

// m x 3m game of the triple Morris polytope.
UnitVectorGame TripleMorrisGame(int m);

struct PermutationGameSpec {
  int n = 0;
  std::vector<int> pi;  // pi[i-1] = image of i

  // Throws InvalidArgument unless pi is a permutation of 1..n.
  void Validate() const;
  // Cycles as ascending label lists, ordered by smallest element.
  std::vector<std::vector<int>> Cycles() const;
};

PermutationGameSpec IdentityPermutation(int n);

// A = I and row i of B is the unit vector e_{pi(i)}.
BimatrixGame PermutationGame(const PermutationGameSpec& spec);

// One equilibrium per nonempty union of cycles, both players uniform on it;
// sorted.
std::vector<MixedProfile> PermutationEquilibria(const PermutationGameSpec& spec);

// Uniform via Fisher-Yates. Throws InvalidArgument for n < 1.
PermutationGameSpec RandomPermutation(int n, std::uint64_t seed);

struct RandomGameOptions {
  std::int64_t low = 0;
  std::int64_t high = 99;
  int max_retries = 100;
  // Reject games that fail IsNondegenerate. Only applied when m + n is within
  // the vertex budget; beyond it payoffs are drawn from at least 10^6 values
  // and nondegeneracy is likely but not checked.
  bool require_nondegenerate = true;
  VertexBudget budget;
};

// Integer payoffs drawn uniformly from [low, high]. Throws BudgetExceeded
// when max_retries draws are all degenerate.
BimatrixGame RandomGame(int m, int n, std::uint64_t seed,
                        const RandomGameOptions& options = {});

}  // namespace galelemke

#endif  // GALELEMKE_GENERATORS_H_
