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

#ifndef GALELEMKE_POLYTOPE_VERTICES_H_
#define GALELEMKE_POLYTOPE_VERTICES_H_

#include <cstdint>
#include <vector>

#include "galelemke/game.h"
#include "galelemke/matrix.h"

namespace galelemke {

// The polyhedron {z : lhs z <= rhs}.
struct InequalitySystem {
  RationalMatrix lhs;
  RationalVector rhs;

  std::size_t dimension() const { return lhs.cols(); }
  std::size_t size() const { return lhs.rows(); }
};

struct Vertex {
  RationalVector point;
  // 0-based indices of the inequalities holding with equality, ascending.
  std::vector<int> tight;
};

// Brute-force vertex enumeration: solves every d-subset of inequalities as
// equalities and keeps the feasible, distinct solutions. Output is sorted by
// point. Throws BudgetExceeded when C(size, d) > max_subsets.
std::vector<Vertex> EnumerateVertices(const InequalitySystem& system,
                                      std::uint64_t max_subsets);

// P = {x >= 0, B^T x <= 1} and Q = {A y <= 1, y >= 0} of the normalized game,
// with inequality k (0-based) carrying label k + 1.
InequalitySystem BestResponsePolytopeP(const BimatrixGame& game);
InequalitySystem BestResponsePolytopeQ(const BimatrixGame& game);

struct LabeledVertex {
  RationalVector point;
  LabelSet labels;
};

std::vector<LabeledVertex> VerticesOfP(const BimatrixGame& game,
                                       const VertexBudget& budget = {});
std::vector<LabeledVertex> VerticesOfQ(const BimatrixGame& game,
                                       const VertexBudget& budget = {});

// All completely labeled vertex pairs of P x Q other than (0, 0), rescaled to
// mixed strategies and sorted. For nondegenerate games this is the full
// equilibrium set.
std::vector<MixedProfile> CompletelyLabeledVertexPairs(
    const BimatrixGame& game, const VertexBudget& budget = {});

std::uint64_t Binomial(int n, int k);

}  // namespace galelemke

#endif  // GALELEMKE_POLYTOPE_VERTICES_H_
