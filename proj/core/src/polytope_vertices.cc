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

#include "galelemke/polytope_vertices.h"

#include <algorithm>
#include <limits>
#include <string>

#include "galelemke/errors.h"
#include "galelemke/linear_system.h"

namespace galelemke {
namespace {

// Advances `subset` (ascending indices into 0..n-1) to the next k-subset in
// lexicographic order. Returns false after the last one.
bool NextSubset(std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == n - k + i) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

std::vector<LabeledVertex> Label(const std::vector<Vertex>& vertices,
                                 int universe) {
  std::vector<LabeledVertex> out;
  out.reserve(vertices.size());
  for (const Vertex& v : vertices) {
    LabeledVertex lv{v.point, LabelSet(universe)};
    for (int t : v.tight) lv.labels.Insert(t + 1);
    out.push_back(std::move(lv));
  }
  return out;
}

void CheckBudget(const BimatrixGame& game, const VertexBudget& budget) {
  if (game.num_labels() > budget.max_labels) {
    throw BudgetExceeded("vertex enumeration refused: m + n = " +
                         std::to_string(game.num_labels()) + " exceeds " +
                         std::to_string(budget.max_labels));
  }
}

}  // namespace

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t numer = static_cast<std::uint64_t>(n - k + i);
    if (out > std::numeric_limits<std::uint64_t>::max() / numer) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out = out * numer / static_cast<std::uint64_t>(i);
  }
  return out;
}

std::vector<Vertex> EnumerateVertices(const InequalitySystem& system,
                                      std::uint64_t max_subsets) {
  const int d = static_cast<int>(system.dimension());
  const int rows = static_cast<int>(system.size());
  if (system.rhs.size() != system.size()) {
    throw InvalidArgument("inequality system rhs length mismatch");
  }
  if (Binomial(rows, d) > max_subsets) {
    throw BudgetExceeded("vertex enumeration needs C(" + std::to_string(rows) +
                         ", " + std::to_string(d) + ") subsets");
  }
  std::vector<Vertex> found;
  if (d > rows) return found;
  std::vector<int> subset(d);
  for (int i = 0; i < d; ++i) subset[i] = i;
  do {
    RationalMatrix eq(d, d);
    RationalVector rhs(d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) eq(r, c) = system.lhs(subset[r], c);
      rhs[r] = system.rhs[subset[r]];
    }
    auto point = SolveSquare(eq, rhs);
    if (!point) continue;
    Vertex v{std::move(*point), {}};
    bool feasible = true;
    for (int r = 0; r < rows && feasible; ++r) {
      Rational lhs(0);
      for (int c = 0; c < d; ++c) lhs += system.lhs(r, c) * v.point[c];
      if (lhs > system.rhs[r]) feasible = false;
      if (lhs == system.rhs[r]) v.tight.push_back(r);
    }
    if (feasible) found.push_back(std::move(v));
  } while (NextSubset(subset, rows));

  std::sort(found.begin(), found.end(),
            [](const Vertex& a, const Vertex& b) { return a.point < b.point; });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const Vertex& a, const Vertex& b) {
                            return a.point == b.point;
                          }),
              found.end());
  return found;
}

InequalitySystem BestResponsePolytopeP(const BimatrixGame& game) {
  const int m = game.rows();
  const int n = game.cols();
  InequalitySystem p{RationalMatrix(m + n, m, Rational(0)),
                     RationalVector(m + n, Rational(0))};
  for (int i = 0; i < m; ++i) p.lhs(i, i) = Rational(-1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) p.lhs(m + j, i) = game.b()(i, j);
    p.rhs[m + j] = Rational(1);
  }
  return p;
}

InequalitySystem BestResponsePolytopeQ(const BimatrixGame& game) {
  const int m = game.rows();
  const int n = game.cols();
  InequalitySystem q{RationalMatrix(m + n, n, Rational(0)),
                     RationalVector(m + n, Rational(0))};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) q.lhs(i, j) = game.a()(i, j);
    q.rhs[i] = Rational(1);
  }
  for (int j = 0; j < n; ++j) q.lhs(m + j, j) = Rational(-1);
  return q;
}

std::vector<LabeledVertex> VerticesOfP(const BimatrixGame& game,
                                       const VertexBudget& budget) {
  CheckBudget(game, budget);
  return Label(EnumerateVertices(BestResponsePolytopeP(game),
                                 std::numeric_limits<std::uint64_t>::max()),
               game.num_labels());
}

std::vector<LabeledVertex> VerticesOfQ(const BimatrixGame& game,
                                       const VertexBudget& budget) {
  CheckBudget(game, budget);
  return Label(EnumerateVertices(BestResponsePolytopeQ(game),
                                 std::numeric_limits<std::uint64_t>::max()),
               game.num_labels());
}

std::vector<MixedProfile> CompletelyLabeledVertexPairs(
    const BimatrixGame& game, const VertexBudget& budget) {
  const auto p = VerticesOfP(game, budget);
  const auto q = VerticesOfQ(game, budget);
  std::vector<MixedProfile> out;
  for (const auto& vx : p) {
    for (const auto& vy : q) {
      if (!vx.labels.Union(vy.labels).Missing().empty()) continue;
      const bool x_zero = std::all_of(vx.point.begin(), vx.point.end(),
                                      [](const Rational& r) { return r.is_zero(); });
      const bool y_zero = std::all_of(vy.point.begin(), vy.point.end(),
                                      [](const Rational& r) { return r.is_zero(); });
      if (x_zero && y_zero) continue;
      out.push_back(MixedProfile::FromPolytopePoints(vx.point, vy.point));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace galelemke
