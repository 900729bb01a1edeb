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

#ifndef GALELEMKE_CYCLIC_GEOMETRY_H_
#define GALELEMKE_CYCLIC_GEOMETRY_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "galelemke/gale.h"
#include "galelemke/matrix.h"
#include "galelemke/polytope_vertices.h"

namespace galelemke {

// Dual cyclic polytope in dimension m with f facets: row j of the system is
// mu(t_j) - mean, where mu(t) = (t, t^2, ..., t^m), and every right-hand side
// is 1.
struct CyclicPolytopeGeometry {
  int m = 0;
  int f = 0;
  RationalVector t;
  InequalitySystem system;
};

// Uses t_j = j. Throws InvalidArgument for odd m or f <= m.
CyclicPolytopeGeometry CyclicGeometry(int m, int f);
// Throws InvalidArgument unless t has f strictly increasing entries.
CyclicPolytopeGeometry CyclicGeometry(int m, int f, RationalVector t);

// Bit j is set when inequality j (0-based j-1) is tight.
GaleString IncidenceString(int f, const std::vector<int>& tight);

struct GeometricVertex {
  RationalVector point;
  GaleString incidence;
};

// Exact vertex enumeration of the inequality system, sorted by incidence
// string. Throws BudgetExceeded beyond `max_subsets` candidate bases.
std::vector<GeometricVertex> CyclicVertices(const CyclicPolytopeGeometry& geom,
                                            std::uint64_t max_subsets = 5'000'000);

// The polytope rewritten as {x >= 0, B^T x <= 1}: the first m facets become
// x_i >= 0 and the vertex 1^m 0^n becomes the origin.
struct CanonicalForm {
  RationalMatrix b;  // m x n
  // Leading m x m block of the original system; new coordinates are
  // 1 - leading * old.
  RationalMatrix leading;
};

// Throws SolverError when the leading block is singular or the origin vertex
// lies on one of the last n facets.
CanonicalForm ToCanonicalForm(const CyclicPolytopeGeometry& geom);

// Original point expressed in canonical coordinates.
RationalVector ToCanonicalPoint(const CanonicalForm& form,
                                const RationalVector& point);

// Vertices of the canonical polytope paired with their Gale strings, obtained
// by mapping every geometric vertex.
std::vector<std::pair<GaleString, RationalVector>> CanonicalVertexMap(
    const CyclicPolytopeGeometry& geom, const CanonicalForm& form,
    std::uint64_t max_subsets = 5'000'000);

}  // namespace galelemke

#endif  // GALELEMKE_CYCLIC_GEOMETRY_H_
