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

#ifndef GALELEMKE_EULER_GRAPH_H_
#define GALELEMKE_EULER_GRAPH_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "galelemke/gale.h"

namespace galelemke {

// Multigraph on nodes 1..m traced by the closed tour 1, ..., m, l(1), ...,
// l(n), 1. Edge e joins the labels at tour positions e+1 and e+2 (cyclic).
struct EulerGraph {
  int m = 0;
  std::vector<std::pair<int, int>> edges;

  // Degree of each node, index 0 unused. A loop counts twice.
  std::vector<int> Degrees() const;
};

EulerGraph BuildEulerGraph(const LabeledGalePolytope& polytope);

// Edge indices of a perfect matching, ascending.
using Matching = std::vector<int>;

// Every loop-free perfect matching, in lexicographic order of edge indices.
// Throws BudgetExceeded once more than `budget` matchings are found.
std::vector<Matching> EulerMatchings(const LabeledGalePolytope& polytope,
                                     std::uint64_t budget = 10'000'000);

// The string with ones at both tour positions of every matched edge.
GaleString MatchingToGaleString(const LabeledGalePolytope& polytope,
                                const Matching& matching);

}  // namespace galelemke

#endif  // GALELEMKE_EULER_GRAPH_H_
