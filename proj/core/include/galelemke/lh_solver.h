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

#ifndef GALELEMKE_LH_SOLVER_H_
#define GALELEMKE_LH_SOLVER_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "galelemke/game.h"
#include "galelemke/pivot_path.h"

namespace galelemke {

inline constexpr std::uint64_t kDefaultStepCap = 10'000'000;

struct LhOptions {
  std::uint64_t step_cap = kDefaultStepCap;
  // When false only the step count is kept; path.steps stays empty.
  bool record_path = true;
  // Lexicographic ratio test. With it off, ties go to the lowest row and a
  // repeated basis pair is reported as cycling.
  bool lexicographic = true;
  // Set once the game is known to be nondegenerate: any ratio-test tie then
  // throws SolverError instead of being broken lexicographically.
  bool require_no_ties = false;
};

struct LhResult {
  // Present unless the path ended at the origin (only possible when started
  // from an equilibrium) or was truncated.
  std::optional<MixedProfile> equilibrium;
  PivotPath path;
  std::uint64_t path_length = 0;
  // Final bases of P and Q; a valid start for LhSolveFrom.
  Basis end_p;
  Basis end_q;
  // Unscaled points of P and Q at the end of the path.
  RationalVector x_point;
  RationalVector y_point;
  // Ratio tests that needed the lexicographic tie-break.
  std::uint64_t ties = 0;
};

// Lemke-Howson from (0, 0) on P x Q of the normalized game with the given
// missing label in 1..m+n. Pivots alternate between P and Q.
LhResult LhSolve(const BimatrixGame& game, int missing_label,
                 const LhOptions& options = {});

// Same, starting at the vertex pair with the given bases, which must be a
// completely labeled pair of P x Q (usually an earlier endpoint).
LhResult LhSolveFrom(const BimatrixGame& game, int missing_label,
                     const Basis& start_p, const Basis& start_q,
                     const LhOptions& options = {});

// One run per missing label 1..m+n.
std::vector<std::pair<int, LhResult>> LhAllLabels(const BimatrixGame& game,
                                                  const LhOptions& options = {});

// Vertex sequences of P and of Q visited by a two-polytope path, each
// starting with its start vertex.
struct ProjectedPath {
  std::vector<Basis> p_vertices;
  std::vector<Basis> q_vertices;
};

ProjectedPath ProjectPath(const PivotPath& path);

// True if no vertex occurs twice.
bool IsSimple(const std::vector<Basis>& vertices);

// The tight-label sets of the (P, Q) vertex pair before the first pivot and
// after every pivot.
std::vector<std::pair<LabelSet, LabelSet>> VertexPairLabels(
    const PivotPath& path, int num_labels);

// Labels of the facets a vertex lies on: the complement of its basis.
LabelSet TightLabels(const Basis& basis, int num_labels);

// The Lemke path on the labeled polytope P^l of a unit vector game, obtained
// as the P-projection of the LH path on ToBimatrix(game). Facet m+j carries
// label labels[j]; the basis keeps facet ids. missing_label may be any of
// 1..m+n; for m+j the result is the path for label labels[j]. Throws
// SolverError on a ratio-test tie (degenerate P).
PivotPath LemkePathOnUnitVectorGame(const UnitVectorGame& game,
                                    int missing_label,
                                    const LhOptions& options = {});

}  // namespace galelemke

#endif  // GALELEMKE_LH_SOLVER_H_
