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

#ifndef GALELEMKE_PIVOT_PATH_H_
#define GALELEMKE_PIVOT_PATH_H_

#include <cstdint>
#include <string>
#include <vector>

namespace galelemke {

// Which polytope a pivot happened on. Paths on a single labeled polytope use
// kP throughout.
enum class Side { kP, kQ };

char SideName(Side side);

// A vertex is identified by its basis: the sorted ids of the inequalities that
// are NOT tight there (the basic slack or strategy variables). For P and Q of a
// game, variable ids coincide with labels 1..m+n; for a Gale string they are
// the 1-based positions holding a zero bit.
using Basis = std::vector<int>;

struct PivotStep {
  Side side = Side::kP;
  int dropped_label = 0;
  int picked_label = 0;
  Basis basis;  // of `side`, after the pivot
};

enum class Endpoint {
  kEquilibrium,  // a completely labeled vertex other than the origin
  kOrigin,       // back at the artificial start (paths begun elsewhere)
  kTruncated,    // step cap reached
};

std::string EndpointName(Endpoint endpoint);

struct PivotPath {
  int missing_label = 0;
  Basis start_p;
  Basis start_q;  // empty for single-polytope paths
  std::vector<PivotStep> steps;
  Endpoint endpoint = Endpoint::kEquilibrium;

  std::size_t length() const { return steps.size(); }
};

// CSV with header "step,dropped_label,picked_label,polytope,basis"; the basis
// column is semicolon separated.
std::string PathToCsv(const PivotPath& path);

}  // namespace galelemke

#endif  // GALELEMKE_PIVOT_PATH_H_
