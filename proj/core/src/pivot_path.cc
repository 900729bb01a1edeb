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

#include "galelemke/pivot_path.h"

#include <sstream>

namespace galelemke {

char SideName(Side side) { return side == Side::kP ? 'P' : 'Q'; }

std::string EndpointName(Endpoint endpoint) {
  switch (endpoint) {
    case Endpoint::kEquilibrium:
      return "equilibrium";
    case Endpoint::kOrigin:
      return "origin";
    case Endpoint::kTruncated:
      return "truncated";
  }
  return "unknown";
}

std::string PathToCsv(const PivotPath& path) {
  std::ostringstream os;
  os << "step,dropped_label,picked_label,polytope,basis\n";
  for (std::size_t s = 0; s < path.steps.size(); ++s) {
    const PivotStep& step = path.steps[s];
    os << s + 1 << ',' << step.dropped_label << ',' << step.picked_label << ','
       << SideName(step.side) << ',';
    for (std::size_t i = 0; i < step.basis.size(); ++i) {
      os << (i ? ";" : "") << step.basis[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace galelemke
