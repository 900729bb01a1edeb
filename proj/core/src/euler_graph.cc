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

#include "galelemke/euler_graph.h"

#include <algorithm>
#include <string>

#include "galelemke/errors.h"

namespace galelemke {
namespace {

struct MatchingSearch {
  const EulerGraph& graph;
  std::vector<std::vector<int>> incident;  // node -> non-loop edges
  std::vector<bool> covered;
  Matching current;
  std::vector<Matching> found;
  std::uint64_t budget;

  void Run() {
    int node = 1;
    while (node <= graph.m && covered[node]) ++node;
    if (node > graph.m) {
      if (found.size() >= budget) {
        throw BudgetExceeded("more than " + std::to_string(budget) +
                             " perfect matchings");
      }
      found.push_back(current);
      return;
    }
    covered[node] = true;
    for (int e : incident[node]) {
      const auto [u, v] = graph.edges[e];
      const int other = u == node ? v : u;
      if (covered[other]) continue;
      covered[other] = true;
      current.push_back(e);
      Run();
      current.pop_back();
      covered[other] = false;
    }
    covered[node] = false;
  }
};

}  // namespace

std::vector<int> EulerGraph::Degrees() const {
  std::vector<int> degree(m + 1, 0);
  for (const auto& [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  return degree;
}

EulerGraph BuildEulerGraph(const LabeledGalePolytope& polytope) {
  EulerGraph graph;
  graph.m = polytope.m();
  const int f = polytope.f();
  for (int p = 1; p <= f; ++p) {
    graph.edges.emplace_back(polytope.LabelAt(p), polytope.LabelAt(p % f + 1));
  }
  return graph;
}

std::vector<Matching> EulerMatchings(const LabeledGalePolytope& polytope,
                                     std::uint64_t budget) {
  const EulerGraph graph = BuildEulerGraph(polytope);
  MatchingSearch search{graph, std::vector<std::vector<int>>(graph.m + 1),
                        std::vector<bool>(graph.m + 1, false), {}, {}, budget};
  for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
    const auto [u, v] = graph.edges[e];
    if (u == v) continue;
    search.incident[u].push_back(e);
    search.incident[v].push_back(e);
  }
  search.Run();
  for (Matching& match : search.found) std::sort(match.begin(), match.end());
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

GaleString MatchingToGaleString(const LabeledGalePolytope& polytope,
                                const Matching& matching) {
  const int f = polytope.f();
  GaleString s(f);
  for (int e : matching) {
    if (e < 0 || e >= f) throw InvalidArgument("edge index out of range");
    s.Set(e + 1, true);
    s.Set((e + 1) % f + 1, true);
  }
  return s;
}

}  // namespace galelemke
