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

#include "galelemke/lh_solver.h"

#include <algorithm>
#include <set>
#include <string>

#include "galelemke/errors.h"
#include "galelemke/tableau.h"

namespace galelemke {
namespace {

// P: B^T x + s = 1 with columns x_1..x_m, s_1..s_n; slacks start basic.
IntegerTableau MakeTableauP(const BimatrixGame& game) {
  const int m = game.rows();
  const int n = game.cols();
  RationalMatrix coef(n, m + n, Rational(0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) coef(j, i) = game.b()(i, j);
    coef(j, m + j) = Rational(1);
  }
  std::vector<int> basis(n);
  for (int j = 0; j < n; ++j) basis[j] = m + j;
  return IntegerTableau(coef, RationalVector(n, Rational(1)), std::move(basis));
}

// Q: r + A y = 1 with columns r_1..r_m, y_1..y_n; slacks start basic.
IntegerTableau MakeTableauQ(const BimatrixGame& game) {
  const int m = game.rows();
  const int n = game.cols();
  RationalMatrix coef(m, m + n, Rational(0));
  for (int i = 0; i < m; ++i) {
    coef(i, i) = Rational(1);
    for (int j = 0; j < n; ++j) coef(i, m + j) = game.a()(i, j);
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = i;
  return IntegerTableau(coef, RationalVector(m, Rational(1)), std::move(basis));
}

// Pivots `t` until its basis equals `target` (variable ids), then checks the
// basic solution is feasible.
void MoveToBasis(IntegerTableau& t, const Basis& target) {
  if (target.size() != t.rows()) {
    throw InvalidArgument("start basis has the wrong size");
  }
  std::vector<bool> wanted(t.vars(), false);
  for (int id : target) {
    if (id < 1 || id > static_cast<int>(t.vars()) || wanted[id - 1]) {
      throw InvalidArgument("start basis has a bad variable id");
    }
    wanted[id - 1] = true;
  }
  for (int id : target) {
    const int col = id - 1;
    if (t.IsBasic(col)) continue;
    bool moved = false;
    for (std::size_t r = 0; r < t.rows() && !moved; ++r) {
      // Any nonzero entry in a row whose basic variable must leave will do.
      if (wanted[t.BasicInRow(r)] || t.EntrySign(r, col) == 0) continue;
      t.Pivot(r, col);
      moved = true;
    }
    if (!moved) throw InvalidArgument("start basis is singular");
  }
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.Value(t.BasicInRow(r)).sign() < 0) {
      throw InvalidArgument("start basis is not a feasible vertex");
    }
  }
}

Basis AllSlackBasis(int first, int count) {
  Basis b(count);
  for (int i = 0; i < count; ++i) b[i] = first + i;
  return b;
}

LhResult Run(const BimatrixGame& game, int missing_label, IntegerTableau tp,
             IntegerTableau tq, const LhOptions& options) {
  const int m = game.rows();
  const int n = game.cols();
  if (missing_label < 1 || missing_label > m + n) {
    throw InvalidArgument("missing label " + std::to_string(missing_label) +
                          " outside 1.." + std::to_string(m + n));
  }
  const Basis origin_p = AllSlackBasis(m + 1, n);
  const Basis origin_q = AllSlackBasis(1, m);

  LhResult result;
  result.path.missing_label = missing_label;
  result.path.start_p = tp.SortedBasis();
  result.path.start_q = tq.SortedBasis();

  // The missing label is dropped on the polytope where it is currently tight.
  const int k_col = missing_label - 1;
  Side side;
  if (!tp.IsBasic(k_col)) {
    side = Side::kP;
  } else if (!tq.IsBasic(k_col)) {
    side = Side::kQ;
  } else {
    throw InvalidArgument("start pair does not carry the missing label");
  }

  std::set<std::pair<Basis, Basis>> seen;
  if (!options.lexicographic) seen.emplace(result.path.start_p, result.path.start_q);

  int entering = missing_label;
  while (true) {
    if (result.path_length >= options.step_cap) {
      result.path.endpoint = Endpoint::kTruncated;
      break;
    }
    IntegerTableau& t = side == Side::kP ? tp : tq;
    bool tied = false;
    const std::optional<std::size_t> row =
        t.RatioTest(entering - 1, &tied, options.lexicographic);
    if (!row) throw SolverError("unbounded ratio test: polytope not bounded");
    if (tied) {
      ++result.ties;
      if (options.require_no_ties) {
        throw SolverError("ratio-test tie on a game assumed nondegenerate");
      }
    }
    const int picked = t.Pivot(*row, entering - 1) + 1;
    ++result.path_length;
    if (options.record_path) {
      result.path.steps.push_back({side, entering, picked, t.SortedBasis()});
    }
    if (!options.lexicographic &&
        !seen.emplace(tp.SortedBasis(), tq.SortedBasis()).second) {
      throw SolverError("cycling detected: basis pair repeated");
    }
    if (picked == missing_label) {
      const bool at_origin =
          tp.SortedBasis() == origin_p && tq.SortedBasis() == origin_q;
      result.path.endpoint = at_origin ? Endpoint::kOrigin : Endpoint::kEquilibrium;
      break;
    }
    entering = picked;
    side = side == Side::kP ? Side::kQ : Side::kP;
  }

  result.end_p = tp.SortedBasis();
  result.end_q = tq.SortedBasis();
  result.x_point.resize(m);
  result.y_point.resize(n);
  for (int i = 0; i < m; ++i) result.x_point[i] = tp.Value(i);
  for (int j = 0; j < n; ++j) result.y_point[j] = tq.Value(m + j);
  if (result.path.endpoint == Endpoint::kEquilibrium) {
    result.equilibrium =
        MixedProfile::FromPolytopePoints(result.x_point, result.y_point);
  }
  return result;
}

}  // namespace

LhResult LhSolve(const BimatrixGame& game, int missing_label,
                 const LhOptions& options) {
  return Run(game, missing_label, MakeTableauP(game), MakeTableauQ(game),
             options);
}

LhResult LhSolveFrom(const BimatrixGame& game, int missing_label,
                     const Basis& start_p, const Basis& start_q,
                     const LhOptions& options) {
  IntegerTableau tp = MakeTableauP(game);
  IntegerTableau tq = MakeTableauQ(game);
  MoveToBasis(tp, start_p);
  MoveToBasis(tq, start_q);
  return Run(game, missing_label, std::move(tp), std::move(tq), options);
}

std::vector<std::pair<int, LhResult>> LhAllLabels(const BimatrixGame& game,
                                                  const LhOptions& options) {
  std::vector<std::pair<int, LhResult>> out;
  for (int k = 1; k <= game.num_labels(); ++k) {
    out.emplace_back(k, LhSolve(game, k, options));
  }
  return out;
}

ProjectedPath ProjectPath(const PivotPath& path) {
  ProjectedPath out;
  out.p_vertices.push_back(path.start_p);
  out.q_vertices.push_back(path.start_q);
  for (const PivotStep& step : path.steps) {
    (step.side == Side::kP ? out.p_vertices : out.q_vertices)
        .push_back(step.basis);
  }
  return out;
}

bool IsSimple(const std::vector<Basis>& vertices) {
  std::set<Basis> seen;
  for (const Basis& b : vertices) {
    if (!seen.insert(b).second) return false;
  }
  return true;
}

LabelSet TightLabels(const Basis& basis, int num_labels) {
  std::vector<bool> basic(num_labels + 1, false);
  for (int id : basis) basic[id] = true;
  LabelSet out(num_labels);
  for (int l = 1; l <= num_labels; ++l) {
    if (!basic[l]) out.Insert(l);
  }
  return out;
}

std::vector<std::pair<LabelSet, LabelSet>> VertexPairLabels(
    const PivotPath& path, int num_labels) {
  std::vector<std::pair<LabelSet, LabelSet>> out;
  Basis p = path.start_p;
  Basis q = path.start_q;
  out.emplace_back(TightLabels(p, num_labels), TightLabels(q, num_labels));
  for (const PivotStep& step : path.steps) {
    (step.side == Side::kP ? p : q) = step.basis;
    out.emplace_back(TightLabels(p, num_labels), TightLabels(q, num_labels));
  }
  return out;
}

PivotPath LemkePathOnUnitVectorGame(const UnitVectorGame& game,
                                    int missing_label,
                                    const LhOptions& options) {
  game.Validate();
  const int m = game.m;
  auto relabel = [&](int label) {
    return label <= m ? label : game.labels[label - m - 1];
  };
  LhOptions opts = options;
  opts.record_path = true;
  opts.require_no_ties = true;
  const LhResult lh = LhSolve(ToBimatrix(game), missing_label, opts);

  PivotPath out;
  out.missing_label = relabel(missing_label);
  out.start_p = lh.path.start_p;
  out.endpoint = lh.path.endpoint;
  for (const PivotStep& step : lh.path.steps) {
    if (step.side != Side::kP) continue;
    out.steps.push_back({Side::kP, relabel(step.dropped_label),
                         relabel(step.picked_label), step.basis});
  }
  return out;
}

}  // namespace galelemke
