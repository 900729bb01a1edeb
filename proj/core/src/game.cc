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

#include "galelemke/game.h"

#include <algorithm>
#include <sstream>

#include "galelemke/errors.h"
#include "galelemke/polytope_vertices.h"

namespace galelemke {
namespace {

Rational Sum(const RationalVector& v) {
  Rational s(0);
  for (const Rational& r : v) s += r;
  return s;
}

Rational MinEntry(const RationalMatrix& m) {
  Rational lo = m(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) lo = std::min(lo, m(i, j));
  }
  return lo;
}

// True if some column (when `by_column`) or row of `m` is entirely zero.
bool HasZeroLine(const RationalMatrix& m, bool by_column) {
  const std::size_t outer = by_column ? m.cols() : m.rows();
  const std::size_t inner = by_column ? m.rows() : m.cols();
  for (std::size_t o = 0; o < outer; ++o) {
    bool all_zero = true;
    for (std::size_t i = 0; i < inner && all_zero; ++i) {
      all_zero = (by_column ? m(i, o) : m(o, i)).is_zero();
    }
    if (all_zero) return true;
  }
  return false;
}

// Shifts every entry so the minimum becomes 1 when `m` has a negative entry or
// a zero line; otherwise leaves it alone.
RationalMatrix Normalize(const RationalMatrix& m, bool by_column,
                         Rational& shift) {
  const Rational lo = MinEntry(m);
  if (lo.sign() >= 0 && !HasZeroLine(m, by_column)) {
    shift = Rational(0);
    return m;
  }
  shift = Rational(1) - lo;
  RationalMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) += shift;
  }
  return out;
}

void CheckDimensions(const BimatrixGame& game, const MixedProfile& profile) {
  if (static_cast<int>(profile.x.size()) != game.rows() ||
      static_cast<int>(profile.y.size()) != game.cols()) {
    throw InvalidArgument("profile dimensions do not match the game");
  }
}

}  // namespace

LabelSet::LabelSet(int universe, std::initializer_list<int> labels)
    : LabelSet(universe) {
  for (int l : labels) Insert(l);
}

void LabelSet::Insert(int label) {
  if (label < 1 || label > universe()) {
    throw InvalidArgument("label " + std::to_string(label) +
                          " outside 1.." + std::to_string(universe()));
  }
  present_[label] = true;
}

bool LabelSet::Contains(int label) const {
  return label >= 1 && label <= universe() && present_[label];
}

std::size_t LabelSet::size() const {
  return static_cast<std::size_t>(
      std::count(present_.begin() + (present_.empty() ? 0 : 1),
                 present_.end(), true));
}

std::vector<int> LabelSet::ToVector() const {
  std::vector<int> out;
  for (int l = 1; l <= universe(); ++l) {
    if (present_[l]) out.push_back(l);
  }
  return out;
}

LabelSet LabelSet::Union(const LabelSet& other) const {
  LabelSet out(std::max(universe(), other.universe()));
  for (int l : ToVector()) out.Insert(l);
  for (int l : other.ToVector()) out.Insert(l);
  return out;
}

std::vector<int> LabelSet::Missing() const {
  std::vector<int> out;
  for (int l = 1; l <= universe(); ++l) {
    if (!present_[l]) out.push_back(l);
  }
  return out;
}

std::string LabelSet::ToString() const {
  const std::vector<int> labels = ToVector();
  const bool compact = universe() < 10;
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(labels[i]);
  }
  return out;
}

BimatrixGame::BimatrixGame(RationalMatrix a, RationalMatrix b)
    : original_a_(std::move(a)), original_b_(std::move(b)) {
  if (original_a_.rows() < 1 || original_a_.cols() < 1) {
    throw InvalidArgument("a game needs at least one row and one column");
  }
  if (original_a_.rows() != original_b_.rows() ||
      original_a_.cols() != original_b_.cols()) {
    throw InvalidArgument("payoff matrices differ in shape");
  }
  // A needs nonzero columns, B^T nonzero columns, i.e. B nonzero rows.
  a_ = Normalize(original_a_, /*by_column=*/true, shift_a_);
  b_ = Normalize(original_b_, /*by_column=*/false, shift_b_);
}

void MixedProfile::Validate(int m, int n) const {
  if (static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != n) {
    throw InvalidArgument("profile dimensions do not match the game");
  }
  for (const RationalVector* v : {&x, &y}) {
    for (const Rational& r : *v) {
      if (r.sign() < 0) throw InvalidArgument("negative probability");
    }
    if (Sum(*v) != Rational(1)) {
      throw InvalidArgument("probabilities do not sum to one");
    }
  }
}

MixedProfile MixedProfile::FromPolytopePoints(const RationalVector& x,
                                              const RationalVector& y) {
  const Rational sx = Sum(x);
  const Rational sy = Sum(y);
  if (sx.sign() <= 0 || sy.sign() <= 0) {
    throw InvalidArgument("the origin is not a mixed strategy");
  }
  MixedProfile out{x, y};
  for (Rational& r : out.x) r /= sx;
  for (Rational& r : out.y) r /= sy;
  return out;
}

std::string MixedProfile::ToString() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? " " : "") << x[i];
  os << " ;";
  for (const Rational& r : y) os << ' ' << r;
  return os.str();
}

std::vector<int> UnitVectorGame::ColumnsWithLabel(int row) const {
  std::vector<int> out;
  for (int j = 0; j < n(); ++j) {
    if (labels[j] == row) out.push_back(j + 1);
  }
  return out;
}

void UnitVectorGame::Validate() const {
  if (m < 1 || labels.empty()) {
    throw InvalidArgument("unit vector game needs m >= 1 and n >= 1");
  }
  for (int l : labels) {
    if (l < 1 || l > m) {
      throw InvalidArgument("label " + std::to_string(l) + " outside 1.." +
                            std::to_string(m));
    }
  }
  if (static_cast<int>(b.rows()) != m || static_cast<int>(b.cols()) != n()) {
    throw InvalidArgument("B must be m x n");
  }
}

std::pair<LabelSet, LabelSet> LabelsOfProfile(const BimatrixGame& game,
                                              const MixedProfile& profile) {
  CheckDimensions(game, profile);
  const int m = game.rows();
  const int n = game.cols();
  LabelSet x_labels(m + n);
  LabelSet y_labels(m + n);

  // Player 2 payoffs against x, player 1 payoffs against y.
  RationalVector col_payoff(n, Rational(0));
  RationalVector row_payoff(m, Rational(0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      col_payoff[j] += game.b()(i, j) * profile.x[i];
      row_payoff[i] += game.a()(i, j) * profile.y[j];
    }
  }
  const Rational best_col = *std::max_element(col_payoff.begin(), col_payoff.end());
  const Rational best_row = *std::max_element(row_payoff.begin(), row_payoff.end());
  for (int i = 0; i < m; ++i) {
    if (profile.x[i].is_zero()) x_labels.Insert(i + 1);
    if (row_payoff[i] == best_row) y_labels.Insert(i + 1);
  }
  for (int j = 0; j < n; ++j) {
    if (col_payoff[j] == best_col) x_labels.Insert(m + j + 1);
    if (profile.y[j].is_zero()) y_labels.Insert(m + j + 1);
  }
  return {std::move(x_labels), std::move(y_labels)};
}

bool VerifyEquilibrium(const BimatrixGame& game, const MixedProfile& profile) {
  const auto [x_labels, y_labels] = LabelsOfProfile(game, profile);
  return x_labels.Union(y_labels).Missing().empty();
}

bool IsNondegenerate(const BimatrixGame& game, const VertexBudget& budget) {
  for (const auto& v : VerticesOfP(game, budget)) {
    if (static_cast<int>(v.labels.size()) != game.rows()) return false;
  }
  for (const auto& v : VerticesOfQ(game, budget)) {
    if (static_cast<int>(v.labels.size()) != game.cols()) return false;
  }
  return true;
}

BimatrixGame Symmetrize(const BimatrixGame& game) {
  const int m = game.rows();
  const int n = game.cols();
  RationalMatrix c(m + n, m + n, Rational(0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      c(i, m + j) = game.a()(i, j);
      c(m + j, i) = game.b()(i, j);
    }
  }
  RationalMatrix ct = c.Transposed();
  return BimatrixGame(std::move(c), std::move(ct));
}

RationalVector SymmetrizedStrategy(const BimatrixGame& game,
                                   const MixedProfile& equilibrium) {
  CheckDimensions(game, equilibrium);
  const int m = game.rows();
  const int n = game.cols();
  Rational u(0);  // player 1's equilibrium payoff
  Rational v(0);  // player 2's
  bool first = true;
  for (int i = 0; i < m; ++i) {
    Rational s(0);
    for (int j = 0; j < n; ++j) s += game.a()(i, j) * equilibrium.y[j];
    if (first || s > u) u = s;
    first = false;
  }
  first = true;
  for (int j = 0; j < n; ++j) {
    Rational s(0);
    for (int i = 0; i < m; ++i) s += game.b()(i, j) * equilibrium.x[i];
    if (first || s > v) v = s;
    first = false;
  }
  RationalVector z;
  z.reserve(m + n);
  for (const Rational& r : equilibrium.x) z.push_back(r / v);
  for (const Rational& r : equilibrium.y) z.push_back(r / u);
  const Rational total = Sum(z);
  for (Rational& r : z) r /= total;
  return z;
}

std::optional<MixedProfile> SplitSymmetrizedStrategy(const BimatrixGame& game,
                                                     const RationalVector& z) {
  const int m = game.rows();
  if (static_cast<int>(z.size()) != game.num_labels()) {
    throw InvalidArgument("symmetrized strategy has the wrong length");
  }
  RationalVector x(z.begin(), z.begin() + m);
  RationalVector y(z.begin() + m, z.end());
  if (Sum(x).is_zero() || Sum(y).is_zero()) return std::nullopt;
  return MixedProfile::FromPolytopePoints(x, y);
}

BimatrixGame ImitationGame(const RationalMatrix& c) {
  if (c.rows() != c.cols() || c.rows() == 0) {
    throw InvalidArgument("imitation game needs a nonempty square matrix");
  }
  return BimatrixGame(RationalMatrix::Identity(c.rows()), c.Transposed());
}

BimatrixGame ToBimatrix(const UnitVectorGame& game) {
  game.Validate();
  RationalMatrix a(game.m, game.n(), Rational(0));
  for (int j = 0; j < game.n(); ++j) a(game.labels[j] - 1, j) = Rational(1);
  return BimatrixGame(std::move(a), game.b);
}

std::optional<MixedProfile> ProfileFromLabeledPoint(const UnitVectorGame& game,
                                                    const RationalVector& x) {
  game.Validate();
  if (static_cast<int>(x.size()) != game.m) {
    throw InvalidArgument("point has the wrong dimension");
  }
  if (Sum(x).sign() <= 0) return std::nullopt;
  for (int j = 0; j < game.n(); ++j) {
    Rational s(0);
    for (int r = 0; r < game.m; ++r) s += game.b(r, j) * x[r];
    if (s > Rational(1)) return std::nullopt;
  }
  RationalVector y(game.n(), Rational(0));
  for (int i = 0; i < game.m; ++i) {
    if (x[i].sign() < 0) return std::nullopt;
    if (x[i].is_zero()) continue;
    bool covered = false;
    for (int col : game.ColumnsWithLabel(i + 1)) {
      Rational s(0);
      for (int r = 0; r < game.m; ++r) s += game.b(r, col - 1) * x[r];
      if (s == Rational(1)) {
        y[col - 1] = Rational(1);
        covered = true;
        break;
      }
    }
    if (!covered) return std::nullopt;
  }
  return MixedProfile::FromPolytopePoints(x, y);
}

}  // namespace galelemke
