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

#ifndef GALELEMKE_GAME_H_
#define GALELEMKE_GAME_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "galelemke/matrix.h"
#include "galelemke/rational.h"

namespace galelemke {

// A set of labels drawn from {1, ..., universe}. Labels 1..m name the row
// player's pure strategies and m+1..m+n the column player's.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(int universe) : present_(universe + 1, false) {}
  LabelSet(int universe, std::initializer_list<int> labels);

  int universe() const { return static_cast<int>(present_.size()) - 1; }
  // Throws InvalidArgument when `label` is outside 1..universe.
  void Insert(int label);
  bool Contains(int label) const;
  std::size_t size() const;
  std::vector<int> ToVector() const;
  LabelSet Union(const LabelSet& other) const;
  // Labels of 1..universe that are absent.
  std::vector<int> Missing() const;

  // Digits run together when every label is < 10 ("345"), otherwise comma
  // separated ("3,4,12").
  std::string ToString() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<bool> present_;
};

// An m x n bimatrix game. The constructor keeps the matrices as given for
// display and derives a normalized copy in which A and B^T are nonnegative
// with no zero column (each matrix shifted by a constant when needed). Every
// solver works on the normalized copy; equilibria are unchanged by the shift.
class BimatrixGame {
 public:
  BimatrixGame(RationalMatrix a, RationalMatrix b);

  int rows() const { return static_cast<int>(a_.rows()); }
  int cols() const { return static_cast<int>(a_.cols()); }
  int num_labels() const { return rows() + cols(); }

  const RationalMatrix& a() const { return a_; }
  const RationalMatrix& b() const { return b_; }
  const RationalMatrix& original_a() const { return original_a_; }
  const RationalMatrix& original_b() const { return original_b_; }
  // Constants added to the original matrices (zero when already normalized).
  const Rational& shift_a() const { return shift_a_; }
  const Rational& shift_b() const { return shift_b_; }

 private:
  RationalMatrix original_a_;
  RationalMatrix original_b_;
  RationalMatrix a_;
  RationalMatrix b_;
  Rational shift_a_;
  Rational shift_b_;
};

// Mixed strategies x in X (length m) and y in Y (length n).
struct MixedProfile {
  RationalVector x;
  RationalVector y;

  // Throws InvalidArgument unless x, y have lengths m, n, are nonnegative and
  // each sums to one.
  void Validate(int m, int n) const;

  // Rescales a nonzero point pair of P x Q to mixed strategies. The origin of
  // either polytope has no mixed-strategy counterpart and throws.
  static MixedProfile FromPolytopePoints(const RationalVector& x,
                                         const RationalVector& y);

  std::string ToString() const;  // "x1 x2 ... ; y1 y2 ..."

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
  friend auto operator<=>(const MixedProfile& a, const MixedProfile& b) {
    return std::tie(a.x, a.y) <=> std::tie(b.x, b.y);
  }
};

// A unit vector game: column j of A is the unit vector e_{labels[j]}.
// Labels are 1-based row indices.
struct UnitVectorGame {
  int m = 0;
  std::vector<int> labels;
  RationalMatrix b;

  int n() const { return static_cast<int>(labels.size()); }
  // Columns j with labels[j] == row (both 1-based).
  std::vector<int> ColumnsWithLabel(int row) const;
  void Validate() const;
};

// Labels of x and of y: unplayed own strategies plus the opponent's pure best
// responses.
std::pair<LabelSet, LabelSet> LabelsOfProfile(const BimatrixGame& game,
                                              const MixedProfile& profile);

// True iff the labels of x and y together cover 1..m+n.
bool VerifyEquilibrium(const BimatrixGame& game, const MixedProfile& profile);

struct VertexBudget {
  // Games with m + n above this are refused by exhaustive vertex enumeration.
  int max_labels = 20;
};

// True iff every vertex of P has exactly m tight inequalities and every vertex
// of Q exactly n. Throws BudgetExceeded past `budget`.
bool IsNondegenerate(const BimatrixGame& game, const VertexBudget& budget = {});

// The symmetric game (C, C^T) with C = [0 A; B^T 0] built from the normalized
// matrices.
BimatrixGame Symmetrize(const BimatrixGame& game);

// Maps an equilibrium of `game` to the mixed strategy z with (z, z) an
// equilibrium of Symmetrize(game).
RationalVector SymmetrizedStrategy(const BimatrixGame& game,
                                   const MixedProfile& equilibrium);

// Inverse of SymmetrizedStrategy: splits z into its x and y blocks and rescales
// each. Returns nullopt if either block is zero.
std::optional<MixedProfile> SplitSymmetrizedStrategy(const BimatrixGame& game,
                                                     const RationalVector& z);

// The imitation game (I, C^T) of a square matrix C.
BimatrixGame ImitationGame(const RationalMatrix& c);

// The bimatrix game (A, B) with A = [e_{l(1)} ... e_{l(n)}].
BimatrixGame ToBimatrix(const UnitVectorGame& game);

// Completes a point x != 0 of P^l to an equilibrium of ToBimatrix(game): for
// every row i with x_i > 0 one column j with labels[j] == i and (B^T x)_j = 1
// gets y_j = 1. Returns nullopt if x is not completely labeled.
std::optional<MixedProfile> ProfileFromLabeledPoint(const UnitVectorGame& game,
                                                    const RationalVector& x);

}  // namespace galelemke

#endif  // GALELEMKE_GAME_H_
