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

#ifndef GALELEMKE_TABLEAU_H_
#define GALELEMKE_TABLEAU_H_

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "galelemke/matrix.h"
#include "galelemke/pivot_path.h"
#include "galelemke/rational.h"

namespace galelemke {

// Dictionary for the system  M v = rhs, v >= 0,  kept in integer form.
// Every entry is det() times the true rational entry, where det() is the
// previous pivot element, so pivoting needs only exact integer division.
// Columns are variables; variable id = column + 1.
class IntegerTableau {
 public:
  // `coefficients` is rows x vars; the columns listed in `initial_basis` must
  // form an identity block and `rhs` must be nonnegative. Rational input is
  // scaled row by row to integers, rescaling the basic variable of that row.
  IntegerTableau(const RationalMatrix& coefficients, const RationalVector& rhs,
                 std::vector<int> initial_basis);

  std::size_t rows() const { return basic_.size(); }
  std::size_t vars() const { return column_row_.size(); }

  bool IsBasic(int column) const { return column_row_[column] >= 0; }
  int BasicInRow(std::size_t row) const { return basic_[row]; }
  Basis SortedBasis() const;

  // Lexicographic minimum ratio test for bringing `column` into the basis:
  // the row minimizing (rhs, columns of the initial basis in order) divided
  // by the entering column, over rows with a positive entry. nullopt when the
  // column is unbounded. Sets `tied` if two rows tie on rhs alone. With
  // `lexicographic` false a tie goes to the lowest row.
  std::optional<std::size_t> RatioTest(int column, bool* tied = nullptr,
                                       bool lexicographic = true) const;

  // Sign of the entry in `row`, `column`.
  int EntrySign(std::size_t row, int column) const {
    return sgn(at(row, column));
  }

  // Brings `column` into the basis in `row`; returns the leaving column.
  int Pivot(std::size_t row, int column);

  // Value of a variable at the current basic solution.
  Rational Value(int column) const;

  const mpz_class& det() const { return det_; }

 private:
  mpz_class& at(std::size_t r, std::size_t c) { return cells_(r, c); }
  const mpz_class& at(std::size_t r, std::size_t c) const { return cells_(r, c); }
  std::size_t rhs_col() const { return vars(); }

  Matrix<mpz_class> cells_;  // rows x (vars + 1), last column is rhs
  mpz_class det_ = 1;
  std::vector<int> basic_;       // row -> column
  std::vector<int> column_row_;  // column -> row, -1 when nonbasic
  std::vector<int> lex_columns_; // the initial basis, in row order
};

}  // namespace galelemke

#endif  // GALELEMKE_TABLEAU_H_
