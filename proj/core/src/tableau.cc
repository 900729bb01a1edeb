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

#include "galelemke/tableau.h"

#include <algorithm>
#include <utility>

#include "galelemke/errors.h"

namespace galelemke {

IntegerTableau::IntegerTableau(const RationalMatrix& coefficients,
                               const RationalVector& rhs,
                               std::vector<int> initial_basis)
    : cells_(coefficients.rows(), coefficients.cols() + 1, mpz_class(0)),
      basic_(std::move(initial_basis)),
      column_row_(coefficients.cols(), -1) {
  const std::size_t nrows = coefficients.rows();
  if (rhs.size() != nrows || basic_.size() != nrows) {
    throw InvalidArgument("tableau dimensions do not match");
  }
  for (std::size_t r = 0; r < nrows; ++r) {
    const int b = basic_[r];
    if (b < 0 || static_cast<std::size_t>(b) >= vars() || column_row_[b] >= 0) {
      throw InvalidArgument("bad initial basis");
    }
    column_row_[b] = static_cast<int>(r);
    if (rhs[r].sign() < 0) throw InvalidArgument("infeasible initial basis");
  }
  for (std::size_t r = 0; r < nrows; ++r) {
    for (int b : basic_) {
      const Rational expect(b == basic_[r] ? 1 : 0);
      if (coefficients(r, b) != expect) {
        throw InvalidArgument("initial basis columns are not an identity block");
      }
    }
  }
  for (std::size_t r = 0; r < nrows; ++r) {
    mpz_class lcm = rhs[r].mpq().get_den();
    for (std::size_t c = 0; c < vars(); ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              coefficients(r, c).mpq().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < vars(); ++c) {
      at(r, c) = coefficients(r, c).numerator() *
                 (lcm / coefficients(r, c).denominator());
    }
    at(r, rhs_col()) = rhs[r].numerator() * (lcm / rhs[r].denominator());
    // Rescale this row's basic variable so its column stays a unit vector.
    at(r, basic_[r]) = 1;
  }
  lex_columns_ = basic_;
}

Basis IntegerTableau::SortedBasis() const {
  Basis out;
  out.reserve(basic_.size());
  for (int c : basic_) out.push_back(c + 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> IntegerTableau::RatioTest(int column, bool* tied,
                                                     bool lexicographic) const {
  std::optional<std::size_t> best;
  std::size_t at_min = 0;  // rows sharing the best primary ratio
  for (std::size_t r = 0; r < rows(); ++r) {
    if (sgn(at(r, column)) <= 0) continue;
    if (!best) {
      best = r;
      at_min = 1;
      continue;
    }
    const std::size_t h = *best;
    // Row r beats h if its ratio vector is lexicographically smaller.
    int c = cmp(at(r, rhs_col()) * at(h, column), at(h, rhs_col()) * at(r, column));
    if (c < 0) {
      best = r;
      at_min = 1;
      continue;
    }
    if (c > 0) continue;
    ++at_min;
    if (!lexicographic) continue;
    for (int l : lex_columns_) {
      c = cmp(at(r, l) * at(h, column), at(h, l) * at(r, column));
      if (c != 0) break;
    }
    if (c < 0) best = r;
  }
  if (tied) *tied = at_min > 1;
  return best;
}

int IntegerTableau::Pivot(std::size_t row, int column) {
  const mpz_class pivot = at(row, column);
  if (pivot == 0) throw SolverError("pivot on a zero element");
  const std::size_t width = vars() + 1;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i == row) continue;
    const mpz_class factor = at(i, column);
    for (std::size_t j = 0; j < width; ++j) {
      mpz_class v = at(i, j) * pivot - factor * at(row, j);
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), det_.get_mpz_t());
      at(i, j) = std::move(v);
    }
  }
  det_ = pivot;
  if (det_ < 0) {
    det_ = -det_;
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < width; ++j) at(i, j) = -at(i, j);
    }
  }
  const int leaving = basic_[row];
  column_row_[leaving] = -1;
  basic_[row] = column;
  column_row_[column] = static_cast<int>(row);
  return leaving;
}

Rational IntegerTableau::Value(int column) const {
  const int r = column_row_[column];
  if (r < 0) return Rational(0);
  return Rational(at(r, rhs_col()), det_);
}

}  // namespace galelemke
