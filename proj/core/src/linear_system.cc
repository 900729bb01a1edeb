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

#include "galelemke/linear_system.h"

#include <cstddef>
#include <utility>

namespace galelemke {
namespace {

// Integer matrix [M | R] after Bareiss forward elimination. `scale[i]` is the
// factor row i of the input was multiplied by to clear denominators.
struct Eliminated {
  Matrix<mpz_class> work;
  std::size_t n = 0;
  bool singular = false;
  int swaps = 0;
  mpz_class scale_product = 1;
};

Eliminated Eliminate(const RationalMatrix& m, const RationalMatrix& rhs) {
  if (m.rows() != m.cols() || rhs.rows() != m.rows()) {
    throw InvalidArgument("linear system dimensions do not match");
  }
  Eliminated e;
  e.n = m.rows();
  const std::size_t width = e.n + rhs.cols();
  e.work = Matrix<mpz_class>(e.n, width, mpz_class(0));
  for (std::size_t i = 0; i < e.n; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < e.n; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m(i, j).mpq().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              rhs(i, j).mpq().get_den_mpz_t());
    }
    e.scale_product *= lcm;
    for (std::size_t j = 0; j < e.n; ++j) {
      e.work(i, j) = m(i, j).numerator() * (lcm / m(i, j).denominator());
    }
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      e.work(i, e.n + j) =
          rhs(i, j).numerator() * (lcm / rhs(i, j).denominator());
    }
  }

  mpz_class previous = 1;
  for (std::size_t k = 0; k < e.n; ++k) {
    std::size_t pivot = k;
    while (pivot < e.n && e.work(pivot, k) == 0) ++pivot;
    if (pivot == e.n) {
      e.singular = true;
      return e;
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < width; ++j) {
        std::swap(e.work(pivot, j), e.work(k, j));
      }
      ++e.swaps;
    }
    for (std::size_t i = k + 1; i < e.n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        mpz_class v = e.work(k, k) * e.work(i, j) - e.work(i, k) * e.work(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        e.work(i, j) = std::move(v);
      }
      e.work(i, k) = 0;
    }
    previous = e.work(k, k);
  }
  return e;
}

RationalMatrix BackSubstitute(const Eliminated& e, std::size_t rhs_cols) {
  RationalMatrix out(e.n, rhs_cols, Rational(0));
  for (std::size_t c = 0; c < rhs_cols; ++c) {
    for (std::size_t ii = e.n; ii-- > 0;) {
      mpq_class acc(e.work(ii, e.n + c));
      for (std::size_t j = ii + 1; j < e.n; ++j) {
        acc -= mpq_class(e.work(ii, j)) * out(j, c).mpq();
      }
      acc /= mpq_class(e.work(ii, ii));
      out(ii, c) = Rational(acc);
    }
  }
  return out;
}

}  // namespace

std::optional<RationalVector> SolveSquare(const RationalMatrix& m,
                                          const RationalVector& rhs) {
  RationalMatrix column(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) column(i, 0) = rhs[i];
  const Eliminated e = Eliminate(m, column);
  if (e.singular) return std::nullopt;
  const RationalMatrix z = BackSubstitute(e, 1);
  RationalVector out(e.n);
  for (std::size_t i = 0; i < e.n; ++i) out[i] = z(i, 0);
  return out;
}

Rational Determinant(const RationalMatrix& m) {
  if (m.rows() == 0) return Rational(1);
  const Eliminated e = Eliminate(m, RationalMatrix(m.rows(), 0));
  if (e.singular) return Rational(0);
  mpz_class det = e.work(e.n - 1, e.n - 1);
  if (e.swaps % 2 == 1) det = -det;
  return Rational(det, e.scale_product);
}

std::optional<RationalMatrix> Inverse(const RationalMatrix& m) {
  const Eliminated e = Eliminate(m, RationalMatrix::Identity(m.rows()));
  if (e.singular) return std::nullopt;
  return BackSubstitute(e, m.rows());
}

}  // namespace galelemke
