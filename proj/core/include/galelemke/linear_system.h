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

#ifndef GALELEMKE_LINEAR_SYSTEM_H_
#define GALELEMKE_LINEAR_SYSTEM_H_

#include <optional>

#include "galelemke/matrix.h"

namespace galelemke {

// Solves the square system M z = rhs exactly. Rows are scaled to integers and
// reduced with Bareiss fraction-free elimination, so intermediate values stay
// integral. Returns nullopt when M is singular; that is a normal outcome for
// callers probing many subsystems.
std::optional<RationalVector> SolveSquare(const RationalMatrix& m,
                                          const RationalVector& rhs);

// Exact determinant via the same elimination.
Rational Determinant(const RationalMatrix& m);

// Inverse of a nonsingular square matrix; nullopt when singular.
std::optional<RationalMatrix> Inverse(const RationalMatrix& m);

}  // namespace galelemke

#endif  // GALELEMKE_LINEAR_SYSTEM_H_
