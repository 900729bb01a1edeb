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

#include "galelemke/cyclic_geometry.h"

#include <algorithm>
#include <string>

#include "galelemke/errors.h"
#include "galelemke/linear_system.h"

namespace galelemke {

CyclicPolytopeGeometry CyclicGeometry(int m, int f) {
  RationalVector t;
  for (int j = 1; j <= f; ++j) t.emplace_back(j);
  return CyclicGeometry(m, f, std::move(t));
}

CyclicPolytopeGeometry CyclicGeometry(int m, int f, RationalVector t) {
  if (m < 2 || m % 2 != 0) {
    throw InvalidArgument("dimension m must be even and at least 2");
  }
  if (f <= m) throw InvalidArgument("need more facets than the dimension");
  if (static_cast<int>(t.size()) != f) {
    throw InvalidArgument("expected " + std::to_string(f) + " parameters");
  }
  for (int j = 1; j < f; ++j) {
    if (!(t[j - 1] < t[j])) {
      throw InvalidArgument("moment curve parameters must strictly increase");
    }
  }
  RationalMatrix rows(f, m);
  RationalVector mean(m);
  for (int j = 0; j < f; ++j) {
    Rational power(1);
    for (int d = 0; d < m; ++d) {
      power *= t[j];
      rows(j, d) = power;
      mean[d] += power;
    }
  }
  for (int d = 0; d < m; ++d) mean[d] /= Rational(f);
  for (int j = 0; j < f; ++j) {
    for (int d = 0; d < m; ++d) rows(j, d) -= mean[d];
  }
  CyclicPolytopeGeometry geom;
  geom.m = m;
  geom.f = f;
  geom.t = std::move(t);
  geom.system.lhs = std::move(rows);
  geom.system.rhs = RationalVector(f, Rational(1));
  return geom;
}

GaleString IncidenceString(int f, const std::vector<int>& tight) {
  GaleString s(f);
  for (int j : tight) s.Set(j + 1, true);
  return s;
}

std::vector<GeometricVertex> CyclicVertices(const CyclicPolytopeGeometry& geom,
                                            std::uint64_t max_subsets) {
  std::vector<GeometricVertex> out;
  for (Vertex& v : EnumerateVertices(geom.system, max_subsets)) {
    out.push_back({std::move(v.point), IncidenceString(geom.f, v.tight)});
  }
  std::sort(out.begin(), out.end(),
            [](const GeometricVertex& a, const GeometricVertex& b) {
              return a.incidence < b.incidence;
            });
  return out;
}

CanonicalForm ToCanonicalForm(const CyclicPolytopeGeometry& geom) {
  const int m = geom.m;
  const int n = geom.f - m;
  RationalMatrix leading(m, m);
  for (int i = 0; i < m; ++i) {
    for (int d = 0; d < m; ++d) leading(i, d) = geom.system.lhs(i, d);
  }
  const std::optional<RationalMatrix> inverse = Inverse(leading);
  if (!inverse) throw SolverError("leading block of the cyclic system is singular");

  CanonicalForm form{RationalMatrix(m, n), leading};
  for (int j = 0; j < n; ++j) {
    // c = a_j^T leading^{-1}; facet j reads -c . s <= 1 - c . 1.
    RationalVector c(m);
    Rational sum;
    for (int i = 0; i < m; ++i) {
      for (int d = 0; d < m; ++d) {
        c[i] += geom.system.lhs(m + j, d) * (*inverse)(d, i);
      }
      sum += c[i];
    }
    const Rational rhs = Rational(1) - sum;
    if (rhs.sign() <= 0) {
      throw SolverError("origin vertex is not strictly inside facet " +
                        std::to_string(m + j + 1));
    }
    for (int i = 0; i < m; ++i) form.b(i, j) = -c[i] / rhs;
  }
  return form;
}

RationalVector ToCanonicalPoint(const CanonicalForm& form,
                                const RationalVector& point) {
  const std::size_t m = form.leading.rows();
  RationalVector s(m, Rational(1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t d = 0; d < m; ++d) s[i] -= form.leading(i, d) * point[d];
  }
  return s;
}

std::vector<std::pair<GaleString, RationalVector>> CanonicalVertexMap(
    const CyclicPolytopeGeometry& geom, const CanonicalForm& form,
    std::uint64_t max_subsets) {
  std::vector<std::pair<GaleString, RationalVector>> out;
  for (GeometricVertex& v : CyclicVertices(geom, max_subsets)) {
    out.emplace_back(std::move(v.incidence), ToCanonicalPoint(form, v.point));
  }
  return out;
}

}  // namespace galelemke
