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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "galelemke/errors.h"
#include "galelemke/game.h"
#include "galelemke/game_io.h"
#include "galelemke/generators.h"
#include "galelemke/polytope_vertices.h"
#include "galelemke/support_solver.h"
#include "test_util.h"

namespace galelemke {
namespace {

using testing::DegenerateC;
using testing::ExampleEquilibrium;
using testing::ExampleGame;
using testing::ExampleSymmetricC;
using testing::Ints;
using testing::Q;
using testing::Vec;

MixedProfile Pure(int m, int n, int i, int j) {
  MixedProfile p{RationalVector(m), RationalVector(n)};
  p.x[i - 1] = Rational(1);
  p.y[j - 1] = Rational(1);
  return p;
}

TEST(LabelSetTest, InsertUnionMissing) {
  LabelSet a(6, {3, 4, 5});
  LabelSet b(6, {1, 2});
  EXPECT_EQ(a.ToString(), "345");
  EXPECT_EQ(a.Union(b).Missing(), std::vector<int>{6});
  EXPECT_THROW(a.Insert(7), InvalidArgument);
  LabelSet wide(12, {3, 11});
  EXPECT_EQ(wide.ToString(), "3,11");
}

TEST(BimatrixGameTest, NormalizesButKeepsOriginal) {
  const BimatrixGame g(Ints({{-2, 0}, {1, 3}}), Ints({{1, 1}, {0, 0}}));
  EXPECT_EQ(g.original_a()(0, 0), Rational(-2));
  EXPECT_EQ(g.a()(0, 0), Rational(1));
  EXPECT_EQ(g.shift_a(), Rational(3));
  // Row 2 of B is zero, so B is shifted too.
  EXPECT_EQ(g.b()(1, 0), Rational(1));
  EXPECT_EQ(g.b()(0, 0), Rational(2));
}

TEST(BimatrixGameTest, AlreadyNormalizedIsUntouched) {
  const BimatrixGame g = ExampleGame();
  EXPECT_EQ(g.shift_a(), Rational(0));
  EXPECT_EQ(g.shift_b(), Rational(0));
  EXPECT_EQ(g.a(), g.original_a());
}

TEST(BimatrixGameTest, RejectsShapeMismatch) {
  EXPECT_THROW(BimatrixGame(Ints({{1, 2}}), Ints({{1}, {2}})), InvalidArgument);
}

TEST(MixedProfileTest, ValidateAndConvert) {
  EXPECT_NO_THROW(ExampleEquilibrium().Validate(3, 3));
  MixedProfile bad{Vec({"1/2", "1/3", "0"}), Vec({"1", "0", "0"})};
  EXPECT_THROW(bad.Validate(3, 3), InvalidArgument);
  EXPECT_THROW(ExampleEquilibrium().Validate(3, 4), InvalidArgument);
  const MixedProfile p =
      MixedProfile::FromPolytopePoints(Vec({"1/6", "1/3", "0"}), Vec({"1", "1", "0"}));
  EXPECT_EQ(p, ExampleEquilibrium());
  EXPECT_THROW(MixedProfile::FromPolytopePoints(Vec({"0", "0"}), Vec({"1"})),
               InvalidArgument);
}

TEST(LabelsOfProfileTest, WorkedExample) {
  const auto [xl, yl] = LabelsOfProfile(ExampleGame(), ExampleEquilibrium());
  EXPECT_EQ(xl, LabelSet(6, {3, 4, 5}));
  EXPECT_EQ(yl, LabelSet(6, {1, 2, 6}));
}

TEST(LabelsOfProfileTest, PureStrategyHasOtherRowLabels) {
  const BimatrixGame g = RandomGame(4, 3, 5);
  const auto [xl, yl] = LabelsOfProfile(g, Pure(4, 3, 1, 1));
  for (int i = 2; i <= 4; ++i) EXPECT_TRUE(xl.Contains(i));
  EXPECT_FALSE(xl.Contains(1));
}

TEST(LabelsOfProfileTest, DistinctPayoffsGiveOneBestResponse) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    // Distinct entries of B row 1 decide player 2's unique best reply to e_1.
    std::vector<long> values(9);
    for (int i = 0; i < 9; ++i) values[i] = i * 7 + 1;
    for (int i = 8; i > 0; --i) std::swap(values[i], values[rng.UniformBelow(i + 1)]);
    RationalMatrix b(3, 3);
    for (int i = 0; i < 9; ++i) b(i / 3, i % 3) = Rational(values[i]);
    const BimatrixGame g(Ints({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), b);
    const int best = static_cast<int>(
        std::max_element(values.begin(), values.begin() + 3) - values.begin());
    const auto [xl, yl] = LabelsOfProfile(g, Pure(3, 3, 1, 1));
    int replies = 0;
    for (int j = 1; j <= 3; ++j) replies += xl.Contains(3 + j);
    EXPECT_EQ(replies, 1);
    EXPECT_TRUE(xl.Contains(4 + best));
  }
}

TEST(LabelsOfProfileTest, DimensionMismatchThrows) {
  EXPECT_THROW(LabelsOfProfile(ExampleGame(), Pure(2, 3, 1, 1)), InvalidArgument);
}

TEST(VerifyEquilibriumTest, WorkedExample) {
  EXPECT_TRUE(VerifyEquilibrium(ExampleGame(), ExampleEquilibrium()));
  EXPECT_FALSE(VerifyEquilibrium(ExampleGame(), Pure(3, 3, 1, 1)));
}

TEST(VerifyEquilibriumTest, SupportEnumerationResultsVerify) {
  int games = 0;
  for (std::uint64_t seed = 1; games < 100; ++seed) {
    const BimatrixGame g = RandomGame(4, 4, seed);
    ++games;
    for (const MixedProfile& p : EnumerateEquilibria(g)) {
      EXPECT_TRUE(VerifyEquilibrium(g, p)) << "seed " << seed;
      const auto [xl, yl] = LabelsOfProfile(g, p);
      // Nondegenerate: each label exactly once.
      EXPECT_EQ(xl.size() + yl.size(), 8u);
    }
  }
}

TEST(VerifyEquilibriumTest, InvariantUnderPayoffShift) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const BimatrixGame g = RandomGame(3, 3, seed);
    RationalMatrix a = g.original_a();
    RationalMatrix b = g.original_b();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        a(i, j) += Q("7/2");
        b(i, j) += Rational(11);
      }
    }
    const BimatrixGame shifted_a(a, g.original_b());
    const BimatrixGame shifted_b(g.original_a(), b);
    std::vector<MixedProfile> probes = EnumerateEquilibria(g);
    for (int i = 1; i <= 3; ++i) probes.push_back(Pure(3, 3, i, 4 - i));
    probes.push_back({Vec({"1/3", "1/3", "1/3"}), Vec({"1/2", "0", "1/2"})});
    for (const MixedProfile& p : probes) {
      const bool verdict = VerifyEquilibrium(g, p);
      EXPECT_EQ(VerifyEquilibrium(shifted_a, p), verdict);
      EXPECT_EQ(VerifyEquilibrium(shifted_b, p), verdict);
    }
  }
}

TEST(IsNondegenerateTest, Examples) {
  EXPECT_TRUE(IsNondegenerate(ExampleGame()));
  EXPECT_FALSE(IsNondegenerate(ImitationGame(DegenerateC())));
  EXPECT_TRUE(IsNondegenerate(BimatrixGame(Ints({{5}}), Ints({{2}}))));
}

TEST(IsNondegenerateTest, RefusesBeyondBudget) {
  const BimatrixGame g = BimatrixGame(RationalMatrix::Identity(6),
                                      RationalMatrix::Identity(6));
  EXPECT_THROW(IsNondegenerate(g, VertexBudget{10}), BudgetExceeded);
}

TEST(SymmetrizeTest, OneByOne) {
  const BimatrixGame s = Symmetrize(BimatrixGame(Ints({{1}}), Ints({{1}})));
  EXPECT_EQ(s.a(), Ints({{0, 1}, {1, 0}}));
  EXPECT_EQ(s.b(), s.a().Transposed());
  const RationalVector z = Vec({"1/2", "1/2"});
  EXPECT_TRUE(VerifyEquilibrium(s, {z, z}));
}

TEST(SymmetrizeTest, WorkedExampleGivesSymmetricEquilibrium) {
  const BimatrixGame g = ExampleGame();
  const BimatrixGame s = Symmetrize(g);
  EXPECT_EQ(s.rows(), 6);
  const RationalVector z = SymmetrizedStrategy(g, ExampleEquilibrium());
  EXPECT_TRUE(VerifyEquilibrium(s, {z, z}));
  // z is proportional to (x/v, y/u) with u = 1/2 and v = 2.
  EXPECT_EQ(z, Vec({"1/15", "2/15", "0", "2/5", "2/5", "0"}));
  EXPECT_EQ(SplitSymmetrizedStrategy(g, z), ExampleEquilibrium());
}

TEST(SymmetrizeTest, RoundTripAgainstSupportEnumeration) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const BimatrixGame g = RandomGame(3, 3, seed);
    const BimatrixGame s = Symmetrize(g);
    std::vector<MixedProfile> recovered;
    for (const MixedProfile& p : EnumerateEquilibria(s)) {
      if (p.x != p.y) continue;
      const auto split = SplitSymmetrizedStrategy(g, p.x);
      ASSERT_TRUE(split.has_value());
      recovered.push_back(*split);
    }
    std::sort(recovered.begin(), recovered.end());
    EXPECT_EQ(recovered, EnumerateEquilibria(g)) << "seed " << seed;
  }
}

TEST(ImitationGameTest, RecoversWorkedExample) {
  const BimatrixGame g = ImitationGame(ExampleSymmetricC());
  EXPECT_EQ(g.a(), ExampleGame().a());
  EXPECT_EQ(g.b(), ExampleGame().b());
}

TEST(ImitationGameTest, SymmetricEquilibriaCorrespond) {
  const RationalMatrix c = ExampleSymmetricC();
  const BimatrixGame sym(c, c.Transposed());
  const std::vector<MixedProfile> all = EnumerateEquilibria(sym);
  // One symmetric and the pair (a, b), (b, a).
  ASSERT_EQ(all.size(), 3u);
  const RationalVector a = Vec({"1/2", "1/2", "0"});
  const RationalVector b = Vec({"0", "2/3", "1/3"});
  const RationalVector x = Vec({"1/3", "2/3", "0"});
  EXPECT_NE(std::find(all.begin(), all.end(), MixedProfile{a, b}), all.end());
  EXPECT_NE(std::find(all.begin(), all.end(), MixedProfile{b, a}), all.end());
  EXPECT_NE(std::find(all.begin(), all.end(), MixedProfile{x, x}), all.end());
  const std::vector<MixedProfile> imitation = EnumerateEquilibria(ImitationGame(c));
  ASSERT_EQ(imitation.size(), 1u);
  EXPECT_EQ(imitation[0].x, x);
}

TEST(ImitationGameTest, DegenerateExampleHasASegmentOfEquilibria) {
  const BimatrixGame g = ImitationGame(DegenerateC());
  const RationalVector x = Vec({"1/2", "1/2", "0"});
  const RationalVector y0 = Vec({"1/2", "1/2", "0"});
  const RationalVector y1 = Vec({"1/3", "1/3", "1/3"});
  for (const char* t : {"0", "1/4", "1/2", "1"}) {
    RationalVector y(3);
    for (int j = 0; j < 3; ++j) y[j] = Q(t) * y0[j] + (Rational(1) - Q(t)) * y1[j];
    EXPECT_TRUE(VerifyEquilibrium(g, {x, y})) << t;
  }
  const RationalVector outside = Vec({"1/4", "1/4", "1/2"});
  EXPECT_FALSE(VerifyEquilibrium(g, {x, outside}));
}

TEST(ImitationGameTest, OneByOneAndNonSquare) {
  const BimatrixGame g = ImitationGame(Ints({{3}}));
  const auto eq = EnumerateEquilibria(g);
  ASSERT_EQ(eq.size(), 1u);
  EXPECT_EQ(eq[0], (MixedProfile{Vec({"1"}), Vec({"1"})}));
  EXPECT_THROW(ImitationGame(Ints({{1, 2}})), InvalidArgument);
}

TEST(UnitVectorGameTest, IdentityLabelsGiveWorkedExample) {
  const UnitVectorGame u{3, {1, 2, 3}, ExampleGame().b()};
  const BimatrixGame g = ToBimatrix(u);
  EXPECT_EQ(g.a(), ExampleGame().a());
  EXPECT_EQ(g.b(), ExampleGame().b());
}

TEST(UnitVectorGameTest, ConstantLabelsMakeRowOneDominant) {
  const UnitVectorGame u{3, {1, 1, 1}, Ints({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}})};
  const BimatrixGame g = ToBimatrix(u);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(g.original_a()(0, j), Rational(1));
    EXPECT_EQ(g.original_a()(1, j), Rational(0));
  }
  EXPECT_EQ(u.ColumnsWithLabel(1), (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(u.ColumnsWithLabel(2).empty());
}

TEST(UnitVectorGameTest, RejectsBadLabels) {
  const UnitVectorGame u{2, {1, 3}, Ints({{1, 1}, {1, 1}})};
  EXPECT_THROW(ToBimatrix(u), InvalidArgument);
}

// Completely labeled nonzero vertices of P^l, relabeled, against support
// enumeration of the unit-vector game.
TEST(UnitVectorGameTest, EquilibriaAreCompletelyLabeledPoints) {
  int tested = 0;
  for (std::uint64_t seed = 1; tested < 20; ++seed) {
    Rng rng(seed);
    UnitVectorGame u{3, std::vector<int>(5), RationalMatrix(3, 5)};
    for (int& l : u.labels) l = static_cast<int>(rng.UniformInt(1, 3));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 5; ++j) u.b(i, j) = Rational(rng.UniformInt(1, 50));
    }
    const BimatrixGame g = ToBimatrix(u);
    if (!IsNondegenerate(g)) continue;
    ++tested;
    std::vector<MixedProfile> from_points;
    for (const LabeledVertex& v : VerticesOfP(g)) {
      std::set<int> covered;
      for (int l : v.labels.ToVector()) covered.insert(l <= 3 ? l : u.labels[l - 4]);
      if (covered.size() != 3) continue;
      const auto p = ProfileFromLabeledPoint(u, v.point);
      if (p) from_points.push_back(*p);
    }
    std::sort(from_points.begin(), from_points.end());
    EXPECT_EQ(from_points, EnumerateEquilibria(g)) << "seed " << seed;
  }
}

TEST(GameIoTest, ParseAndFormatRoundTrip) {
  const std::string text = "3 3\n1 0 0\n0 1 0\n0 0 1\n\n0 2 4\n3 2 0\n0 2 0\n";
  const BimatrixGame g = ParseBimatrixGame(text);
  EXPECT_EQ(g.b(), ExampleGame().b());
  EXPECT_EQ(FormatBimatrixGame(g), text);
  const BimatrixGame frac = ParseBimatrixGame("1 2\n-1/2 3\n\n2/4 0\n");
  EXPECT_EQ(frac.original_a()(0, 0), Q("-1/2"));
  EXPECT_EQ(frac.original_b()(0, 0), Q("1/2"));
}

TEST(GameIoTest, ParseErrorsCarryPosition) {
  struct Case {
    const char* text;
    std::size_t line;
  };
  for (const Case& c : {Case{"2 2\n1 2\n3\n\n1 1\n1 1\n", 3},
                        Case{"2 2\n1 2\n3 4\n1 1\n1 1\n", 4},
                        Case{"2 2\n1 x\n3 4\n\n1 1\n1 1\n", 2},
                        Case{"2\n", 1},
                        Case{"1 1\n1/0\n\n1\n", 2},
                        Case{"1 1\n1\n\n1\nextra\n", 5}}) {
    try {
      ParseBimatrixGame(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text << " -> " << e.what();
    }
  }
  try {
    ParseBimatrixGame("1 2\n1 x\n\n1 1\n");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(GameIoTest, UnitVectorFormat) {
  const UnitVectorGame u = ParseUnitVectorGame("2 3\n2 1 2\n1 2 3\n4 5 6\n");
  EXPECT_EQ(u.labels, (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(u.b(1, 2), Rational(6));
  EXPECT_EQ(ParseUnitVectorGame(FormatUnitVectorGame(u)).b, u.b);
  EXPECT_THROW(ParseUnitVectorGame("2 2\n1 3\n1 1\n1 1\n"), ParseError);
}

TEST(GameIoTest, ProfilesAndLabelStrings) {
  EXPECT_EQ(ParseProfile("x=1/3 2/3 0 ; y=1/2 1/2 0"), ExampleEquilibrium());
  EXPECT_EQ(ParseProfile("1/3 2/3 0 ; 1/2 1/2 0"), ExampleEquilibrium());
  EXPECT_THROW(ParseProfile("1/3 2/3 0"), ParseError);
  EXPECT_EQ(FormatLabelString({6, 4, 5, 2, 3, 1}, 6), "645231");
  EXPECT_EQ(FormatLabelString({10, 2}, 10), "10,2");
  EXPECT_EQ(ParseLabelString("645231", 6), (std::vector<int>{6, 4, 5, 2, 3, 1}));
  EXPECT_EQ(ParseLabelString("10,2,3", 10), (std::vector<int>{10, 2, 3}));
}

}  // namespace
}  // namespace galelemke
