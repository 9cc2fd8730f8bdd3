// Copyright 2026 The freeknot Authors
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

#include "freeknot/semigroup.h"

#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracle.h"

namespace freeknot {
namespace {

using ::testing::ElementsAre;

std::vector<Int> Gens(const Semigroup& s) { return {s.generators().begin(), s.generators().end()}; }

TEST(MakeSemigroupTest, StripsRedundantGenerators) {
  // 10 = 4 + 6, while 9 is not in <4, 6>.
  ASSERT_TRUE(oracle::Member({4, 6}, 10));
  ASSERT_FALSE(oracle::Member({4, 6}, 9));
  EXPECT_THAT(Gens(MakeSemigroup({6, 4, 9, 10})), ElementsAre(4, 6, 9));
}

TEST(MakeSemigroupTest, AcceptsTheFullMonoid) {
  EXPECT_THAT(Gens(MakeSemigroup({1})), ElementsAre(1));
  EXPECT_THAT(Gens(MakeSemigroup({3, 1, 7})), ElementsAre(1));
}

TEST(MakeSemigroupTest, Errors) {
  auto code_of = [](std::vector<Int> raw) {
    try {
      MakeSemigroup(raw);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code_of({4, 6}), ErrorCode::kGcdNotOne);
  EXPECT_EQ(code_of({}), ErrorCode::kEmptyInput);
  EXPECT_EQ(code_of({0, 3}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of({-2, 3}), ErrorCode::kInvalidArgument);
}

TEST(MakeSemigroupTest, DuplicatesCollapse) {
  EXPECT_THAT(Gens(MakeSemigroup({3, 2, 3, 2})), ElementsAre(2, 3));
}

TEST(MakeSemigroupTest, Idempotent) {
  for (const auto& raw : oracle::MinimalSets(25, 3)) {
    Semigroup s = MakeSemigroup(raw);
    EXPECT_EQ(MakeSemigroup(s.generators()), s);
    EXPECT_EQ(Gens(s), raw);
  }
}

TEST(ContainsTest, Examples) {
  const Semigroup s = MakeSemigroup({10, 15, 18});
  EXPECT_FALSE(Contains(s, 7));
  EXPECT_TRUE(Contains(s, 0));
  EXPECT_FALSE(Contains(s, -1));
  EXPECT_TRUE(Contains(s, 33));
  EXPECT_FALSE(Contains(s, 77));
  EXPECT_TRUE(Contains(s, 78));
}

TEST(SubmonoidContainsTest, NonNumericalSubmonoids) {
  const std::vector<Int> four_six{4, 6};
  EXPECT_TRUE(SubmonoidContains(four_six, 18));  // 4*3 + 6
  EXPECT_FALSE(SubmonoidContains(four_six, 9));
  EXPECT_FALSE(SubmonoidContains(four_six, 2));
  EXPECT_TRUE(SubmonoidContains({}, 0));
  EXPECT_FALSE(SubmonoidContains({}, 5));
}

TEST(SubmonoidContainsTest, AgreesWithDpTableExhaustively) {
  const std::vector<std::vector<Int>> families = {
      {4, 6}, {6, 10, 15}, {9, 12}, {5, 7}, {20, 28}, {3}, {14, 21, 35}};
  for (const auto& gens : families) {
    const SubmonoidMembership residue(gens);
    const std::vector<bool> table = MembershipTable(gens, 400);
    for (Int n = 0; n <= 400; ++n) {
      ASSERT_EQ(residue.Contains(n), static_cast<bool>(table[n])) << "n=" << n;
      ASSERT_EQ(table[n], static_cast<bool>(oracle::Member(gens, n))) << "n=" << n;
    }
  }
}

TEST(AperySetTest, Examples) {
  EXPECT_THAT(AperySet(MakeSemigroup({2, 3}), 2), ElementsAre(0, 3));
  EXPECT_THAT(AperySet(MakeSemigroup({4, 29}), 4), ElementsAre(0, 29, 58, 87));
  EXPECT_THAT(AperySet(MakeSemigroup({1}), 1), ElementsAre(0));
}

TEST(AperySetTest, WithRespectToNonGeneratorElement) {
  // 5 = 2 + 3 in <2,3>: residues 0..4 least elements are 0, 6, 2, 3, 4.
  EXPECT_THAT(AperySet(MakeSemigroup({2, 3}), 5), ElementsAre(0, 6, 2, 3, 4));
}

TEST(AperySetTest, NotMember) {
  try {
    AperySet(MakeSemigroup({10, 15, 18}), 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMember);
  }
  EXPECT_THROW(AperySet(MakeSemigroup({2, 3}), 0), Error);
}

TEST(ConductorTest, Examples) {
  EXPECT_EQ(Conductor(MakeSemigroup({2, 3})), 2);
  EXPECT_EQ(Conductor(MakeSemigroup({4, 29})), 84);
  EXPECT_EQ(Conductor(MakeSemigroup({1})), 0);
  EXPECT_EQ(Conductor(MakeSemigroup({10, 15, 18})), 78);
  EXPECT_EQ(Conductor(MakeSemigroup({5, 7})), 24);
}

TEST(GenusDeltaTest, Examples) {
  EXPECT_EQ(GenusDelta(MakeSemigroup({2, 3})), 1);
  EXPECT_EQ(GenusDelta(MakeSemigroup({10, 15, 18})), 39);
  EXPECT_EQ(GenusDelta(MakeSemigroup({1})), 0);
  EXPECT_EQ(GenusDelta(MakeSemigroup({5, 6, 7})), 6);  // not symmetric: c = 10
}

TEST(GapsTest, ListsEveryGap) {
  EXPECT_THAT(Gaps(MakeSemigroup({3, 5})), ElementsAre(1, 2, 4, 7));
  EXPECT_TRUE(Gaps(MakeSemigroup({1})).empty());
}

TEST(SeriesTruncatedTest, Examples) {
  EXPECT_EQ(SeriesTruncated(MakeSemigroup({2, 3}), 5).ToString(), "1 + t^2 + t^3 + t^4 + t^5");
  EXPECT_EQ(SeriesTruncated(MakeSemigroup({1}), 3).ToString(), "1 + t + t^2 + t^3");
  EXPECT_EQ(SeriesTruncated(MakeSemigroup({10, 15, 18}), 9).ToString(), "1");
}

// Exhaustive: conductor by Apery set vs scan, gap count, membership around
// the conductor and the series coefficients, for every minimal generating
// set with generators <= 40 (sizes 1..3).
TEST(SemigroupPropertyTest, ConductorGapsAndSeriesAgreeWithOracles) {
  for (const auto& gens : oracle::MinimalSets(40, 3)) {
    const Semigroup s = MakeSemigroup(gens);
    const Int c = Conductor(s);
    ASSERT_EQ(c, oracle::ScanConductor(gens)) << s.ToString();
    ASSERT_EQ(GenusDelta(s), oracle::ScanGapCount(gens)) << s.ToString();
    ASSERT_EQ(static_cast<Int>(Gaps(s).size()), GenusDelta(s));
    for (Int n = c; n < c + s.multiplicity(); ++n) ASSERT_TRUE(Contains(s, n));
    if (c >= 1) ASSERT_FALSE(Contains(s, c - 1));
    const IntPolynomial series = SeriesTruncated(s, c + 5);
    for (Int k = 0; k <= c + 5; ++k) {
      ASSERT_EQ(series.Coefficient(k), oracle::Member(gens, k) ? 1 : 0);
    }
  }
}

// Generators up to 200: Apery conductor vs scan on a deterministic sample of
// pairs and triples (the full triple space is too large for a unit test).
TEST(SemigroupPropertyTest, AperyConductorMatchesScanUpTo200) {
  for (Int a = 2; a <= 200; a += 7) {
    for (Int b = a + 1; b <= 200; b += 11) {
      for (Int c : {Int{0}, b + 3, b + 17}) {
        std::vector<Int> gens{a, b};
        if (c != 0 && c <= 200) gens.push_back(c);
        if (!oracle::MinimalGcdOne(gens)) continue;
        ASSERT_EQ(Conductor(MakeSemigroup(gens)), oracle::ScanConductor(gens));
      }
    }
  }
}

}  // namespace
}  // namespace freeknot
