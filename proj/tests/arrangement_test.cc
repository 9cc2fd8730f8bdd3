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

#include "freeknot/arrangement.h"

#include <algorithm>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracle.h"

namespace freeknot {
namespace {

using ::testing::ElementsAre;
using ::testing::ElementsAreArray;

std::vector<Int> V(std::span<const Int> s) { return {s.begin(), s.end()}; }

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(BuildArrangementTest, TowerAndMultipliers) {
  const Semigroup s = MakeSemigroup({10, 15, 18});
  Arrangement g1 = BuildArrangement(s, {18, 15, 10});
  EXPECT_THAT(V(g1.tower()), ElementsAre(18, 3, 1));
  EXPECT_THAT(V(g1.multipliers()), ElementsAre(6, 3));
  Arrangement g2 = BuildArrangement(s, {10, 18, 15});
  EXPECT_THAT(V(g2.tower()), ElementsAre(10, 2, 1));
  EXPECT_THAT(V(g2.multipliers()), ElementsAre(5, 2));
  Arrangement trefoil = BuildArrangement(MakeSemigroup({2, 3}), {2, 3});
  EXPECT_THAT(V(trefoil.tower()), ElementsAre(2, 1));
  EXPECT_THAT(V(trefoil.multipliers()), ElementsAre(2));
  EXPECT_EQ(trefoil.multiplier(0), 1);
}

TEST(BuildArrangementTest, NotPermutation) {
  const Semigroup s = MakeSemigroup({10, 15, 18});
  EXPECT_EQ(CodeOf([&] { BuildArrangement(s, {10, 15}); }), ErrorCode::kNotPermutation);
  EXPECT_EQ(CodeOf([&] { BuildArrangement(s, {10, 15, 15}); }), ErrorCode::kNotPermutation);
  EXPECT_EQ(CodeOf([&] { BuildArrangement(s, {10, 15, 19}); }), ErrorCode::kNotPermutation);
}

TEST(IsFreeTest, Examples) {
  const Semigroup s = MakeSemigroup({4, 5, 6});
  // 12 in <4>; 10 = 4 + 6 in <4, 6>.
  ASSERT_TRUE(oracle::Free({4, 6, 5}));
  EXPECT_TRUE(IsFree(BuildArrangement(s, {4, 6, 5})));
  // e_1 = 1 so n_2 = 1 and 6 is not in <4, 5>.
  ASSERT_FALSE(oracle::Free({4, 5, 6}));
  EXPECT_FALSE(IsFree(BuildArrangement(s, {4, 5, 6})));
  EXPECT_TRUE(IsFree(BuildArrangement(MakeSemigroup({2, 3}), {3, 2})));
}

TEST(FreeArrangementsTest, TenFifteenEighteen) {
  std::vector<std::vector<Int>> got;
  for (const Arrangement& a : FreeArrangements(MakeSemigroup({10, 15, 18}))) got.push_back(V(a.ordered()));
  EXPECT_THAT(got, ElementsAre(ElementsAre(10, 15, 18), ElementsAre(10, 18, 15),
                               ElementsAre(15, 10, 18), ElementsAre(15, 18, 10),
                               ElementsAre(18, 10, 15), ElementsAre(18, 15, 10)));
}

TEST(FreeArrangementsTest, PlaneCurveSemigroup) {
  std::vector<std::vector<Int>> got;
  for (const Arrangement& a : FreeArrangements(MakeSemigroup({20, 28, 145}))) got.push_back(V(a.ordered()));
  EXPECT_THAT(got, ElementsAre(ElementsAre(20, 28, 145), ElementsAre(20, 145, 28),
                               ElementsAre(28, 20, 145), ElementsAre(145, 20, 28)));
}

TEST(FreeArrangementsTest, NotFreeAnywhere) {
  EXPECT_TRUE(FreeArrangements(MakeSemigroup({5, 6, 7})).empty());
}

TEST(FreeArrangementsTest, TooManyGenerators) {
  // Nine consecutive integers from 9 form a minimal generating set.
  const Semigroup s = MakeSemigroup({9, 10, 11, 12, 13, 14, 15, 16, 17});
  ASSERT_EQ(s.size(), 9u);
  EXPECT_EQ(CodeOf([&] { FreeArrangements(s); }), ErrorCode::kTooManyGenerators);
}

TEST(TruncatedSemigroupTest, Examples) {
  const Arrangement a = BuildArrangement(MakeSemigroup({20, 28, 145}), {20, 145, 28});
  EXPECT_EQ(TruncatedSemigroup(a, 1), MakeSemigroup({4, 29}));
  EXPECT_EQ(TruncatedSemigroup(a, 2), MakeSemigroup({20, 28, 145}));
  EXPECT_EQ(TruncatedSemigroup(a, 0), MakeSemigroup({1}));
  const Arrangement g1 = BuildArrangement(MakeSemigroup({10, 15, 18}), {18, 15, 10});
  EXPECT_EQ(TruncatedSemigroup(g1, 1), MakeSemigroup({5, 6}));
  EXPECT_EQ(CodeOf([&] { TruncatedSemigroup(a, 3); }), ErrorCode::kInvalidArgument);
  const Arrangement not_free = BuildArrangement(MakeSemigroup({4, 5, 6}), {4, 5, 6});
  EXPECT_EQ(CodeOf([&] { TruncatedSemigroup(not_free, 1); }), ErrorCode::kNotFree);
}

TEST(DelormeConductorTest, Examples) {
  const Semigroup s = MakeSemigroup({10, 15, 18});
  EXPECT_EQ(DelormeConductor(BuildArrangement(s, {10, 15, 18})), 78);
  EXPECT_EQ(DelormeConductor(BuildArrangement(s, {18, 15, 10})), 78);
  EXPECT_EQ(DelormeConductor(BuildArrangement(MakeSemigroup({2, 3}), {2, 3})), 2);
  EXPECT_EQ(oracle::ScanConductor({10, 15, 18}), 78);
  const Arrangement not_free = BuildArrangement(MakeSemigroup({5, 6, 7}), {5, 6, 7});
  EXPECT_EQ(CodeOf([&] { DelormeConductor(not_free); }), ErrorCode::kNotFree);
}

TEST(FreeCoefficientsTest, NegativeB) {
  const FreeCoefficients c =
      ComputeFreeCoefficients(BuildArrangement(MakeSemigroup({10, 15, 18}), {18, 15, 10}));
  EXPECT_THAT(c.b, ElementsAre(5, -80));
  EXPECT_EQ(c.x[1], oracle::InverseBySearch(-80, 3));
  EXPECT_EQ(c.x[1], 1);
  EXPECT_EQ(c.y[1], -27);
  EXPECT_EQ(c.x[0], 5);  // 5 * 5 = 4 * 6 + 1
  EXPECT_EQ(c.y[0], 4);
}

TEST(FreeCoefficientsTest, SmallCases) {
  const FreeCoefficients trefoil =
      ComputeFreeCoefficients(BuildArrangement(MakeSemigroup({2, 3}), {2, 3}));
  EXPECT_THAT(trefoil.b, ElementsAre(3));
  EXPECT_THAT(trefoil.x, ElementsAre(1));
  EXPECT_THAT(trefoil.y, ElementsAre(1));
  const FreeCoefficients c = ComputeFreeCoefficients(BuildArrangement(MakeSemigroup({4, 6, 13}), {4, 6, 13}));
  EXPECT_THAT(c.b, ElementsAre(3, 1));
  EXPECT_EQ(c.x[1], 1);
  EXPECT_EQ(c.y[1], 0);
}

TEST(PoincareRationalTest, Examples) {
  auto [num, den] = PoincareRational(BuildArrangement(MakeSemigroup({2, 3}), {2, 3}));
  EXPECT_EQ(num, IntPolynomial::OneMinusTPow(6));
  EXPECT_EQ(den, IntPolynomial::OneMinusTPow(2) * IntPolynomial::OneMinusTPow(3));
  auto [n1, d1] = PoincareRational(BuildArrangement(MakeSemigroup({1}), {1}));
  EXPECT_EQ(n1, IntPolynomial::Constant(1));
  EXPECT_EQ(d1, IntPolynomial::OneMinusTPow(1));
  auto [n3, d3] = PoincareRational(BuildArrangement(MakeSemigroup({10, 15, 18}), {18, 15, 10}));
  EXPECT_EQ(n3, IntPolynomial::OneMinusTPow(90) * IntPolynomial::OneMinusTPow(30));
}

// Sweep over every minimal generating set with <= 3 generators all <= 30:
// the enumerated arrangement set equals the brute-force one, and every free
// arrangement satisfies the structural invariants.
TEST(FreeStructurePropertyTest, SweepAgainstOracles) {
  for (const auto& gens : oracle::MinimalSets(30, 3)) {
    const Semigroup s = MakeSemigroup(gens);
    std::vector<std::vector<Int>> expected;
    std::vector<Int> perm = gens;
    do {
      if (oracle::Free(perm)) expected.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::vector<Int>> got;
    const auto arrangements = FreeArrangements(s);
    for (const Arrangement& a : arrangements) got.push_back(V(a.ordered()));
    ASSERT_EQ(got, expected) << s.ToString();
    if (gens.size() == 2) {
      ASSERT_EQ(got.size(), 2u);
    }

    const Int c = oracle::ScanConductor(gens);
    for (const Arrangement& a : arrangements) {
      ASSERT_EQ(DelormeConductor(a), c);
      for (Int n : a.multipliers()) ASSERT_GE(n, 2);
      const FreeCoefficients fc = ComputeFreeCoefficients(a);
      for (int i = 1; i <= a.stages(); ++i) {
        const Int n = a.multiplier(i);
        ASSERT_EQ(oracle::InverseBySearch(fc.b[i - 1], n), fc.x[i - 1]);
        ASSERT_EQ(fc.x[i - 1] * fc.b[i - 1], fc.y[i - 1] * n + 1);
      }
      auto [num, den] = PoincareRational(a);
      const Int top = c + s.max_generator();
      ASSERT_EQ(SeriesQuotient(num, den, top), SeriesTruncated(s, top));
    }
  }
}

}  // namespace
}  // namespace freeknot
