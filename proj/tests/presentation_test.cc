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

#include "freeknot/presentation.h"

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracle.h"

namespace freeknot {
namespace {

using ::testing::HasSubstr;

Arrangement Arr(std::initializer_list<Int> order) {
  std::vector<Int> gens(order);
  return BuildArrangement(MakeSemigroup(gens), gens);
}

Symbol P(int i) { return {Symbol::Kind::kP, i}; }
Symbol Q(int i) { return {Symbol::Kind::kQ, i}; }

Int SignedDegree(const Word& w, const std::map<Symbol, Int>& deg) {
  Int sum = 0;
  for (const Letter& l : w) sum += l.exponent * deg.at(l.symbol);
  return sum;
}

TEST(SymbolTest, ParseAndPrint) {
  EXPECT_EQ(Symbol::Parse("Q12"), Q(12));
  EXPECT_EQ(P(3).ToString(), "P3");
  EXPECT_THROW(Symbol::Parse("X1"), Error);
  EXPECT_THROW(Symbol::Parse("P0"), Error);
  EXPECT_THROW(Symbol::Parse("P"), Error);
}

TEST(BuildPresentationTest, Trefoil) {
  const GroupPresentation pr = BuildPresentation(Arr({2, 3}));
  EXPECT_EQ(pr.generators, (std::vector<Symbol>{P(1), Q(1)}));
  ASSERT_EQ(pr.relators.size(), 1u);
  EXPECT_EQ(pr.degrees.at(P(1)), 2);
  EXPECT_EQ(pr.degrees.at(Q(1)), 3);
  EXPECT_EQ(ExportPresentation(pr, PresentationFormat::kText),
            "generators: P1, Q1 | relations: Q1^2 = P1^3\n");
}

TEST(BuildPresentationTest, TwoStage) {
  const Arrangement a = Arr({18, 15, 10});
  const GroupPresentation pr = BuildPresentation(a);
  EXPECT_EQ(pr.generators, (std::vector<Symbol>{P(1), Q(1), Q(2), P(2)}));
  ASSERT_EQ(pr.relators.size(), 3u);
  EXPECT_EQ(pr.relators[0].kind, RelatorKind::kCabling);
  EXPECT_EQ(pr.relators[1].kind, RelatorKind::kCabling);
  EXPECT_EQ(pr.relators[2].kind, RelatorKind::kDefining);
  EXPECT_EQ(pr.degrees.at(P(1)), 18);
  EXPECT_EQ(pr.degrees.at(Q(1)), 15);
  EXPECT_EQ(pr.degrees.at(P(2)), 3);
  EXPECT_EQ(pr.degrees.at(Q(2)), 10);
  const std::string text = ExportPresentation(pr, PresentationFormat::kText);
  // b_2 = -80 moves P2 to the left-hand side.
  EXPECT_THAT(text, HasSubstr("Q2^3 * P2^80 = Q1^18"));
  EXPECT_THAT(text, HasSubstr("Q1^6 = P1^5"));
  EXPECT_THAT(text, HasSubstr("P2 * P1^4 = Q1^5"));
  for (const Relator& r : pr.relators) EXPECT_EQ(SignedDegree(r.word, pr.degrees), 0);
  EXPECT_TRUE(CheckAbelianization(pr, a));
}

TEST(BuildPresentationTest, NotFree) {
  EXPECT_THROW(BuildPresentation(Arr({5, 6, 7})), Error);
  EXPECT_THROW(ToricBinomials(Arr({5, 6, 7})), Error);
}

TEST(CheckAbelianizationTest, NegativeControls) {
  const Arrangement a = Arr({18, 15, 10});
  GroupPresentation pr = BuildPresentation(a);
  GroupPresentation bad = pr;
  bad.relators[1].word.back().exponent += 1;
  try {
    CheckAbelianization(bad, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnbalanced);
    EXPECT_THAT(e.what(), HasSubstr("relator 2"));
  }
  GroupPresentation wrong_degrees = pr;
  wrong_degrees.degrees[Q(2)] = 11;
  EXPECT_FALSE(CheckAbelianization(wrong_degrees, a));
  // Correct presentation checked against a different arrangement.
  EXPECT_FALSE(CheckAbelianization(pr, Arr({10, 15, 18})));
}

TEST(ToricBinomialsTest, Examples) {
  const auto trefoil = ToricBinomials(Arr({2, 3}));
  ASSERT_EQ(trefoil.size(), 1u);
  EXPECT_EQ(ToString(trefoil[0]), "x1^2 - x0^3");
  EXPECT_EQ(trefoil[0].degree, 6);
  const auto three = ToricBinomials(Arr({4, 6, 13}));
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(ToString(three[0]), "x1^2 - x0^3");
  EXPECT_EQ(ToString(three[1]), "x2^2 - x1^3*x0^2");
  EXPECT_EQ(three[1].degree, 26);
}

Int MonomialDegree(const std::map<int, Int>& m, const Arrangement& a) {
  Int d = 0;
  for (const auto& [i, e] : m) d += e * a.generator(i);
  return d;
}

TEST(PresentationPropertyTest, SweepRelatorsAndBinomials) {
  for (const auto& gens : oracle::MinimalSets(40, 3)) {
    if (gens.size() < 2) continue;
    const Semigroup s = MakeSemigroup(gens);
    for (const Arrangement& a : FreeArrangements(s)) {
      const GroupPresentation pr = BuildPresentation(a);
      ASSERT_EQ(pr.relators.size(), static_cast<std::size_t>(2 * a.stages() - 1));
      for (const Relator& r : pr.relators) ASSERT_EQ(SignedDegree(r.word, pr.degrees), 0);
      ASSERT_TRUE(CheckAbelianization(pr, a));
      const auto binomials = ToricBinomials(a);
      ASSERT_EQ(binomials.size(), static_cast<std::size_t>(a.stages()));
      for (std::size_t k = 0; k < binomials.size(); ++k) {
        const int i = static_cast<int>(k) + 1;
        ASSERT_EQ(binomials[k].lhs.size(), 1u);
        ASSERT_EQ(binomials[k].lhs.begin()->first, i);
        ASSERT_EQ(binomials[k].lhs.begin()->second, a.multiplier(i));
        for (const auto& [j, e] : binomials[k].rhs) {
          ASSERT_LT(j, i);
          ASSERT_GT(e, 0);
        }
        ASSERT_EQ(MonomialDegree(binomials[k].lhs, a), binomials[k].degree);
        ASSERT_EQ(MonomialDegree(binomials[k].rhs, a), binomials[k].degree);
      }
    }
  }
}

TEST(ExportTest, JsonRoundTrip) {
  for (const Arrangement& a : {Arr({2, 3}), Arr({18, 15, 10}), Arr({20, 145, 28})}) {
    const GroupPresentation pr = BuildPresentation(a);
    const std::string json = ExportPresentation(pr, PresentationFormat::kJson);
    EXPECT_THAT(json, HasSubstr("\"schema\": \"presentation/1\""));
    EXPECT_EQ(ParsePresentationJson(json), pr);
  }
}

TEST(ExportTest, TextFixedPoint) {
  for (const Arrangement& a : {Arr({2, 3}), Arr({18, 15, 10}), Arr({20, 145, 28}), Arr({4, 6, 13})}) {
    const GroupPresentation pr = BuildPresentation(a);
    const std::string text = ExportPresentation(pr, PresentationFormat::kText);
    const GroupPresentation parsed = ParsePresentationText(text);
    EXPECT_EQ(parsed.generators, pr.generators);
    ASSERT_EQ(parsed.relators.size(), pr.relators.size());
    for (std::size_t k = 0; k < pr.relators.size(); ++k) {
      EXPECT_EQ(parsed.relators[k].kind, pr.relators[k].kind);
      // Same letters up to order.
      auto sorted = [](Word w) {
        std::sort(w.begin(), w.end(), [](const Letter& x, const Letter& y) {
          return std::tie(x.symbol, x.exponent) < std::tie(y.symbol, y.exponent);
        });
        return w;
      };
      EXPECT_EQ(sorted(parsed.relators[k].word), sorted(pr.relators[k].word));
    }
    EXPECT_EQ(ExportPresentation(parsed, PresentationFormat::kText), text);
  }
}

TEST(ExportTest, ParseErrors) {
  for (const char* bad : {"", "relations: Q1 = P1", "generators: P1, Q1 | relations: Q1^2",
                          "generators: P1, Q1 | relations: Q1^x = P1",
                          "generators: P1, Z1 | relations: Q1 = P1"}) {
    EXPECT_THROW(ParsePresentationText(bad), Error) << bad;
  }
  for (const char* bad : {"", "{", "{\"schema\":\"other\"}", "[1,2]",
                          "{\"schema\":\"presentation/1\",\"generators\":[\"P1\"],"
                          "\"relators\":[{\"kind\":\"weird\",\"index\":1,\"word\":[]}],"
                          "\"degrees\":{}}"}) {
    try {
      ParsePresentationJson(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

}  // namespace
}  // namespace freeknot
