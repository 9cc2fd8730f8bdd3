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

#ifndef FREEKNOT_PRESENTATION_H_
#define FREEKNOT_PRESENTATION_H_

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "freeknot/arrangement.h"
#include "freeknot/checked.h"

namespace freeknot {

// P_i is the meridian loop entering stage i, Q_i the core of the stage-i
// solid torus.
struct Symbol {
  enum class Kind { kP, kQ };
  Kind kind = Kind::kP;
  int index = 1;

  std::string ToString() const;
  // Accepts "P3", "Q12".
  static Symbol Parse(std::string_view text);

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

struct Letter {
  Symbol symbol;
  Int exponent = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

enum class RelatorKind {
  kCabling,   // Q_i^{n_i} = P_i^{b_i} Q_{i-1}^{n_{i-1} n_i}
  kDefining,  // P_{i+1} P_i^{y_i} Q_{i-1}^{n_{i-1} x_i} = Q_i^{x_i}
};

struct Relator {
  RelatorKind kind = RelatorKind::kCabling;
  int index = 1;
  Word word;  // relator word, equal to the identity in the group

  friend bool operator==(const Relator&, const Relator&) = default;
};

struct GroupPresentation {
  // P1, Q1..Qg, then P2..Pg.
  std::vector<Symbol> generators;
  // g cabling relators followed by g-1 defining relators.
  std::vector<Relator> relators;
  // Exponent of t under abelianization. Empty when parsed from text.
  std::map<Symbol, Int> degrees;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// Binomial x_i^{n_i} - m_i of the toric ideal, monomials as
// variable-index -> exponent with deg x_j = a_j.
struct ToricBinomial {
  std::map<int, Int> lhs;
  std::map<int, Int> rhs;
  Int degree = 0;

  friend bool operator==(const ToricBinomial&, const ToricBinomial&) = default;
};

enum class PresentationFormat { kText, kJson };

// Errors: kNotFree.
GroupPresentation BuildPresentation(const Arrangement& a);

// True when the degree map matches e_{i-1} / a_i and the coefficient
// identities hold; false on a degree-map mismatch.
// Errors: kUnbalanced naming the first relator whose signed degree sum is
// non-zero.
bool CheckAbelianization(const GroupPresentation& pr, const Arrangement& a);

// Errors: kNotFree; kNoRepresentation (defect signal).
std::vector<ToricBinomial> ToricBinomials(const Arrangement& a);

// "x1^2 - x0^3"
std::string ToString(const ToricBinomial& binomial);

std::string ExportPresentation(const GroupPresentation& pr, PresentationFormat format);

// Inverses of ExportPresentation. Errors: kParse.
GroupPresentation ParsePresentationText(std::string_view text);
GroupPresentation ParsePresentationJson(std::string_view text);

}  // namespace freeknot

#endif  // FREEKNOT_PRESENTATION_H_
