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

#ifndef FREEKNOT_KNOT_FAMILY_H_
#define FREEKNOT_KNOT_FAMILY_H_

#include <compare>
#include <string>
#include <vector>

#include "freeknot/arrangement.h"
#include "freeknot/checked.h"
#include "freeknot/polynomial.h"
#include "freeknot/rational.h"
#include "freeknot/semigroup.h"

namespace freeknot {

struct CablePair {
  Int p = 1;
  Int q = 1;

  friend auto operator<=>(const CablePair&, const CablePair&) = default;
};

// The identity card of an iterated torus knot: a (p_g, q_g)-cable of ... of a
// (p_1, q_1)-torus knot. The empty sequence is the unknot.
class CablingSequence {
 public:
  CablingSequence() = default;
  // Errors: kInvalidArgument unless every pair is positive and coprime.
  explicit CablingSequence(std::vector<CablePair> pairs);

  std::span<const CablePair> pairs() const { return pairs_; }
  int stages() const { return static_cast<int>(pairs_.size()); }

  // "(6,5),(3,10)"; "unknot" when empty.
  std::string ToString() const;

  friend auto operator<=>(const CablingSequence&, const CablingSequence&) = default;

 private:
  std::vector<CablePair> pairs_;
};

// Splice diagram weights: w_0 = p_1...p_g, w_i = q_i p_{i+1}...p_g and
// v_i = q_i p_i...p_g.
struct SpliceLabels {
  std::vector<Int> w;  // w_0..w_g
  std::vector<Int> v;  // v_1..v_g

  friend bool operator==(const SpliceLabels&, const SpliceLabels&) = default;
};

// (n_i, a_i / e_i) for i = 1..g. Errors: kNotFree.
CablingSequence CablingSequenceOf(const Arrangement& a);

// Errors: kOverflow.
SpliceLabels SpliceLabelsOf(const CablingSequence& c);

// (1 - t) prod (1 - t^{v_i}) / prod (1 - t^{w_i}) by successive exact
// division. Errors: kNotPolynomial, kOverflow.
IntPolynomial AlexanderPolynomial(const CablingSequence& c);

// Compares the cabling-side polynomial with (1 - t) times the truncated
// generating series of `s`, computed from the membership table.
bool VerifyAlexanderPoincare(const Semigroup& s, const Arrangement& a);

// deg(Delta) / 2.
Int SeifertGenus(const CablingSequence& c);

// n_i a_i < a_{i+1} for 1 <= i <= g-1. Errors: kNotFree.
bool IsAlgebraic(const Arrangement& a);

// a_{i+1} >= e_i (c(S_i) + 1) for 1 <= i <= g-1. Errors: kNotFree.
bool IsLSpace(const Arrangement& a);

// sum_i -(p_i - 1/p_i)(q_i - 1/q_i) / 3.
Rational RhoAb(const CablingSequence& c);

// The root pair sorted as (min, max); later pairs untouched. Sequences with
// equal keys are isotopic.
CablingSequence IsotopyKey(const CablingSequence& c);

struct FamilyEntry {
  Arrangement arrangement;
  CablingSequence cabling;
  IntPolynomial alexander;
  Int genus = 0;
  Rational rho;
  bool algebraic = false;
  bool lspace = false;
  std::size_t class_index = 0;
};

struct IsotopyClass {
  CablingSequence key;
  std::vector<std::size_t> members;  // indices into FamilyReport::entries
  Rational rho;
};

// Two classes whose keys differ but whose rho_ab coincide: the implemented
// invariants neither prove nor refute isotopy.
struct UnresolvedPair {
  std::size_t first = 0;
  std::size_t second = 0;
};

struct FamilyReport {
  Semigroup semigroup;
  std::vector<FamilyEntry> entries;  // lexicographic arrangement order
  std::vector<IsotopyClass> classes;  // ordered by first member
  IntPolynomial alexander;            // shared by every entry
  Int conductor = 0;
  Int genus = 0;
  std::vector<UnresolvedPair> unresolved;
};

// Errors: kEmptyFamily if no ordering is free; kInternal if entries disagree
// on the Alexander polynomial.
FamilyReport ClassifyFamily(const Semigroup& s);

// Plain DOT digraph of the enlarged splice diagram. Nodes s1..sg are the
// splice components, b0..bg the boundary vertices, `k` the arrowhead.
std::string SpliceDiagramDot(const CablingSequence& c);

}  // namespace freeknot

#endif  // FREEKNOT_KNOT_FAMILY_H_
