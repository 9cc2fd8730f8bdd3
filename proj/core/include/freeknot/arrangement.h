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

#ifndef FREEKNOT_ARRANGEMENT_H_
#define FREEKNOT_ARRANGEMENT_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "freeknot/checked.h"
#include "freeknot/polynomial.h"
#include "freeknot/semigroup.h"

namespace freeknot {

// Largest generator count accepted by FreeArrangements; (g+1)! orderings are
// enumerated.
inline constexpr std::size_t kMaxArrangementGenerators = 8;

// An ordering a_0..a_g of a semigroup's generators with its gcd tower
// e_i = gcd(a_0..a_i) and multipliers n_i = e_{i-1}/e_i. Indices follow the
// usual convention: generator(0..g), gcd_at(0..g), multiplier(1..g), with
// multiplier(0) == 1 so n_{i-1} is defined at i = 1.
class Arrangement {
 public:
  std::span<const Int> ordered() const { return ordered_; }
  std::span<const Int> tower() const { return tower_; }
  // n_1..n_g
  std::span<const Int> multipliers() const { return multipliers_; }

  // g, the number of cabling stages.
  int stages() const { return static_cast<int>(ordered_.size()) - 1; }
  Int generator(int i) const { return ordered_[i]; }
  Int gcd_at(int i) const { return tower_[i]; }
  Int multiplier(int i) const { return i == 0 ? 1 : multipliers_[i - 1]; }

  // "(18, 15, 10)"
  std::string ToString() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  friend Arrangement BuildArrangement(const Semigroup& s, std::span<const Int> order);
  Arrangement() = default;

  std::vector<Int> ordered_;
  std::vector<Int> tower_;
  std::vector<Int> multipliers_;
};

struct FreeCoefficients {
  std::vector<Int> b;  // b_1..b_g, signed
  std::vector<Int> x;  // 1 <= x_i <= n_i
  std::vector<Int> y;  // x_i b_i = y_i n_i + 1
};

// Errors: kNotPermutation if `order` is not a permutation of the generators.
Arrangement BuildArrangement(const Semigroup& s, std::span<const Int> order);
inline Arrangement BuildArrangement(const Semigroup& s, std::initializer_list<Int> order) {
  return BuildArrangement(s, std::span<const Int>(order.begin(), order.size()));
}

// n_i a_i lies in <a_0, ..., a_{i-1}> for every i = 1..g.
bool IsFree(const Arrangement& a);

// Every free ordering, in lexicographic order of the ordered generators.
// Errors: kTooManyGenerators above kMaxArrangementGenerators.
std::vector<Arrangement> FreeArrangements(const Semigroup& s);

// S_i = <a_0, ..., a_i> / e_i. Errors: kNotFree, kInvalidArgument (index).
Semigroup TruncatedSemigroup(const Arrangement& a, int i);

// sum_{i=1}^g (n_i - 1) a_i - a_0 + 1. Errors: kNotFree.
Int DelormeConductor(const Arrangement& a);

// Errors: kNotFree; kInternal if gcd(b_i, n_i) != 1.
FreeCoefficients ComputeFreeCoefficients(const Arrangement& a);

// (prod_{i=1}^g (1 - t^{n_i a_i}), prod_{i=0}^g (1 - t^{a_i})). Errors: kNotFree.
std::pair<IntPolynomial, IntPolynomial> PoincareRational(const Arrangement& a);

}  // namespace freeknot

#endif  // FREEKNOT_ARRANGEMENT_H_
