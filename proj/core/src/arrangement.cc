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

namespace freeknot {
namespace {

void RequireFree(const Arrangement& a, const char* op) {
  if (!IsFree(a)) {
    Fail(ErrorCode::kNotFree, std::string(op) + ": the semigroup is not free for arrangement " +
                                  a.ToString());
  }
}

// (g, x) with g = gcd(a, b) = x*a + y*b; y discarded.
std::pair<Int, Int> ExtendedGcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return {old_r, old_s};
}

}  // namespace

std::string Arrangement::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < ordered_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(ordered_[i]);
  }
  return out + ")";
}

Arrangement BuildArrangement(const Semigroup& s, std::span<const Int> order) {
  std::vector<Int> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), s.generators().begin(), s.generators().end())) {
    Fail(ErrorCode::kNotPermutation, "arrangement is not a permutation of " + s.ToString());
  }
  Arrangement a;
  a.ordered_.assign(order.begin(), order.end());
  a.tower_.push_back(a.ordered_.front());
  for (std::size_t i = 1; i < a.ordered_.size(); ++i) {
    a.tower_.push_back(Gcd(a.tower_.back(), a.ordered_[i]));
    a.multipliers_.push_back(a.tower_[i - 1] / a.tower_[i]);
  }
  return a;
}

bool IsFree(const Arrangement& a) {
  const auto ordered = a.ordered();
  for (int i = 1; i <= a.stages(); ++i) {
    Int target = CheckedMul(a.multiplier(i), a.generator(i));
    if (!SubmonoidContains(ordered.first(static_cast<std::size_t>(i)), target)) return false;
  }
  return true;
}

std::vector<Arrangement> FreeArrangements(const Semigroup& s) {
  if (s.size() > kMaxArrangementGenerators) {
    Fail(ErrorCode::kTooManyGenerators,
         std::to_string(s.size()) + " generators exceeds the limit of " +
             std::to_string(kMaxArrangementGenerators));
  }
  std::vector<Int> order(s.generators().begin(), s.generators().end());
  std::vector<Arrangement> out;
  do {
    Arrangement a = BuildArrangement(s, order);
    if (IsFree(a)) out.push_back(std::move(a));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Semigroup TruncatedSemigroup(const Arrangement& a, int i) {
  RequireFree(a, "TruncatedSemigroup");
  if (i < 0 || i > a.stages()) {
    Fail(ErrorCode::kInvalidArgument, "truncation index " + std::to_string(i) + " out of range");
  }
  std::vector<Int> gens;
  for (int j = 0; j <= i; ++j) gens.push_back(a.generator(j) / a.gcd_at(i));
  return MakeSemigroup(gens);
}

Int DelormeConductor(const Arrangement& a) {
  RequireFree(a, "DelormeConductor");
  Int c = 1 - a.generator(0);
  for (int i = 1; i <= a.stages(); ++i) {
    c = CheckedAdd(c, CheckedMul(a.multiplier(i) - 1, a.generator(i)));
  }
  return c;
}

FreeCoefficients ComputeFreeCoefficients(const Arrangement& a) {
  RequireFree(a, "ComputeFreeCoefficients");
  FreeCoefficients out;
  for (int i = 1; i <= a.stages(); ++i) {
    const Int n = a.multiplier(i);
    Int b = a.generator(i) / a.gcd_at(i);
    if (i >= 2) {
      Int prev = a.generator(i - 1) / a.gcd_at(i - 1);
      b = CheckedSub(b, CheckedMul(CheckedMul(n, a.multiplier(i - 1)), prev));
    }
    auto [g, inv] = ExtendedGcd(Mod(b, n), n);
    if (n > 1 && g != 1) {
      Fail(ErrorCode::kInternal, "gcd(b_" + std::to_string(i) + ", n_" + std::to_string(i) +
                                     ") != 1 for arrangement " + a.ToString());
    }
    // Least positive representative in [1, n].
    Int x = n == 1 ? 1 : Mod(inv, n);
    if (x == 0) x = n;
    Int y = CheckedSub(CheckedMul(x, b), 1) / n;
    out.b.push_back(b);
    out.x.push_back(x);
    out.y.push_back(y);
  }
  return out;
}

std::pair<IntPolynomial, IntPolynomial> PoincareRational(const Arrangement& a) {
  RequireFree(a, "PoincareRational");
  IntPolynomial num = IntPolynomial::Constant(1);
  IntPolynomial den = IntPolynomial::OneMinusTPow(a.generator(0));
  for (int i = 1; i <= a.stages(); ++i) {
    num = num * IntPolynomial::OneMinusTPow(CheckedMul(a.multiplier(i), a.generator(i)));
    den = den * IntPolynomial::OneMinusTPow(a.generator(i));
  }
  return {num, den};
}

}  // namespace freeknot
