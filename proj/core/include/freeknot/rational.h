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

#ifndef FREEKNOT_RATIONAL_H_
#define FREEKNOT_RATIONAL_H_

#include <compare>
#include <ostream>
#include <string>

#include "freeknot/checked.h"

namespace freeknot {

// Exact rational in lowest terms with a positive denominator. Arithmetic is
// overflow-checked.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int value) : num_(value), den_(1) {}  // NOLINT: implicit by design of integer literals
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p/q" with the sign on the numerator, e.g. "-272/15" or "0/1".
  std::string ToString() const;

  // Accepts "p/q" or "p".
  static Rational Parse(const std::string& text);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace freeknot

#endif  // FREEKNOT_RATIONAL_H_
