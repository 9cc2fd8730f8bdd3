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

#include "freeknot/rational.h"

#include <charconv>

namespace freeknot {

Rational::Rational(Int num, Int den) {
  if (den == 0) Fail(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = CheckedNeg(num);
    den = CheckedNeg(den);
  }
  Int g = Gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator-() const { return Rational(CheckedNeg(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  Int g = Gcd(den_, o.den_);
  Int lhs = CheckedMul(num_, o.den_ / g);
  Int rhs = CheckedMul(o.num_, den_ / g);
  *this = Rational(CheckedAdd(lhs, rhs), CheckedMul(den_, o.den_ / g));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // Cross-cancel first to keep intermediates small.
  Int g1 = Gcd(num_, o.den_);
  Int g2 = Gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  *this = Rational(CheckedMul(num_ / g1, o.num_ / g2),
                   CheckedMul(den_ / g2, o.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) Fail(ErrorCode::kInvalidArgument, "division by zero rational");
  return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __extension__ using Wide = __int128;
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::ToString() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::Parse(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      Fail(ErrorCode::kParse, "malformed rational: '" + text + "'");
    }
    return v;
  };
  std::string_view view(text);
  auto slash = view.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(view));
  return Rational(parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.ToString(); }

}  // namespace freeknot
