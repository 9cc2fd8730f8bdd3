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

#ifndef FREEKNOT_POLYNOMIAL_H_
#define FREEKNOT_POLYNOMIAL_H_

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "freeknot/checked.h"

namespace freeknot {

struct Term {
  Int exponent = 0;
  Int coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse univariate polynomial in t with exact 64-bit integer coefficients.
// Terms are kept sorted by ascending exponent and never store a zero
// coefficient, so structural equality is mathematical equality.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  // Combines like terms and drops zeros; exponents must be non-negative.
  static IntPolynomial FromTerms(std::vector<Term> terms);
  // coeffs[k] is the coefficient of t^k.
  static IntPolynomial FromDense(std::span<const Int> coeffs);
  static IntPolynomial Constant(Int c);
  static IntPolynomial Monomial(Int coeff, Int exponent);
  // 1 - t^w, the cyclotomic-style factor that appears throughout.
  static IntPolynomial OneMinusTPow(Int w);

  std::span<const Term> terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  Int Degree() const { return terms_.empty() ? -1 : terms_.back().exponent; }
  Int Coefficient(Int exponent) const;
  Int EvaluateAtOne() const;
  std::vector<Int> Dense() const;

  // Drops every term with exponent > max_degree.
  IntPolynomial Truncated(Int max_degree) const;
  // t^deg * p(1/t) == p(t).
  bool IsPalindromic() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Exact quotient by (1 - t^w). Throws kNotPolynomial when the remainder is
  // non-zero.
  IntPolynomial DivideByOneMinusTPow(Int w) const;

  // Sparse ascending rendering: "1 - t + t^2", "0" for the zero polynomial.
  std::string ToString() const;

 private:
  std::vector<Term> terms_;
};

// Power-series expansion of num/den through t^max_degree. The constant term
// of den must be +1 or -1.
IntPolynomial SeriesQuotient(const IntPolynomial& num, const IntPolynomial& den,
                             Int max_degree);

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace freeknot

#endif  // FREEKNOT_POLYNOMIAL_H_
