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

#include "freeknot/polynomial.h"

#include <algorithm>

namespace freeknot {

IntPolynomial IntPolynomial::FromTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  IntPolynomial p;
  for (const Term& t : terms) {
    if (t.exponent < 0) Fail(ErrorCode::kInvalidArgument, "negative exponent");
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff = CheckedAdd(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

IntPolynomial IntPolynomial::FromDense(std::span<const Int> coeffs) {
  IntPolynomial p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) p.terms_.push_back({static_cast<Int>(k), coeffs[k]});
  }
  return p;
}

IntPolynomial IntPolynomial::Constant(Int c) { return Monomial(c, 0); }

IntPolynomial IntPolynomial::Monomial(Int coeff, Int exponent) {
  if (exponent < 0) Fail(ErrorCode::kInvalidArgument, "negative exponent");
  IntPolynomial p;
  if (coeff != 0) p.terms_.push_back({exponent, coeff});
  return p;
}

IntPolynomial IntPolynomial::OneMinusTPow(Int w) {
  if (w < 1) Fail(ErrorCode::kInvalidArgument, "1 - t^w requires w >= 1");
  return FromTerms({{0, 1}, {w, -1}});
}

Int IntPolynomial::Coefficient(Int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, Int e) { return t.exponent < e; });
  return (it != terms_.end() && it->exponent == exponent) ? it->coeff : 0;
}

Int IntPolynomial::EvaluateAtOne() const {
  Int sum = 0;
  for (const Term& t : terms_) sum = CheckedAdd(sum, t.coeff);
  return sum;
}

std::vector<Int> IntPolynomial::Dense() const {
  std::vector<Int> out(static_cast<std::size_t>(Degree() + 1), 0);
  for (const Term& t : terms_) out[static_cast<std::size_t>(t.exponent)] = t.coeff;
  return out;
}

IntPolynomial IntPolynomial::Truncated(Int max_degree) const {
  IntPolynomial p;
  for (const Term& t : terms_) {
    if (t.exponent > max_degree) break;
    p.terms_.push_back(t);
  }
  return p;
}

bool IntPolynomial::IsPalindromic() const {
  const Int d = Degree();
  for (std::size_t i = 0, j = terms_.size(); i < terms_.size(); ++i) {
    --j;
    if (terms_[i].coeff != terms_[j].coeff || terms_[i].exponent != d - terms_[j].exponent) {
      return false;
    }
  }
  return true;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial p = *this;
  for (Term& t : p.terms_) t.coeff = CheckedNeg(t.coeff);
  return p;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Term> all(a.terms_.begin(), a.terms_.end());
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return IntPolynomial::FromTerms(std::move(all));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Term> all;
  all.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& x : a.terms_) {
    for (const Term& y : b.terms_) {
      all.push_back({CheckedAdd(x.exponent, y.exponent), CheckedMul(x.coeff, y.coeff)});
    }
  }
  return IntPolynomial::FromTerms(std::move(all));
}

IntPolynomial IntPolynomial::DivideByOneMinusTPow(Int w) const {
  if (w < 1) Fail(ErrorCode::kInvalidArgument, "1 - t^w requires w >= 1");
  if (IsZero()) return {};
  const Int deg = Degree();
  if (deg < w) {
    Fail(ErrorCode::kNotPolynomial,
         "division by 1 - t^" + std::to_string(w) + " leaves a remainder");
  }
  std::vector<Int> p = Dense();
  const Int qdeg = deg - w;
  // p = (1 - t^w) q  =>  q_k = p_k + q_{k-w}.
  std::vector<Int> q(static_cast<std::size_t>(qdeg + 1), 0);
  for (Int k = 0; k <= qdeg; ++k) {
    Int v = p[k];
    if (k >= w) v = CheckedAdd(v, q[k - w]);
    q[k] = v;
  }
  // Remainder lives in degrees qdeg+1 .. deg: p_k must equal -q_{k-w} there.
  for (Int k = qdeg + 1; k <= deg; ++k) {
    Int expected = k - w >= 0 ? CheckedNeg(q[k - w]) : 0;
    if (p[k] != expected) {
      Fail(ErrorCode::kNotPolynomial,
           "division by 1 - t^" + std::to_string(w) + " leaves a remainder");
    }
  }
  return FromDense(q);
}

std::string IntPolynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    Int c = t.coeff;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    // |c| via unsigned to survive INT64_MIN.
    auto mag = c < 0 ? -static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
    if (t.exponent == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += "t";
      if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
    }
    first = false;
  }
  return out;
}

IntPolynomial SeriesQuotient(const IntPolynomial& num, const IntPolynomial& den,
                             Int max_degree) {
  const Int d0 = den.Coefficient(0);
  if (d0 != 1 && d0 != -1) {
    Fail(ErrorCode::kInvalidArgument, "series quotient needs a unit constant term");
  }
  if (max_degree < 0) return {};
  std::vector<Int> out(static_cast<std::size_t>(max_degree + 1), 0);
  for (const Term& t : num.terms()) {
    if (t.exponent > max_degree) break;
    out[t.exponent] = t.coeff;
  }
  // out_k = (num_k - sum_{j>=1} den_j out_{k-j}) / den_0
  for (Int k = 0; k <= max_degree; ++k) {
    Int acc = out[k];
    for (const Term& t : den.terms()) {
      if (t.exponent == 0) continue;
      if (t.exponent > k) break;
      acc = CheckedSub(acc, CheckedMul(t.coeff, out[k - t.exponent]));
    }
    out[k] = d0 == 1 ? acc : CheckedNeg(acc);
  }
  return IntPolynomial::FromDense(out);
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.ToString(); }

}  // namespace freeknot
