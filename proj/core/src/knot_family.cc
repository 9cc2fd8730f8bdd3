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

#include "freeknot/knot_family.h"

#include <map>

namespace freeknot {

CablingSequence::CablingSequence(std::vector<CablePair> pairs) : pairs_(std::move(pairs)) {
  for (const CablePair& pq : pairs_) {
    if (pq.p < 1 || pq.q < 1 || Gcd(pq.p, pq.q) != 1) {
      Fail(ErrorCode::kInvalidArgument, "cabling pair (" + std::to_string(pq.p) + "," +
                                            std::to_string(pq.q) +
                                            ") must be positive and coprime");
    }
  }
}

std::string CablingSequence::ToString() const {
  if (pairs_.empty()) return "unknot";
  std::string out;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(pairs_[i].p) + "," + std::to_string(pairs_[i].q) + ")";
  }
  return out;
}

CablingSequence CablingSequenceOf(const Arrangement& a) {
  if (!IsFree(a)) {
    Fail(ErrorCode::kNotFree, "CablingSequenceOf: the semigroup is not free for arrangement " +
                                  a.ToString());
  }
  std::vector<CablePair> pairs;
  for (int i = 1; i <= a.stages(); ++i) {
    pairs.push_back({a.multiplier(i), a.generator(i) / a.gcd_at(i)});
  }
  return CablingSequence(std::move(pairs));
}

SpliceLabels SpliceLabelsOf(const CablingSequence& c) {
  const auto pairs = c.pairs();
  const int g = c.stages();
  // tail[i] = p_{i+1} ... p_g over 1-based stage indices; tail[g] = 1.
  std::vector<Int> tail(static_cast<std::size_t>(g) + 1, 1);
  for (int i = g - 1; i >= 0; --i) tail[i] = CheckedMul(tail[i + 1], pairs[i].p);
  SpliceLabels out;
  out.w.push_back(tail[0]);
  for (int i = 1; i <= g; ++i) {
    out.w.push_back(CheckedMul(pairs[i - 1].q, tail[i]));
    out.v.push_back(CheckedMul(pairs[i - 1].q, tail[i - 1]));
  }
  return out;
}

IntPolynomial AlexanderPolynomial(const CablingSequence& c) {
  const SpliceLabels labels = SpliceLabelsOf(c);
  IntPolynomial num = IntPolynomial::OneMinusTPow(1);
  for (Int v : labels.v) num = num * IntPolynomial::OneMinusTPow(v);
  for (Int w : labels.w) num = num.DivideByOneMinusTPow(w);
  return num;
}

bool VerifyAlexanderPoincare(const Semigroup& s, const Arrangement& a) {
  const IntPolynomial delta = AlexanderPolynomial(CablingSequenceOf(a));
  const Int top = delta.Degree() + 1;
  const IntPolynomial series = SeriesTruncated(s, top);
  // The product carries a spurious -t^{top+1} from truncating the series.
  const IntPolynomial expected = (IntPolynomial::OneMinusTPow(1) * series).Truncated(top);
  return expected == delta;
}

Int SeifertGenus(const CablingSequence& c) { return AlexanderPolynomial(c).Degree() / 2; }

bool IsAlgebraic(const Arrangement& a) {
  if (!IsFree(a)) {
    Fail(ErrorCode::kNotFree, "IsAlgebraic: the semigroup is not free for arrangement " +
                                  a.ToString());
  }
  for (int i = 1; i < a.stages(); ++i) {
    if (CheckedMul(a.multiplier(i), a.generator(i)) >= a.generator(i + 1)) return false;
  }
  return true;
}

bool IsLSpace(const Arrangement& a) {
  if (!IsFree(a)) {
    Fail(ErrorCode::kNotFree, "IsLSpace: the semigroup is not free for arrangement " +
                                  a.ToString());
  }
  for (int i = 1; i < a.stages(); ++i) {
    const Int c = Conductor(TruncatedSemigroup(a, i));
    if (a.generator(i + 1) < CheckedMul(a.gcd_at(i), CheckedAdd(c, 1))) return false;
  }
  return true;
}

Rational RhoAb(const CablingSequence& c) {
  Rational total;
  for (const CablePair& pq : c.pairs()) {
    const Rational p(pq.p), q(pq.q);
    total -= (p - Rational(1, pq.p)) * (q - Rational(1, pq.q)) / Rational(3);
  }
  return total;
}

CablingSequence IsotopyKey(const CablingSequence& c) {
  std::vector<CablePair> pairs(c.pairs().begin(), c.pairs().end());
  if (!pairs.empty() && pairs[0].p > pairs[0].q) std::swap(pairs[0].p, pairs[0].q);
  return CablingSequence(std::move(pairs));
}

FamilyReport ClassifyFamily(const Semigroup& s) {
  std::vector<Arrangement> arrangements = FreeArrangements(s);
  if (arrangements.empty()) {
    Fail(ErrorCode::kEmptyFamily, s.ToString() + " is not free for any arrangement");
  }
  FamilyReport report{.semigroup = s, .entries = {}, .classes = {}, .alexander = {},
                      .conductor = 0, .genus = 0, .unresolved = {}};
  std::map<CablingSequence, std::size_t> class_of_key;
  for (Arrangement& a : arrangements) {
    const CablingSequence cabling = CablingSequenceOf(a);
    const IntPolynomial delta = AlexanderPolynomial(cabling);
    FamilyEntry entry{.arrangement = a,
                      .cabling = cabling,
                      .alexander = delta,
                      .genus = delta.Degree() / 2,
                      .rho = RhoAb(cabling),
                      .algebraic = IsAlgebraic(a),
                      .lspace = IsLSpace(a),
                      .class_index = 0};

    if (report.entries.empty()) {
      report.alexander = entry.alexander;
    } else if (entry.alexander != report.alexander) {
      Fail(ErrorCode::kInternal, "arrangements of " + s.ToString() +
                                     " disagree on the Alexander polynomial");
    }

    CablingSequence key = IsotopyKey(entry.cabling);
    auto [it, inserted] = class_of_key.try_emplace(key, report.classes.size());
    if (inserted) report.classes.push_back({.key = key, .members = {}, .rho = entry.rho});
    entry.class_index = it->second;
    report.classes[it->second].members.push_back(report.entries.size());
    report.entries.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < report.classes.size(); ++j) {
      if (report.classes[i].rho == report.classes[j].rho) report.unresolved.push_back({i, j});
    }
  }
  report.conductor = Conductor(s);
  report.genus = GenusDelta(s);
  return report;
}

}  // namespace freeknot
