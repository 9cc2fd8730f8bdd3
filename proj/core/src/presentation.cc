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
#include <charconv>
#include <sstream>

#include "json.hpp"

namespace freeknot {
namespace {

using Json = nlohmann::ordered_json;

Symbol P(int i) { return {Symbol::Kind::kP, i}; }
Symbol Q(int i) { return {Symbol::Kind::kQ, i}; }

void Append(Word& word, Symbol s, Int exponent) {
  if (exponent != 0) word.push_back({s, exponent});
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Split(std::string_view s, std::string_view sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + sep.size();
  }
}

Int ParseInt(std::string_view s) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    Fail(ErrorCode::kParse, "malformed integer '" + std::string(s) + "'");
  }
  return v;
}

std::string RenderSide(const Word& word, int sign) {
  std::string out;
  for (const Letter& l : word) {
    if ((l.exponent > 0) != (sign > 0)) continue;
    if (!out.empty()) out += " * ";
    out += l.symbol.ToString();
    Int e = l.exponent > 0 ? l.exponent : -l.exponent;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string RenderRelation(const Relator& r) {
  return RenderSide(r.word, +1) + " = " + RenderSide(r.word, -1);
}

void ParseSide(std::string_view side, int sign, Word& word) {
  side = Trim(side);
  if (side == "1") return;
  for (std::string_view factor : Split(side, "*")) {
    factor = Trim(factor);
    auto caret = factor.find('^');
    Int e = 1;
    if (caret != std::string_view::npos) {
      e = ParseInt(Trim(factor.substr(caret + 1)));
      factor = Trim(factor.substr(0, caret));
    }
    if (e <= 0) Fail(ErrorCode::kParse, "rendered exponents must be positive");
    word.push_back({Symbol::Parse(factor), sign * e});
  }
}

// The first g relators are cabling relators, the remaining g-1 defining.
void AssignKinds(std::vector<Relator>& relators) {
  const std::size_t g = (relators.size() + 1) / 2;
  for (std::size_t k = 0; k < relators.size(); ++k) {
    if (k < g) {
      relators[k].kind = RelatorKind::kCabling;
      relators[k].index = static_cast<int>(k) + 1;
    } else {
      relators[k].kind = RelatorKind::kDefining;
      relators[k].index = static_cast<int>(k - g) + 1;
    }
  }
}

std::string RelatorName(const Relator& r) {
  return (r.kind == RelatorKind::kCabling ? "R" : "D") + std::to_string(r.index);
}

}  // namespace

std::string Symbol::ToString() const {
  return (kind == Kind::kP ? "P" : "Q") + std::to_string(index);
}

Symbol Symbol::Parse(std::string_view text) {
  text = Trim(text);
  if (text.size() < 2 || (text[0] != 'P' && text[0] != 'Q')) {
    Fail(ErrorCode::kParse, "malformed generator symbol '" + std::string(text) + "'");
  }
  Int index = ParseInt(text.substr(1));
  if (index < 1) Fail(ErrorCode::kParse, "generator index must be >= 1");
  return {text[0] == 'P' ? Kind::kP : Kind::kQ, static_cast<int>(index)};
}

GroupPresentation BuildPresentation(const Arrangement& a) {
  const FreeCoefficients coeffs = ComputeFreeCoefficients(a);
  const int g = a.stages();
  GroupPresentation pr;
  pr.generators.push_back(P(1));
  for (int i = 1; i <= g; ++i) pr.generators.push_back(Q(i));
  for (int i = 2; i <= g; ++i) pr.generators.push_back(P(i));

  for (int i = 1; i <= g; ++i) {
    const Int n = a.multiplier(i);
    Relator r{.kind = RelatorKind::kCabling, .index = i, .word = {}};
    Append(r.word, Q(i), n);
    if (i >= 2) Append(r.word, Q(i - 1), CheckedNeg(CheckedMul(a.multiplier(i - 1), n)));
    Append(r.word, P(i), CheckedNeg(coeffs.b[i - 1]));
    pr.relators.push_back(std::move(r));
  }
  for (int i = 1; i < g; ++i) {
    const Int x = coeffs.x[i - 1];
    Relator d{.kind = RelatorKind::kDefining, .index = i, .word = {}};
    Append(d.word, P(i + 1), 1);
    Append(d.word, P(i), coeffs.y[i - 1]);
    if (i >= 2) Append(d.word, Q(i - 1), CheckedMul(a.multiplier(i - 1), x));
    Append(d.word, Q(i), CheckedNeg(x));
    pr.relators.push_back(std::move(d));
  }

  for (int i = 1; i <= std::max(g, 1); ++i) pr.degrees[P(i)] = a.gcd_at(i - 1);
  for (int i = 1; i <= g; ++i) pr.degrees[Q(i)] = a.generator(i);
  return pr;
}

bool CheckAbelianization(const GroupPresentation& pr, const Arrangement& a) {
  const int g = a.stages();
  std::map<Symbol, Int> expected;
  for (int i = 1; i <= std::max(g, 1); ++i) expected[P(i)] = a.gcd_at(i - 1);
  for (int i = 1; i <= g; ++i) expected[Q(i)] = a.generator(i);
  if (pr.degrees != expected) return false;

  for (std::size_t k = 0; k < pr.relators.size(); ++k) {
    Int sum = 0;
    for (const Letter& l : pr.relators[k].word) {
      auto it = pr.degrees.find(l.symbol);
      if (it == pr.degrees.end()) return false;
      sum = CheckedAdd(sum, CheckedMul(l.exponent, it->second));
    }
    if (sum != 0) {
      Fail(ErrorCode::kUnbalanced, "relator " + std::to_string(k + 1) + " (" +
                                       RelatorName(pr.relators[k]) +
                                       ") has signed degree " + std::to_string(sum));
    }
  }

  // n_i a_i = b_i e_{i-1} + n_{i-1} n_i a_{i-1} and
  // x_i a_i - y_i e_{i-1} - n_{i-1} x_i a_{i-1} = e_i, with a_{i-1} read as
  // deg Q_0 = 0 at i = 1.
  const FreeCoefficients c = ComputeFreeCoefficients(a);
  for (int i = 1; i <= g; ++i) {
    const Int n = a.multiplier(i), n_prev = a.multiplier(i - 1);
    const Int q_prev = i >= 2 ? a.generator(i - 1) : 0;
    const Int b = c.b[i - 1], x = c.x[i - 1], y = c.y[i - 1];
    Int lhs = CheckedMul(n, a.generator(i));
    Int rhs = CheckedAdd(CheckedMul(b, a.gcd_at(i - 1)), CheckedMul(CheckedMul(n_prev, n), q_prev));
    if (lhs != rhs) return false;
    Int bezout = CheckedSub(CheckedSub(CheckedMul(x, a.generator(i)), CheckedMul(y, a.gcd_at(i - 1))),
                            CheckedMul(CheckedMul(n_prev, x), q_prev));
    if (bezout != a.gcd_at(i)) return false;
  }
  return true;
}

std::vector<ToricBinomial> ToricBinomials(const Arrangement& a) {
  if (!IsFree(a)) {
    Fail(ErrorCode::kNotFree, "ToricBinomials: the semigroup is not free for arrangement " +
                                  a.ToString());
  }
  std::vector<ToricBinomial> out;
  const auto ordered = a.ordered();
  for (int i = 1; i <= a.stages(); ++i) {
    const Int target = CheckedMul(a.multiplier(i), a.generator(i));
    // reach[j][v]: v is representable over a_0..a_j.
    std::vector<std::vector<bool>> reach;
    for (int j = 0; j < i; ++j) {
      reach.push_back(MembershipTable(ordered.first(static_cast<std::size_t>(j) + 1), target));
    }
    if (!reach[i - 1][target]) {
      Fail(ErrorCode::kNoRepresentation, std::to_string(target) + " has no representation over " +
                                             a.ToString());
    }
    // Greedy from the largest index down: take the largest exponent on a_j
    // that leaves a remainder representable over a_0..a_{j-1}.
    ToricBinomial binomial;
    binomial.lhs[i] = a.multiplier(i);
    binomial.degree = target;
    Int rem = target;
    for (int j = i - 1; j >= 1; --j) {
      const Int aj = a.generator(j);
      for (Int c = rem / aj; c >= 0; --c) {
        if (reach[j - 1][rem - c * aj]) {
          if (c > 0) binomial.rhs[j] = c;
          rem -= c * aj;
          break;
        }
      }
    }
    if (rem % a.generator(0) != 0) {
      Fail(ErrorCode::kNoRepresentation, "greedy representation failed for " + std::to_string(target));
    }
    if (rem > 0) binomial.rhs[0] = rem / a.generator(0);

    Int rhs_degree = 0;
    for (auto [var, e] : binomial.rhs) rhs_degree = CheckedAdd(rhs_degree, CheckedMul(e, a.generator(var)));
    if (rhs_degree != target) {
      Fail(ErrorCode::kInternal, "toric binomial " + std::to_string(i) + " is not homogeneous");
    }
    out.push_back(std::move(binomial));
  }
  return out;
}

std::string ToString(const ToricBinomial& binomial) {
  auto monomial = [](const std::map<int, Int>& m) {
    if (m.empty()) return std::string("1");
    std::string s;
    // Highest variable index first, matching the greedy choice.
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(it->first);
      if (it->second != 1) s += "^" + std::to_string(it->second);
    }
    return s;
  };
  return monomial(binomial.lhs) + " - " + monomial(binomial.rhs);
}

std::string ExportPresentation(const GroupPresentation& pr, PresentationFormat format) {
  if (format == PresentationFormat::kText) {
    std::ostringstream out;
    out << "generators: ";
    for (std::size_t i = 0; i < pr.generators.size(); ++i) {
      if (i) out << ", ";
      out << pr.generators[i].ToString();
    }
    out << " | relations:";
    for (std::size_t k = 0; k < pr.relators.size(); ++k) {
      out << (k == 0 ? " " : "\n") << RenderRelation(pr.relators[k]);
    }
    out << "\n";
    return out.str();
  }

  Json doc;
  doc["schema"] = "presentation/1";
  Json gens = Json::array();
  for (const Symbol& s : pr.generators) gens.push_back(s.ToString());
  doc["generators"] = gens;
  Json relators = Json::array();
  for (const Relator& r : pr.relators) {
    Json word = Json::array();
    for (const Letter& l : r.word) word.push_back(Json::array({l.symbol.ToString(), l.exponent}));
    Json jr;
    jr["kind"] = r.kind == RelatorKind::kCabling ? "cabling" : "defining";
    jr["index"] = r.index;
    jr["word"] = word;
    relators.push_back(jr);
  }
  doc["relators"] = relators;
  Json degrees = Json::object();
  for (const Symbol& s : pr.generators) {
    auto it = pr.degrees.find(s);
    if (it != pr.degrees.end()) degrees[s.ToString()] = it->second;
  }
  doc["degrees"] = degrees;
  return doc.dump(2) + "\n";
}

GroupPresentation ParsePresentationText(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view line : Split(text, "\n")) {
    if (!Trim(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) Fail(ErrorCode::kParse, "empty presentation");
  std::string_view head = lines[0];
  constexpr std::string_view kGenTag = "generators:";
  constexpr std::string_view kRelTag = "| relations:";
  auto rel_pos = head.find(kRelTag);
  if (head.substr(0, kGenTag.size()) != kGenTag || rel_pos == std::string_view::npos) {
    Fail(ErrorCode::kParse, "missing 'generators: ... | relations:' header");
  }
  GroupPresentation pr;
  for (std::string_view g : Split(head.substr(kGenTag.size(), rel_pos - kGenTag.size()), ",")) {
    pr.generators.push_back(Symbol::Parse(g));
  }
  std::vector<std::string_view> relations;
  std::string_view first = Trim(head.substr(rel_pos + kRelTag.size()));
  if (!first.empty()) relations.push_back(first);
  for (std::size_t k = 1; k < lines.size(); ++k) relations.push_back(lines[k]);
  for (std::string_view rel : relations) {
    auto sides = Split(rel, "=");
    if (sides.size() != 2) Fail(ErrorCode::kParse, "relation needs exactly one '='");
    Relator r;
    ParseSide(sides[0], +1, r.word);
    ParseSide(sides[1], -1, r.word);
    pr.relators.push_back(std::move(r));
  }
  AssignKinds(pr.relators);
  return pr;
}

GroupPresentation ParsePresentationJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != "presentation/1") {
      Fail(ErrorCode::kParse, "unsupported presentation schema");
    }
    GroupPresentation pr;
    for (const auto& g : doc.at("generators")) pr.generators.push_back(Symbol::Parse(g.get<std::string>()));
    for (const auto& jr : doc.at("relators")) {
      Relator r;
      const std::string kind = jr.at("kind").get<std::string>();
      if (kind == "cabling") {
        r.kind = RelatorKind::kCabling;
      } else if (kind == "defining") {
        r.kind = RelatorKind::kDefining;
      } else {
        Fail(ErrorCode::kParse, "unknown relator kind '" + kind + "'");
      }
      r.index = jr.at("index").get<int>();
      for (const auto& letter : jr.at("word")) {
        r.word.push_back({Symbol::Parse(letter.at(0).get<std::string>()), letter.at(1).get<Int>()});
      }
      pr.relators.push_back(std::move(r));
    }
    for (const auto& [name, degree] : doc.at("degrees").items()) {
      pr.degrees[Symbol::Parse(name)] = degree.get<Int>();
    }
    return pr;
  } catch (const Json::exception& e) {
    Fail(ErrorCode::kParse, std::string("malformed presentation: ") + e.what());
  }
}

}  // namespace freeknot
