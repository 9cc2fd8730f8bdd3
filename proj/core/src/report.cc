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

#include "freeknot/report.h"

#include <algorithm>
#include <sstream>

#include "freeknot/knot_family.h"
#include "json.hpp"

namespace freeknot {
namespace {

using Json = nlohmann::ordered_json;

Json IntArray(std::span<const Int> values) {
  Json out = Json::array();
  for (Int v : values) out.push_back(v);
  return out;
}

Json CablingJson(const CablingSequence& c) {
  Json out = Json::array();
  for (const CablePair& pq : c.pairs()) out.push_back(Json::array({pq.p, pq.q}));
  return out;
}

std::string JoinInts(std::span<const Int> values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

const char* Bool(bool b) { return b ? "true" : "false"; }

std::vector<std::string> NormalizationWarnings(std::span<const Int> raw, const Semigroup& s) {
  std::vector<Int> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::string> warnings;
  if (!std::equal(sorted.begin(), sorted.end(), s.generators().begin(), s.generators().end())) {
    warnings.push_back("input normalized to minimal generating set " + s.ToString());
  }
  return warnings;
}

std::string Envelope(const char* schema, std::span<const Int> raw, Json input_extra, Json result,
                     const std::vector<std::string>& warnings) {
  Json doc;
  doc["schema"] = schema;
  Json input;
  input["generators"] = IntArray(raw);
  for (auto& [k, v] : input_extra.items()) input[k] = v;
  doc["input"] = input;
  doc["result"] = std::move(result);
  doc["warnings"] = warnings;
  return doc.dump(2) + "\n";
}

Json ToricJson(const ToricBinomial& b) {
  auto monomial = [](const std::map<int, Int>& m) {
    Json out = Json::object();
    for (auto [var, e] : m) out[std::to_string(var)] = e;
    return out;
  };
  Json out;
  out["lhs"] = monomial(b.lhs);
  out["rhs"] = monomial(b.rhs);
  out["degree"] = b.degree;
  out["text"] = ToString(b);
  return out;
}

}  // namespace

Arrangement ResolveArrangement(const Semigroup& s, std::span<const Int> order) {
  if (order.empty()) {
    std::vector<Arrangement> all = FreeArrangements(s);
    if (all.empty()) {
      Fail(ErrorCode::kEmptyFamily, s.ToString() + " is not free for any arrangement");
    }
    return all.front();
  }
  Arrangement a = BuildArrangement(s, order);
  if (!IsFree(a)) {
    Fail(ErrorCode::kNotFree, s.ToString() + " is not free for arrangement " + a.ToString());
  }
  return a;
}

std::string RenderAnalyze(std::span<const Int> raw, OutputFormat format) {
  const Semigroup s = MakeSemigroup(raw);
  const FamilyReport report = ClassifyFamily(s);
  std::vector<std::string> warnings = NormalizationWarnings(raw, s);
  for (const UnresolvedPair& u : report.unresolved) {
    warnings.push_back("classes " + std::to_string(u.first) + " and " + std::to_string(u.second) +
                       " share rho_ab; unresolved by implemented invariants");
  }
  const std::vector<Int> gaps = Gaps(s);

  if (format == OutputFormat::kJson) {
    Json result;
    result["semigroup"] = IntArray(s.generators());
    result["conductor"] = report.conductor;
    result["genus"] = report.genus;
    result["gaps"] = IntArray(gaps);
    result["arrangement_count"] = report.entries.size();
    result["class_count"] = report.classes.size();
    result["alexander"] = report.alexander.ToString();
    result["alexander_degree"] = report.alexander.Degree();
    Json entries = Json::array();
    for (const FamilyEntry& e : report.entries) {
      Json je;
      je["arrangement"] = IntArray(e.arrangement.ordered());
      je["cabling"] = CablingJson(e.cabling);
      je["genus"] = e.genus;
      je["rho_ab"] = e.rho.ToString();
      je["algebraic"] = e.algebraic;
      je["lspace"] = e.lspace;
      je["class"] = e.class_index;
      entries.push_back(je);
    }
    result["entries"] = entries;
    Json classes = Json::array();
    for (const IsotopyClass& c : report.classes) {
      Json jc;
      jc["key"] = CablingJson(c.key);
      jc["members"] = c.members;
      jc["rho_ab"] = c.rho.ToString();
      classes.push_back(jc);
    }
    result["classes"] = classes;
    Json unresolved = Json::array();
    for (const UnresolvedPair& u : report.unresolved) unresolved.push_back(Json::array({u.first, u.second}));
    result["unresolved"] = unresolved;
    return Envelope("freeknot.analyze/1", raw, Json::object(), result, warnings);
  }

  std::ostringstream out;
  out << "semigroup: " << s.ToString() << "\n";
  out << "conductor: " << report.conductor << "\n";
  out << "genus: " << report.genus << "\n";
  out << "gaps: " << JoinInts(gaps, ", ") << "\n";
  out << "free arrangements: " << report.entries.size() << "\n";
  out << "isotopy classes: " << report.classes.size() << "\n";
  out << "alexander: " << report.alexander.ToString() << "\n";
  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    const IsotopyClass& c = report.classes[k];
    out << "class " << k << ": key " << c.key.ToString() << ", rho_ab " << c.rho << "\n";
    for (std::size_t m : c.members) {
      const FamilyEntry& e = report.entries[m];
      out << "  " << e.arrangement.ToString() << " cabling " << e.cabling.ToString()
          << " algebraic=" << Bool(e.algebraic) << " lspace=" << Bool(e.lspace) << "\n";
    }
  }
  for (const std::string& w : warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string RenderInvariants(std::span<const Int> raw, std::span<const Int> order,
                             OutputFormat format) {
  const Semigroup s = MakeSemigroup(raw);
  const Arrangement a = ResolveArrangement(s, order);
  const CablingSequence c = CablingSequenceOf(a);
  const SpliceLabels labels = SpliceLabelsOf(c);
  const IntPolynomial delta = AlexanderPolynomial(c);
  const Int genus = delta.Degree() / 2;
  const Rational rho = RhoAb(c);
  const bool algebraic = IsAlgebraic(a);
  const bool lspace = IsLSpace(a);
  const std::vector<std::string> warnings = NormalizationWarnings(raw, s);

  if (format == OutputFormat::kJson) {
    Json result;
    result["semigroup"] = IntArray(s.generators());
    result["arrangement"] = IntArray(a.ordered());
    result["tower"] = IntArray(a.tower());
    result["multipliers"] = IntArray(a.multipliers());
    result["cabling"] = CablingJson(c);
    result["splice_w"] = IntArray(labels.w);
    result["splice_v"] = IntArray(labels.v);
    result["alexander"] = delta.ToString();
    result["alexander_degree"] = delta.Degree();
    result["genus"] = genus;
    result["rho_ab"] = rho.ToString();
    result["algebraic"] = algebraic;
    result["lspace"] = lspace;
    Json extra;
    extra["arrangement"] = IntArray(order);
    return Envelope("freeknot.invariants/1", raw, extra, result, warnings);
  }

  std::ostringstream out;
  out << "semigroup: " << s.ToString() << "\n";
  out << "arrangement: " << a.ToString() << "\n";
  out << "cabling: " << c.ToString() << "\n";
  out << "splice w: " << JoinInts(labels.w, ", ") << "\n";
  out << "splice v: " << JoinInts(labels.v, ", ") << "\n";
  out << "alexander: " << delta.ToString() << "\n";
  out << "genus: " << genus << "\n";
  out << "rho_ab: " << rho << "\n";
  out << "algebraic: " << Bool(algebraic) << "\n";
  out << "lspace: " << Bool(lspace) << "\n";
  for (const std::string& w : warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string RenderGroup(std::span<const Int> raw, std::span<const Int> order,
                        PresentationFormat format, bool check) {
  const Semigroup s = MakeSemigroup(raw);
  const Arrangement a = ResolveArrangement(s, order);
  const GroupPresentation pr = BuildPresentation(a);
  const std::vector<ToricBinomial> binomials = ToricBinomials(a);
  const bool ok = check ? CheckAbelianization(pr, a) : false;

  if (format == PresentationFormat::kJson) {
    Json result;
    result["arrangement"] = IntArray(a.ordered());
    result["presentation"] = Json::parse(ExportPresentation(pr, PresentationFormat::kJson));
    Json toric = Json::array();
    for (const ToricBinomial& b : binomials) toric.push_back(ToricJson(b));
    result["toric_binomials"] = toric;
    if (check) result["abelianization"] = ok ? "ok" : "mismatch";
    Json extra;
    extra["arrangement"] = IntArray(order);
    return Envelope("freeknot.group/1", raw, extra, result, NormalizationWarnings(raw, s));
  }

  std::ostringstream out;
  out << "arrangement: " << a.ToString() << "\n";
  out << ExportPresentation(pr, PresentationFormat::kText);
  out << "toric binomials:\n";
  for (const ToricBinomial& b : binomials) out << "  " << ToString(b) << "\n";
  if (check) out << "abelianization: " << (ok ? "ok" : "mismatch") << "\n";
  return out.str();
}

}  // namespace freeknot
