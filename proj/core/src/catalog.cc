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

#include "freeknot/catalog.h"

#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "freeknot/arrangement.h"
#include "freeknot/knot_family.h"

namespace freeknot {
namespace {

// Depth-first over strictly increasing tuples; a candidate is kept only when
// it is not in the submonoid of the smaller ones already chosen, which is
// exactly minimality for sorted sets.
void EnumerateMinimalSets(std::vector<Int>& prefix, int count, Int max_generator,
                          std::vector<std::vector<Int>>& out) {
  if (static_cast<int>(prefix.size()) == count) {
    Int g = 0;
    for (Int v : prefix) g = Gcd(g, v);
    if (g == 1) out.push_back(prefix);
    return;
  }
  const SubmonoidMembership membership(prefix);
  const Int start = prefix.empty() ? 1 : prefix.back() + 1;
  for (Int v = start; v <= max_generator; ++v) {
    if (!prefix.empty() && membership.Contains(v)) continue;
    // 1 makes every later generator redundant.
    if (v == 1 && count > 1) continue;
    prefix.push_back(v);
    EnumerateMinimalSets(prefix, count, max_generator, out);
    prefix.pop_back();
  }
}

}  // namespace

CatalogRow SummarizeFamily(const Semigroup& s) {
  CatalogRow row;
  row.generators.assign(s.generators().begin(), s.generators().end());
  const std::vector<Arrangement> arrangements = FreeArrangements(s);
  row.arrangements = arrangements.size();
  if (arrangements.empty()) return row;
  row.conductor = Conductor(s);

  std::set<CablingSequence> keys;
  bool any_lspace = false, any_non_lspace = false;
  for (std::size_t k = 0; k < arrangements.size(); ++k) {
    const Arrangement& a = arrangements[k];
    const CablingSequence c = CablingSequenceOf(a);
    keys.insert(IsotopyKey(c));
    const SpliceLabels labels = SpliceLabelsOf(c);
    Int degree = 1;
    for (Int v : labels.v) degree = CheckedAdd(degree, v);
    for (Int w : labels.w) degree = CheckedSub(degree, w);
    if (k == 0) {
      row.alexander_degree = degree;
    } else if (degree != row.alexander_degree) {
      Fail(ErrorCode::kInternal, "Alexander degree differs across arrangements of " + s.ToString());
    }
    (IsLSpace(a) ? any_lspace : any_non_lspace) = true;
  }
  row.classes = keys.size();
  row.mixed_lspace = any_lspace && any_non_lspace;
  return row;
}

std::vector<CatalogRow> BuildCatalog(const CatalogBounds& bounds) {
  if (bounds.max_generator < 1) {
    Fail(ErrorCode::kInvalidArgument, "max generator must be >= 1");
  }
  if (bounds.max_count < 1 || bounds.max_count > kMaxCatalogGenerators) {
    Fail(ErrorCode::kInvalidArgument,
         "generator count bound must be in 1.." + std::to_string(kMaxCatalogGenerators));
  }
  std::vector<std::vector<Int>> candidates;
  for (int count = 1; count <= bounds.max_count; ++count) {
    std::vector<Int> prefix;
    EnumerateMinimalSets(prefix, count, bounds.max_generator, candidates);
  }

  std::vector<std::optional<CatalogRow>> slots(candidates.size());
  unsigned jobs = bounds.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : bounds.jobs;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < candidates.size(); i = next++) {
        CatalogRow row = SummarizeFamily(MakeSemigroup(candidates[i]));
        if (row.arrangements > 0) slots[i] = std::move(row);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = candidates.size();
    }
  };
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<CatalogRow> rows;
  for (auto& slot : slots) {
    if (slot) rows.push_back(std::move(*slot));
  }
  return rows;
}

std::string CatalogCsv(const std::vector<CatalogRow>& rows) {
  std::ostringstream out;
  out << "generators,arrangements,classes,conductor,alexander_degree,mixed_lspace\n";
  for (const CatalogRow& row : rows) {
    for (std::size_t i = 0; i < row.generators.size(); ++i) {
      if (i) out << ';';
      out << row.generators[i];
    }
    out << ',' << row.arrangements << ',' << row.classes << ',' << row.conductor << ','
        << row.alexander_degree << ',' << (row.mixed_lspace ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace freeknot
