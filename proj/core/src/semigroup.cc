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

#include "freeknot/semigroup.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace freeknot {
namespace {

// Least element in each residue class mod m of the monoid generated by gens,
// via Dijkstra over Z/m. kUnreachable marks residues the monoid never hits.
constexpr Int kUnreachable = std::numeric_limits<Int>::max();

std::vector<Int> ResidueMinima(std::span<const Int> gens, Int m) {
  std::vector<Int> dist(static_cast<std::size_t>(m), kUnreachable);
  using Entry = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[0] = 0;
  heap.push({0, 0});
  while (!heap.empty()) {
    auto [value, residue] = heap.top();
    heap.pop();
    if (value != dist[residue]) continue;
    for (Int a : gens) {
      Int next = CheckedAdd(value, a);
      Int r = (residue + a) % m;
      if (next < dist[r]) {
        dist[r] = next;
        heap.push({next, r});
      }
    }
  }
  return dist;
}

}  // namespace

std::string Semigroup::ToString() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(generators_[i]);
  }
  return out + ">";
}

Semigroup MakeSemigroup(std::span<const Int> raw) {
  if (raw.empty()) Fail(ErrorCode::kEmptyInput, "empty generating set");
  Int g = 0;
  for (Int v : raw) {
    if (v < 1) Fail(ErrorCode::kInvalidArgument, "generators must be >= 1, got " + std::to_string(v));
    g = Gcd(g, v);
  }
  if (g != 1) Fail(ErrorCode::kGcdNotOne, "gcd of generators is " + std::to_string(g));

  std::vector<Int> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // A generator can only be a combination of strictly smaller ones.
  std::vector<Int> kept;
  for (Int v : sorted) {
    if (!SubmonoidContains(kept, v)) kept.push_back(v);
  }
  return Semigroup(std::move(kept));
}

std::vector<bool> MembershipTable(std::span<const Int> gens, Int limit) {
  if (limit < 0) return {};
  std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
  reach[0] = true;
  for (Int k = 1; k <= limit; ++k) {
    for (Int a : gens) {
      if (a <= k && reach[k - a]) {
        reach[k] = true;
        break;
      }
    }
  }
  return reach;
}

bool Contains(const Semigroup& s, Int n) {
  if (n < 0) return false;
  return MembershipTable(s.generators(), n)[static_cast<std::size_t>(n)];
}

SubmonoidMembership::SubmonoidMembership(std::span<const Int> gens) {
  for (Int a : gens) {
    if (a < 1) Fail(ErrorCode::kInvalidArgument, "submonoid generators must be >= 1");
    gcd_ = Gcd(gcd_, a);
  }
  if (gcd_ == 0) return;
  std::vector<Int> reduced;
  reduced.reserve(gens.size());
  for (Int a : gens) reduced.push_back(a / gcd_);
  modulus_ = *std::min_element(reduced.begin(), reduced.end());
  minima_ = ResidueMinima(reduced, modulus_);
}

bool SubmonoidMembership::Contains(Int n) const {
  if (n < 0) return false;
  if (n == 0) return true;
  if (gcd_ == 0 || n % gcd_ != 0) return false;
  const Int target = n / gcd_;
  const Int least = minima_[target % modulus_];
  return least != kUnreachable && target >= least;
}

bool SubmonoidContains(std::span<const Int> gens, Int n) {
  if (n <= 0) return n == 0;
  return SubmonoidMembership(gens).Contains(n);
}

std::vector<Int> AperySet(const Semigroup& s, Int m) {
  if (m < 1 || !SubmonoidContains(s.generators(), m)) {
    Fail(ErrorCode::kNotMember, std::to_string(m) + " is not an element of " + s.ToString());
  }
  return ResidueMinima(s.generators(), m);
}

Int Conductor(const Semigroup& s) {
  const Int m = s.multiplicity();
  const std::vector<Int> apery = AperySet(s, m);
  return *std::max_element(apery.begin(), apery.end()) - m + 1;
}

Int GenusDelta(const Semigroup& s) {
  // Selmer: the gaps congruent to r mod m are r, r+m, ..., w_r - m.
  const Int m = s.multiplicity();
  Int total = 0;
  for (Int w : AperySet(s, m)) total = CheckedAdd(total, w / m);
  return total;
}

std::vector<Int> Gaps(const Semigroup& s) {
  const Int c = Conductor(s);
  std::vector<bool> reach = MembershipTable(s.generators(), c);
  std::vector<Int> gaps;
  for (Int k = 0; k < c; ++k) {
    if (!reach[k]) gaps.push_back(k);
  }
  return gaps;
}

IntPolynomial SeriesTruncated(const Semigroup& s, Int n) {
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "series truncation degree must be >= 0");
  std::vector<bool> reach = MembershipTable(s.generators(), n);
  std::vector<Term> terms;
  for (Int k = 0; k <= n; ++k) {
    if (reach[k]) terms.push_back({k, 1});
  }
  return IntPolynomial::FromTerms(std::move(terms));
}

}  // namespace freeknot
