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

#ifndef FREEKNOT_SEMIGROUP_H_
#define FREEKNOT_SEMIGROUP_H_

#include <span>
#include <string>
#include <vector>

#include "freeknot/checked.h"
#include "freeknot/polynomial.h"

namespace freeknot {

// A numerical semigroup, held by its minimal generating set: non-empty,
// strictly increasing, gcd 1, and no generator in the submonoid of the
// others. Only MakeSemigroup can build one.
class Semigroup {
 public:
  std::span<const Int> generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  Int multiplicity() const { return generators_.front(); }
  Int max_generator() const { return generators_.back(); }

  // "<10, 15, 18>"
  std::string ToString() const;

  friend bool operator==(const Semigroup&, const Semigroup&) = default;

 private:
  friend Semigroup MakeSemigroup(std::span<const Int> raw);
  explicit Semigroup(std::vector<Int> generators) : generators_(std::move(generators)) {}

  std::vector<Int> generators_;
};

// Sorts, deduplicates and strips redundant generators.
// Errors: kEmptyInput, kInvalidArgument (value < 1), kGcdNotOne.
Semigroup MakeSemigroup(std::span<const Int> raw);
inline Semigroup MakeSemigroup(std::initializer_list<Int> raw) {
  return MakeSemigroup(std::span<const Int>(raw.begin(), raw.size()));
}

// Boolean DP table: entry k is true iff k is a non-negative integer
// combination of `gens`. `gens` may have any gcd.
std::vector<bool> MembershipTable(std::span<const Int> gens, Int limit);

// Membership by an (n+1)-entry DP table. This is the reference path.
bool Contains(const Semigroup& s, Int n);

// Membership in the submonoid generated by `gens` (gcd may exceed 1, empty
// list generates {0}). Uses least-element-per-residue tables rather than a
// table of size n, so it stays cheap for large n.
bool SubmonoidContains(std::span<const Int> gens, Int n);

// Precomputed form of SubmonoidContains for repeated queries against one
// generator list.
class SubmonoidMembership {
 public:
  explicit SubmonoidMembership(std::span<const Int> gens);
  bool Contains(Int n) const;

 private:
  Int gcd_ = 0;
  Int modulus_ = 1;
  std::vector<Int> minima_;
};

// For each residue r mod m, the least element of S congruent to r.
// Errors: kNotMember if m is not in S (or m < 1).
std::vector<Int> AperySet(const Semigroup& s, Int m);

// Least c with c + N contained in S; 0 exactly for <1>.
Int Conductor(const Semigroup& s);

// Number of gaps |N \ S|.
Int GenusDelta(const Semigroup& s);

// Sorted list of gaps.
std::vector<Int> Gaps(const Semigroup& s);

// sum_{s in S, s <= n} t^s.
IntPolynomial SeriesTruncated(const Semigroup& s, Int n);

}  // namespace freeknot

#endif  // FREEKNOT_SEMIGROUP_H_
