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

#ifndef FREEKNOT_CATALOG_H_
#define FREEKNOT_CATALOG_H_

#include <string>
#include <vector>

#include "freeknot/checked.h"
#include "freeknot/semigroup.h"

namespace freeknot {

inline constexpr int kMaxCatalogGenerators = 5;

struct CatalogBounds {
  Int max_generator = 0;  // every generator <= this
  int max_count = 0;      // 1..kMaxCatalogGenerators generators
  unsigned jobs = 1;      // worker threads; 0 picks hardware concurrency
};

struct CatalogRow {
  std::vector<Int> generators;
  std::size_t arrangements = 0;
  std::size_t classes = 0;
  Int conductor = 0;
  Int alexander_degree = 0;
  bool mixed_lspace = false;  // family has both L-space and non-L-space members

  friend bool operator==(const CatalogRow&, const CatalogRow&) = default;
};

// Catalog row for one semigroup, or an empty arrangement count if it is not
// free for any ordering. The Alexander degree comes from the splice labels
// (1 + sum v_i - sum w_i) so no polynomial is expanded.
CatalogRow SummarizeFamily(const Semigroup& s);

// Every minimal generating set within bounds that is free for at least one
// ordering, ordered by generator count and then lexicographically.
// Errors: kInvalidArgument on bad bounds.
std::vector<CatalogRow> BuildCatalog(const CatalogBounds& bounds);

// Header row plus one row per entry; generators are ';'-joined.
std::string CatalogCsv(const std::vector<CatalogRow>& rows);

}  // namespace freeknot

#endif  // FREEKNOT_CATALOG_H_
