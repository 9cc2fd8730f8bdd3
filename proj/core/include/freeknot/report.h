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

#ifndef FREEKNOT_REPORT_H_
#define FREEKNOT_REPORT_H_

#include <span>
#include <string>

#include "freeknot/arrangement.h"
#include "freeknot/checked.h"
#include "freeknot/presentation.h"
#include "freeknot/semigroup.h"

// End-to-end renderers behind the command-line tool. JSON output is an
// envelope {"schema", "input", "result", "warnings"}; see schemas/.

namespace freeknot {

enum class OutputFormat { kText, kJson };

// The arrangement named by `order`, or the lexicographically first free one
// when `order` is empty. Errors: kNotPermutation, kNotFree, kEmptyFamily.
Arrangement ResolveArrangement(const Semigroup& s, std::span<const Int> order);

std::string RenderAnalyze(std::span<const Int> raw, OutputFormat format);

std::string RenderInvariants(std::span<const Int> raw, std::span<const Int> order,
                             OutputFormat format);

// With `check`, runs CheckAbelianization and reports "abelianization: ok".
std::string RenderGroup(std::span<const Int> raw, std::span<const Int> order,
                        PresentationFormat format, bool check);

}  // namespace freeknot

#endif  // FREEKNOT_REPORT_H_
