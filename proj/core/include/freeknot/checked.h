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

#ifndef FREEKNOT_CHECKED_H_
#define FREEKNOT_CHECKED_H_

#include <cstdint>
#include <numeric>

#include "freeknot/error.h"

// Overflow-checked 64-bit integer arithmetic. Every identity in this library
// is exact, so wraparound is reported as ErrorCode::kOverflow.

namespace freeknot {

using Int = std::int64_t;

inline Int CheckedAdd(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) Fail(ErrorCode::kOverflow, "integer overflow in addition");
  return r;
}

inline Int CheckedSub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) Fail(ErrorCode::kOverflow, "integer overflow in subtraction");
  return r;
}

inline Int CheckedMul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) Fail(ErrorCode::kOverflow, "integer overflow in multiplication");
  return r;
}

inline Int CheckedNeg(Int a) { return CheckedSub(0, a); }

// Floor-mod into [0, m) for m > 0.
inline Int Mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int Gcd(Int a, Int b) { return std::gcd(a, b); }

}  // namespace freeknot

#endif  // FREEKNOT_CHECKED_H_
