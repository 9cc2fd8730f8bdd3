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

#include "freeknot/error.h"

namespace freeknot {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kGcdNotOne:
      return "GcdNotOne";
    case ErrorCode::kNotMember:
      return "NotMember";
    case ErrorCode::kOverflow:
      return "Overflow";
    case ErrorCode::kNotPermutation:
      return "NotPermutation";
    case ErrorCode::kNotFree:
      return "NotFree";
    case ErrorCode::kTooManyGenerators:
      return "TooManyGenerators";
    case ErrorCode::kNotPolynomial:
      return "NotPolynomial";
    case ErrorCode::kEmptyFamily:
      return "EmptyFamily";
    case ErrorCode::kUnbalanced:
      return "Unbalanced";
    case ErrorCode::kNoRepresentation:
      return "NoRepresentation";
    case ErrorCode::kParse:
      return "Parse";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace freeknot
