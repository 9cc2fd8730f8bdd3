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

#ifndef FREEKNOT_ERROR_H_
#define FREEKNOT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace freeknot {

enum class ErrorCode {
  kEmptyInput,
  kInvalidArgument,
  kGcdNotOne,
  kNotMember,
  kOverflow,
  kNotPermutation,
  kNotFree,
  kTooManyGenerators,
  kNotPolynomial,
  kEmptyFamily,
  kUnbalanced,
  kNoRepresentation,
  kParse,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception; `code()` is the stable
// discriminator, `what()` carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace freeknot

#endif  // FREEKNOT_ERROR_H_
