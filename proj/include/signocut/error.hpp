// Copyright 2026 The signocut Authors
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

#ifndef SIGNOCUT_ERROR_HPP_
#define SIGNOCUT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace signocut {

enum class ErrorCode {
  kInvalidArgument,
  kDomain,              // evaluation outside the domain of a power term
  kUnbounded,           // a bound that must be finite is not
  kNumerical,           // LP residuals or factorization out of tolerance
  kDegenerate,          // degenerate input to a geometric construction
  kTrivialCut,          // every step length is infinite
  kSupermodularity,     // corner values are not supermodular
  kUnbranchable,        // every branching candidate is below the width floor
  kParse,               // instance text is malformed
  kIo,
  kInternal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace signocut

#endif  // SIGNOCUT_ERROR_HPP_
