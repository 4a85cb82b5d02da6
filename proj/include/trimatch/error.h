// Copyright 2026 The trimatch Authors
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

#ifndef TRIMATCH_ERROR_H_
#define TRIMATCH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace trimatch {

enum class ErrorCode {
  kRange,
  kParse,
  kInvalidMatching,
  kPrecondition,
  kNoSourceEdge,
  kSize,
  kUnsupportedColourCount,
  kNoShifts,
  kNotADecomposition,
  kNotDisjoint,
  kNotLatin,
  kGuardExceeded,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace trimatch

#endif  // TRIMATCH_ERROR_H_
