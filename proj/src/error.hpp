// Copyright 2026 The fairaudit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRAUDIT_ERROR_HPP_
#define FAIRAUDIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fairaudit {

// Error categories. The numeric values are the CLI exit codes and the C API
// status codes, so they must stay in sync with include/fairaudit/fairaudit.h.
enum class ErrorCode : int {
  kInternal = 1,       // an invariant that a proof guarantees did not hold
  kInput = 2,          // malformed document, unknown name, bad argument
  kPrecondition = 3,   // operation precondition violated
  kBoundExceeded = 4,  // enumeration or search bound exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void ThrowInput(const std::string& message) {
  throw Error(ErrorCode::kInput, message);
}
[[noreturn]] inline void ThrowPrecondition(const std::string& message) {
  throw Error(ErrorCode::kPrecondition, message);
}
[[noreturn]] inline void ThrowBound(const std::string& message) {
  throw Error(ErrorCode::kBoundExceeded, message);
}
[[noreturn]] inline void ThrowInternal(const std::string& message) {
  throw Error(ErrorCode::kInternal, "internal invariant violated: " + message);
}

}  // namespace fairaudit

#endif  // FAIRAUDIT_ERROR_HPP_
