// Copyright 2026 The macroq Authors
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

#ifndef MACROQ_ERROR_HPP_
#define MACROQ_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace macroq {

/// Failure categories raised by the engine, the state constructors and the
/// oracles. The CLI maps each onto an exit code and prints the name.
enum class ErrorKind {
  kNonIntegrable,
  kDegreeOverflow,
  kSingularMatrix,
  kHermiticityViolation,
  kInvalidVariance,
  kInvalidParameter,
  kDegenerateState,
  kWeightError,
  kPurityOutOfRange,
  kInfeasibleGrid,
  kTailTooLarge,
  kNotAState,
  kInvariantViolation,
  kParseError,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace macroq

#endif  // MACROQ_ERROR_HPP_
