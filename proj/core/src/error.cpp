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

#include "macroq/error.hpp"

namespace macroq {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonIntegrable: return "NonIntegrable";
    case ErrorKind::kDegreeOverflow: return "DegreeOverflow";
    case ErrorKind::kSingularMatrix: return "SingularMatrix";
    case ErrorKind::kHermiticityViolation: return "HermiticityViolation";
    case ErrorKind::kInvalidVariance: return "InvalidVariance";
    case ErrorKind::kInvalidParameter: return "InvalidParameter";
    case ErrorKind::kDegenerateState: return "DegenerateState";
    case ErrorKind::kWeightError: return "WeightError";
    case ErrorKind::kPurityOutOfRange: return "PurityOutOfRange";
    case ErrorKind::kInfeasibleGrid: return "InfeasibleGrid";
    case ErrorKind::kTailTooLarge: return "TailTooLarge";
    case ErrorKind::kNotAState: return "NotAState";
    case ErrorKind::kInvariantViolation: return "InvariantViolation";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace macroq
