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

#ifndef MACROQ_TOOLS_CLI_HPP_
#define MACROQ_TOOLS_CLI_HPP_

#include <iosfwd>

#include "macroq/tools/verification.hpp"

namespace macroq::tools {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParseError = 2,
  kExitEngineError = 3,
  kExitPointsFailed = 4,
  kExitIoError = 5,
};

/// Entry point behind the macroq executable. Errors go to err as a single
/// line "error: <Kind>: <message>".
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const ReportFn& engine = report);

}  // namespace macroq::tools

#endif  // MACROQ_TOOLS_CLI_HPP_
