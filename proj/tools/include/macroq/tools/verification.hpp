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

#ifndef MACROQ_TOOLS_VERIFICATION_HPP_
#define MACROQ_TOOLS_VERIFICATION_HPP_

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "macroq/measures.hpp"
#include "macroq/wigner_rep.hpp"

namespace macroq::tools {

enum class VerifyLevel { kQuick, kFull };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// The closed-form report under test. Swappable so a deliberately broken
/// engine can be shown to fail the suite.
using ReportFn = std::function<MeasureReport(const WignerRep&)>;

/// Invariant and acceptance checks. kQuick skips everything that needs the
/// number-basis oracle.
std::vector<CheckResult> run_verification(VerifyLevel level,
                                          const ReportFn& engine = report);

void print_check_table(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace macroq::tools

#endif  // MACROQ_TOOLS_VERIFICATION_HPP_
