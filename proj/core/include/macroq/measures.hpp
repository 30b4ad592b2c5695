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

// Purity P, its decay rate dP/dt at t = 0 under unit-rate photon loss, the
// macroscopicity measure I = -dP/2, the positive variant I+ = (P - dP)/2 and
// the phase-space heterogeneity chi^2 = 2(1 - dP/P).
//
// With the loss channel written as a Fokker-Planck equation for W, the
// slope reduces to two phase-space integrals:
//   P  = pi * int W^2
//   dP = pi * (int W^2 - 1/4 int |grad W|^2)
// so chi^2 = (1/2) int |grad W|^2 / int W^2.

#ifndef MACROQ_MEASURES_HPP_
#define MACROQ_MEASURES_HPP_

#include <string>
#include <string_view>

#include "macroq/wigner_rep.hpp"

namespace macroq {

enum class Method { kClosedForm, kGrid, kFock };

std::string_view method_name(Method method);

struct MeasureReport {
  double purity = 0.0;
  double purity_decay = 0.0;
  double I = 0.0;
  double I_plus = 0.0;
  double chi2 = 0.0;
  Method method = Method::kClosedForm;
  std::string state_label;
};

/// Smallest purity for which chi^2 is defined.
inline constexpr double kMinPurity = 1e-12;
/// Purity may exceed one by at most this much (roundoff).
inline constexpr double kPurityExcess = 1e-9;

/// Assembles a report from int W^2 and int |grad W|^2. chi^2 is taken from
/// the gradient ratio and cross-checked against 2(1 - dP/P).
MeasureReport report_from_integrals(double w2_integral, double grad2_integral,
                                    Method method, std::string label);

/// Assembles a report from (P, dP) directly, as the number-basis route does.
MeasureReport report_from_purity(double purity, double purity_decay,
                                 Method method, std::string label);

double purity(const WignerRep& r);
double purity_decay(const WignerRep& r);
double measure_I(const WignerRep& r);
double measure_I_plus(const WignerRep& r);
double chi_squared(const WignerRep& r);

/// All five quantities from one overlap and one gradient-overlap pass.
MeasureReport report(const WignerRep& r);

}  // namespace macroq

#endif  // MACROQ_MEASURES_HPP_
