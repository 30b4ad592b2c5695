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

#include "macroq/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "macroq/error.hpp"

namespace macroq {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRouteTol = 1e-10;

void check_purity(double purity, const std::string& label) {
  if (!(purity > 0.0 && purity <= 1.0 + kPurityExcess)) {
    throw Error(ErrorKind::kPurityOutOfRange,
                label + ": purity " + std::to_string(purity));
  }
  if (purity < kMinPurity) {
    throw Error(ErrorKind::kDegenerateState,
                label + ": purity below " + std::to_string(kMinPurity));
  }
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kClosedForm: return "closed_form";
    case Method::kGrid: return "grid";
    case Method::kFock: return "fock";
  }
  return "unknown";
}

MeasureReport report_from_integrals(double w2_integral, double grad2_integral,
                                    Method method, std::string label) {
  MeasureReport out;
  out.purity = kPi * w2_integral;
  check_purity(out.purity, label);
  out.purity_decay = kPi * (w2_integral - 0.25 * grad2_integral);
  out.I = -0.5 * out.purity_decay;
  out.I_plus = 0.5 * (out.purity - out.purity_decay);
  out.chi2 = 0.5 * grad2_integral / w2_integral;
  const double via_purity = 2.0 * (1.0 - out.purity_decay / out.purity);
  if (std::abs(via_purity - out.chi2) > kRouteTol * std::max(1.0, out.chi2)) {
    throw Error(ErrorKind::kInvariantViolation,
                label + ": chi2 routes disagree");
  }
  if (out.chi2 < 0.0) {
    throw Error(ErrorKind::kInvariantViolation, label + ": negative chi2");
  }
  out.method = method;
  out.state_label = std::move(label);
  return out;
}

MeasureReport report_from_purity(double purity, double purity_decay,
                                 Method method, std::string label) {
  check_purity(purity, label);
  MeasureReport out;
  out.purity = purity;
  out.purity_decay = purity_decay;
  out.I = -0.5 * purity_decay;
  out.I_plus = 0.5 * (purity - purity_decay);
  out.chi2 = 2.0 * (1.0 - purity_decay / purity);
  out.method = method;
  out.state_label = std::move(label);
  return out;
}

double purity(const WignerRep& r) {
  const double p = kPi * rep_overlap(r, r);
  check_purity(p, r.label());
  return p;
}

double purity_decay(const WignerRep& r) {
  return kPi * (rep_overlap(r, r) - 0.25 * rep_grad_overlap(r, r));
}

double measure_I(const WignerRep& r) { return -0.5 * purity_decay(r); }

double measure_I_plus(const WignerRep& r) {
  return 0.5 * (purity(r) - purity_decay(r));
}

double chi_squared(const WignerRep& r) { return report(r).chi2; }

MeasureReport report(const WignerRep& r) {
  return report_from_integrals(rep_overlap(r, r), rep_grad_overlap(r, r),
                               Method::kClosedForm, r.label());
}

}  // namespace macroq
