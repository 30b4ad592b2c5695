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

#ifndef MACROQ_WIGNER_REP_HPP_
#define MACROQ_WIGNER_REP_HPP_

#include <string>
#include <utility>
#include <vector>

#include "macroq/gaussian_algebra.hpp"

namespace macroq {

/// Wigner function (or Weyl symbol, for non-state operators) as a finite sum
/// of Gaussian terms. Conventions: alpha = x + i p, d^2 alpha = dx dp,
/// integral of W over the plane is Tr(rho), Tr(rho1 rho2) = pi * int W1 W2.
class WignerRep {
 public:
  WignerRep() = default;
  WignerRep(std::vector<GaussTerm> terms, std::string label, bool hermitian)
      : terms_(std::move(terms)), label_(std::move(label)),
        hermitian_(hermitian) {}

  const std::vector<GaussTerm>& terms() const { return terms_; }
  const std::string& label() const { return label_; }
  bool hermitian() const { return hermitian_; }

  WignerRep with_label(std::string label) const;
  WignerRep with_hermitian(bool hermitian) const;
  WignerRep scaled(Complex s) const;
  /// Term-list concatenation; hermitian only if both operands are.
  WignerRep operator+(const WignerRep& o) const;

  /// Drops terms whose envelope bound falls below rel times the summed
  /// bounds of all terms.
  WignerRep pruned(double rel = 1e-15) const;

  /// Summed value at a point without the hermiticity check.
  Complex evaluate_complex(double x, double p) const;

 private:
  std::vector<GaussTerm> terms_;
  std::string label_;
  bool hermitian_ = false;
};

/// Residual tolerance factor for imaginary parts of real-valued quantities.
inline constexpr double kHermiticityTol = 1e-10;

/// Full-plane integral, complex (the operator trace).
Complex rep_trace(const WignerRep& r);

/// Real full-plane integral; HermiticityViolation if the imaginary part is
/// not negligible.
double rep_integral(const WignerRep& r);

/// int W1 W2 dx dp. Exactly symmetric in its arguments.
double rep_overlap(const WignerRep& r1, const WignerRep& r2);

/// int (dx W1 dx W2 + dp W1 dp W2) dx dp.
double rep_grad_overlap(const WignerRep& r1, const WignerRep& r2);

/// Real value of W at (x, p); HermiticityViolation if the imaginary residual
/// exceeds kHermiticityTol relative to the summed term magnitudes.
double rep_eval(const WignerRep& r, double x, double p);

/// Analytic gradient (dW/dx, dW/dp) at a point.
std::pair<double, double> rep_gradient(const WignerRep& r, double x, double p);

/// Derivative representation d/dx or d/dp of every term.
WignerRep rep_derivative(const WignerRep& r, Axis axis);

}  // namespace macroq

#endif  // MACROQ_WIGNER_REP_HPP_
