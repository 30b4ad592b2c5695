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

// Independent number-basis route: states as truncated density matrices,
// the purity slope from the photon-loss Lindblad generator
//   L(rho) = a rho a^+ - 1/2 (a^+ a rho + rho a^+ a),   dP/dt = 2 Tr(rho L(rho)),
// and Wigner values from the displaced parity (2/pi) Tr(rho D(a) P D(a)^+).

#ifndef MACROQ_FOCK_ORACLE_HPP_
#define MACROQ_FOCK_ORACLE_HPP_

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "macroq/measures.hpp"
#include "macroq/state_spec.hpp"

namespace macroq {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr int kMaxFockCutoff = 200;
inline constexpr double kMaxTail = 1e-8;

/// Truncated density matrix on |0>..|n_max>. tail_bound is the probability
/// lost to truncation, so trace = 1 - tail_bound.
class FockMatrix {
 public:
  /// Validates hermiticity (1e-12), positivity (eigenvalues >= -1e-8) and
  /// the trace; throws InvariantViolation otherwise.
  FockMatrix(ComplexMatrix elements, double tail_bound);

  int n_max() const { return static_cast<int>(elements_.rows()) - 1; }
  const ComplexMatrix& elements() const { return elements_; }
  double tail_bound() const { return tail_bound_; }

 private:
  ComplexMatrix elements_;
  double tail_bound_;
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for weight exp(-t^2) (Newton on the orthonormal
/// recurrence).
QuadratureRule gauss_hermite(int order);

/// Coherent-state amplitudes <n|beta>, n = 0..n_max.
ComplexVector coherent_vector(Complex beta, int n_max);

/// <m|D(beta)|n> on the truncated block (entries exact, not a truncated
/// exponential).
ComplexMatrix displacement_matrix(Complex beta, int n_max);

/// int P_th(V, d; alpha) |alpha><sign*alpha| d^2 alpha, truncated, V > 1.
/// Exact up to roundoff for the kept block (tensor Gauss-Hermite rule of
/// order n_max + 2 in the P_th x vacuum-overlap frame).
ComplexMatrix thermal_smeared_matrix(double variance, double displacement,
                                     int sign, int n_max);

/// Number-basis matrix of a state. Throws NotAState for the bare
/// interference operator, TailTooLarge if more than 1e-8 of the trace falls
/// outside the cutoff, InvalidParameter for n_max > 200.
FockMatrix fock_state_matrix(const StateSpec& spec, int n_max);

/// Raises the cutoff until tail_bound <= tail_target (or the cutoff limit).
FockMatrix fock_state_matrix_auto(const StateSpec& spec,
                                  double tail_target = 1e-10);

/// (Tr rho^2, 2 Tr(rho L(rho))).
std::pair<double, double> fock_purity_and_slope(const FockMatrix& m);

/// (2/pi) Tr(op D(alpha) Pi D(alpha)^+) for any operator matrix.
Complex displaced_parity_value(const ComplexMatrix& op, double x, double p);

double fock_wigner_point(const FockMatrix& m, double x, double p);

MeasureReport fock_measures(const FockMatrix& m, std::string label);

}  // namespace macroq

#endif  // MACROQ_FOCK_ORACLE_HPP_
