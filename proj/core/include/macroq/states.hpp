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

// Wigner representations of the state families used throughout: coherent
// and number states, displaced thermal states, the thermal-weighted
// interference operator sigma(V, d), the thermal superposition rho_M, the
// single-photon/thermal mixture rho_m, cat states and general mixtures.

#ifndef MACROQ_STATES_HPP_
#define MACROQ_STATES_HPP_

#include <vector>

#include "macroq/state_spec.hpp"
#include "macroq/wigner_rep.hpp"

namespace macroq {

/// Largest number state whose Wigner polynomial fits in kMaxDegree.
inline constexpr int kMaxFockN = kMaxDegree / 2;

WignerRep coherent(Complex beta);

/// (2/pi) (-1)^n L_n(4|alpha|^2) exp(-2|alpha|^2) as a single term.
WignerRep fock(int n);

/// Gaussian of variance V centred at d; V == 1 is coherent(d).
WignerRep displaced_thermal(double variance, double displacement);

/// Weyl symbol of |alpha><gamma|; its integral is <gamma|alpha>.
WignerRep coherent_dyad(Complex alpha, Complex gamma);

/// Integral of P_th(V, d) |alpha><-alpha| over alpha. Not hermitian.
WignerRep sigma_interference(double variance, double displacement);

/// Normalized rho_th(V,d) + rho_th(V,-d) + sigma(V,d) + sigma(V,-d).
WignerRep rho_M(double variance, double displacement);

WignerRep rho_small_m(double photon_weight, double variance);

WignerRep cat(Complex beta, Parity parity);

WignerRep mixture(const std::vector<MixtureComponent>& components);

WignerRep build_state(const StateSpec& spec);

}  // namespace macroq

#endif  // MACROQ_STATES_HPP_
