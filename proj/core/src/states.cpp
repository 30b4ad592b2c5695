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

#include "macroq/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "macroq/error.hpp"

namespace macroq {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateNorm = 1e-12;
constexpr double kWeightSumTol = 1e-12;


std::string fmt_num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string fmt_complex(Complex v) {
  if (v.imag() == 0.0) return fmt_num(v.real());
  return fmt_num(v.real()) + (v.imag() < 0 ? "" : "+") + fmt_num(v.imag()) +
         "i";
}

void require_variance(double variance) {
  if (!(variance >= 1.0)) {
    throw Error(ErrorKind::kInvalidVariance,
                "variance " + fmt_num(variance) + " < 1");
  }
}

WignerRep normalized(const WignerRep& r, const std::string& label) {
  const double norm = rep_integral(r);
  if (!(std::abs(norm) >= kDegenerateNorm)) {
    throw Error(ErrorKind::kDegenerateState,
                label + " has normalization " + fmt_num(norm));
  }
  return r.scaled(1.0 / norm).with_label(label).with_hermitian(true);
}

// Integral over alpha of P_th(V, d; alpha) W_{|alpha><s alpha|}(u), with
// s = +1 or -1 and V > 1. The dyad symbol and P_th are jointly Gaussian in
// v = (a1, a2, x, p) with alpha = a1 + i a2; the alpha block is integrated
// out analytically, leaving one Gaussian term in u = (x, p).
WignerRep smear_dyad(double variance, double displacement, int sign) {
  const double s = sign;
  const double m = 4.0 / (variance - 1.0);
  const double d = displacement;

  // Exponent -1/2 v^T M v + beta^T v + c for the dyad:
  //   -2|u|^2 - (1+s)|alpha|^2 + 2(1+s)(a1 x + a2 p) + 2i(1-s)(a2 x - a1 p)
  // and for P_th: -2|alpha - d|^2 / (V - 1). With a = 2(1+s), b = 2(1-s):
  //   M_aa = k I, k = a + m;  M_au = [[-a, ib], [-ib, -a]];  beta_a = (m d, 0).
  // M_au^T M_au = (a^2 - b^2) I = 16 s I, so the Schur complement
  //   A_u = (4 - 16 s / k) I = (8 (1 - s) + 4 m) / k * I
  // is written without the 4 - 16/(4+m) cancellation at large V. Likewise
  //   b_u = -M_au^T beta_a / k = (a, -i b) m d / k,
  // and the alpha integral times exp(c) collapses to
  //   (2/pi)(m/2pi)(2pi/k) exp(-a m d^2 / (2k)).
  const double a = 2.0 * (1.0 + s);
  const double b = 2.0 * (1.0 - s);
  const double k = a + m;
  const Complex i(0.0, 1.0);
  const SymMatrix2 quad = SymMatrix2::diagonal((8.0 * (1.0 - s) + 4.0 * m) / k);
  const Vec2 lin{a * m * d / k, -i * b * m * d / k};
  const double coeff = (2.0 / kPi) * (m / k) * std::exp(-a * m * d * d / (2.0 * k));
  return WignerRep({GaussTerm::make(coeff, quad, lin, Polynomial::constant(1.0))},
                   "", sign > 0);
}

Complex require_complex_finite(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorKind::kInvalidParameter, std::string(what) + " not finite");
  }
  return v;
}

}  // namespace

WignerRep coherent(Complex beta) {
  require_complex_finite(beta, "amplitude");
  const double bx = beta.real(), bp = beta.imag();
  const GaussTerm term = GaussTerm::make(
      (2.0 / kPi) * std::exp(-2.0 * std::norm(beta)), SymMatrix2::diagonal(4.0),
      Vec2{4.0 * bx, 4.0 * bp}, Polynomial::constant(1.0));
  return WignerRep({term}, "coherent(" + fmt_complex(beta) + ")", true);
}

WignerRep fock(int n) {
  if (n < 0) {
    throw Error(ErrorKind::kInvalidParameter, "negative photon number");
  }
  if (n > kMaxFockN) {
    throw Error(ErrorKind::kDegreeOverflow,
                "fock(" + std::to_string(n) + ") needs degree " +
                    std::to_string(2 * n));
  }
  // (-1)^n L_n(y) = sum_k (-1)^(n+k) C(n,k) y^k / k!, y = 4(x^2 + p^2),
  // with (x^2 + p^2)^k expanded binomially.
  Polynomial poly;
  double binom_nk = 1.0;  // C(n, k)
  double inv_fact = 1.0;  // 1 / k!
  double four_k = 1.0;
  for (int k = 0; k <= n; ++k) {
    const double sign = ((n + k) % 2 == 0) ? 1.0 : -1.0;
    const double ck = sign * binom_nk * inv_fact * four_k;
    double binom_kj = 1.0;  // C(k, j)
    for (int j = 0; j <= k; ++j) {
      poly.add(2 * j, 2 * (k - j), ck * binom_kj);
      binom_kj = binom_kj * (k - j) / (j + 1);
    }
    binom_nk = binom_nk * (n - k) / (k + 1);
    inv_fact /= (k + 1);
    four_k *= 4.0;
  }
  const GaussTerm term = GaussTerm::make(2.0 / kPi, SymMatrix2::diagonal(4.0),
                                         Vec2{}, std::move(poly));
  return WignerRep({term}, "fock(" + std::to_string(n) + ")", true);
}

WignerRep displaced_thermal(double variance, double displacement) {
  require_variance(variance);
  const std::string label = "displaced_thermal(V=" + fmt_num(variance) +
                            ",d=" + fmt_num(displacement) + ")";
  if (variance == 1.0) return coherent(displacement).with_label(label);
  return smear_dyad(variance, displacement, +1).with_label(label);
}

WignerRep coherent_dyad(Complex alpha, Complex gamma) {
  // W(z) = (2/pi) exp(-2|z|^2 + 2 alpha z* + 2 gamma* z
  //                   - |alpha|^2/2 - |gamma|^2/2 - gamma* alpha).
  const Complex i(0.0, 1.0);
  const Complex gc = std::conj(gamma);
  const Complex coeff =
      (2.0 / kPi) *
      std::exp(-0.5 * std::norm(alpha) - 0.5 * std::norm(gamma) - gc * alpha);
  const Vec2 lin{2.0 * (alpha + gc), 2.0 * i * (gc - alpha)};
  const GaussTerm term = GaussTerm::make(coeff, SymMatrix2::diagonal(4.0), lin,
                                         Polynomial::constant(1.0));
  return WignerRep(
      {term}, "dyad(" + fmt_complex(alpha) + "," + fmt_complex(gamma) + ")",
      alpha == gamma);
}

WignerRep sigma_interference(double variance, double displacement) {
  require_variance(variance);
  const std::string label = "sigma(V=" + fmt_num(variance) +
                            ",d=" + fmt_num(displacement) + ")";
  if (variance == 1.0) {
    return coherent_dyad(displacement, -displacement).with_label(label);
  }
  return smear_dyad(variance, displacement, -1).with_label(label);
}

WignerRep rho_M(double variance, double displacement) {
  require_variance(variance);
  std::string label =
      "rho_M(V=" + fmt_num(variance) + ",d=" + fmt_num(displacement) + ")";
  if (variance == 1.0 && displacement == 0.0) label += "[degenerate:vacuum]";
  const WignerRep sum = (displaced_thermal(variance, displacement) +
                         displaced_thermal(variance, -displacement) +
                         sigma_interference(variance, displacement) +
                         sigma_interference(variance, -displacement))
                            .with_hermitian(true);
  return normalized(sum, label).pruned();
}

WignerRep rho_small_m(double photon_weight, double variance) {
  if (!(photon_weight >= 0.0 && photon_weight <= 1.0)) {
    throw Error(ErrorKind::kInvalidParameter,
                "photon weight " + fmt_num(photon_weight) + " outside [0,1]");
  }
  require_variance(variance);
  std::vector<MixtureComponent> parts;
  parts.push_back({photon_weight, StateSpec{FockSpec{1}}});
  parts.push_back({1.0 - photon_weight,
                   StateSpec{DisplacedThermalSpec{variance, 0.0}}});
  return mixture(parts).with_label("rho_m(p=" + fmt_num(photon_weight) +
                                   ",V=" + fmt_num(variance) + ")");
}

WignerRep cat(Complex beta, Parity parity) {
  const bool even = parity == Parity::kEven;
  const std::string label =
      "cat(" + fmt_complex(beta) + "," + (even ? "even" : "odd") + ")";
  if (!even && std::abs(beta) < 1e-6) {
    throw Error(ErrorKind::kDegenerateState, "odd cat with |beta| < 1e-6");
  }
  const double sign = even ? 1.0 : -1.0;
  const WignerRep sum =
      (coherent(beta) + coherent(-beta) +
       (coherent_dyad(beta, -beta) + coherent_dyad(-beta, beta)).scaled(sign))
          .with_hermitian(true);
  return normalized(sum, label);
}

WignerRep mixture(const std::vector<MixtureComponent>& components) {
  double total = 0.0;
  for (const auto& c : components) {
    if (!(c.weight >= 0.0)) {
      throw Error(ErrorKind::kWeightError, "negative mixture weight");
    }
    total += c.weight;
  }
  if (components.empty() || std::abs(total - 1.0) > kWeightSumTol) {
    throw Error(ErrorKind::kWeightError,
                "mixture weights sum to " + fmt_num(total));
  }
  WignerRep out({}, "", true);
  std::string label = "mixture[";
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto& c = components[k];
    const WignerRep part = build_state(c.state);
    if (!part.hermitian()) {
      throw Error(ErrorKind::kNotAState,
                  "mixture component " + part.label() + " is not hermitian");
    }
    if (k > 0) label += ";";
    label += fmt_num(c.weight) + "*" + part.label();
    if (c.weight == 0.0) continue;
    out = out + part.scaled(c.weight);
  }
  return out.pruned().with_label(label + "]");
}

WignerRep build_state(const StateSpec& spec) {
  return std::visit(
      [](const auto& s) -> WignerRep {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoherentSpec>) {
          return coherent(s.beta);
        } else if constexpr (std::is_same_v<T, FockSpec>) {
          return fock(s.n);
        } else if constexpr (std::is_same_v<T, DisplacedThermalSpec>) {
          return displaced_thermal(s.variance, s.displacement);
        } else if constexpr (std::is_same_v<T, SigmaInterferenceSpec>) {
          return sigma_interference(s.variance, s.displacement);
        } else if constexpr (std::is_same_v<T, RhoMSpec>) {
          return rho_M(s.variance, s.displacement);
        } else if constexpr (std::is_same_v<T, RhoSmallMSpec>) {
          return rho_small_m(s.photon_weight, s.variance);
        } else if constexpr (std::is_same_v<T, CatSpec>) {
          return cat(s.beta, s.parity);
        } else {
          return mixture(s.components);
        }
      },
      spec.value);
}

}  // namespace macroq
