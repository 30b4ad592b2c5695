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

#include "macroq/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "macroq/error.hpp"

namespace macroq {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHermitianTol = 1e-12;
constexpr double kPsdTol = -1e-8;

ComplexMatrix parity_conjugate(const ComplexMatrix& m) {
  ComplexMatrix out = m;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if ((r + c) % 2 == 1) out(r, c) = -out(r, c);
    }
  }
  return out;
}

// Exact trace of sigma(V, d): int P_th(V, d; alpha) exp(-2|alpha|^2).
// Gaussians a/pi e^{-a|alpha-d|^2} and e^{-b|alpha|^2} integrate to
// a/(a+b) exp(-ab d^2/(a+b)) with a = 2/(V-1), b = 2.
double sigma_trace(double variance, double displacement) {
  if (variance == 1.0) return std::exp(-2.0 * displacement * displacement);
  const double a = 2.0 / (variance - 1.0);
  const double b = 2.0;
  return a / (a + b) * std::exp(-a * b * displacement * displacement / (a + b));
}

struct Unnormalized {
  ComplexMatrix matrix;
  double exact_trace;
};

Unnormalized build(const StateSpec& spec, int n_max);

Unnormalized cat_matrix(Complex beta, double sign, int n_max) {
  const ComplexVector psi =
      coherent_vector(beta, n_max) + sign * coherent_vector(-beta, n_max);
  const double norm2 = 2.0 + 2.0 * sign * std::exp(-2.0 * std::norm(beta));
  return {psi * psi.adjoint(), norm2};
}

Unnormalized thermal_matrix(double variance, double d, int n_max) {
  const int dim = n_max + 1;
  if (variance == 1.0) {
    const ComplexVector psi = coherent_vector(d, n_max);
    return {psi * psi.adjoint(), 1.0};
  }
  if (d == 0.0) {
    // Geometric photon distribution (1 - q) q^n.
    const double q = (variance - 1.0) / (variance + 1.0);
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    double w = 1.0 - q;
    for (int n = 0; n < dim; ++n, w *= q) m(n, n) = w;
    return {m, 1.0};
  }
  return {thermal_smeared_matrix(variance, d, +1, n_max), 1.0};
}

Unnormalized build(const StateSpec& spec, int n_max) {
  const int dim = n_max + 1;
  return std::visit(
      [&](const auto& s) -> Unnormalized {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoherentSpec>) {
          const ComplexVector psi = coherent_vector(s.beta, n_max);
          return {psi * psi.adjoint(), 1.0};
        } else if constexpr (std::is_same_v<T, FockSpec>) {
          if (s.n < 0) throw Error(ErrorKind::kInvalidParameter, "negative n");
          ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
          if (s.n <= n_max) m(s.n, s.n) = 1.0;
          return {m, 1.0};
        } else if constexpr (std::is_same_v<T, DisplacedThermalSpec>) {
          if (!(s.variance >= 1.0)) {
            throw Error(ErrorKind::kInvalidVariance, "variance < 1");
          }
          return thermal_matrix(s.variance, s.displacement, n_max);
        } else if constexpr (std::is_same_v<T, SigmaInterferenceSpec>) {
          throw Error(ErrorKind::kNotAState,
                      "the interference operator is not a density matrix");
        } else if constexpr (std::is_same_v<T, RhoMSpec>) {
          if (!(s.variance >= 1.0)) {
            throw Error(ErrorKind::kInvalidVariance, "variance < 1");
          }
          const double d = s.displacement;
          if (s.variance == 1.0) return cat_matrix(d, 1.0, n_max);
          const ComplexMatrix th =
              thermal_smeared_matrix(s.variance, d, +1, n_max);
          // sigma(V,d) = rho_th(V,d) Pi.
          ComplexMatrix sg = th;
          for (int n = 1; n < dim; n += 2) sg.col(n) = -sg.col(n);
          // rho_th(V,-d) = Pi rho_th(V,d) Pi and sigma(V,-d) = sigma(V,d)^+.
          ComplexMatrix m = th + parity_conjugate(th) + sg + sg.adjoint();
          return {m, 2.0 + 2.0 * sigma_trace(s.variance, d)};
        } else if constexpr (std::is_same_v<T, RhoSmallMSpec>) {
          if (!(s.photon_weight >= 0.0 && s.photon_weight <= 1.0)) {
            throw Error(ErrorKind::kInvalidParameter, "p outside [0,1]");
          }
          if (!(s.variance >= 1.0)) {
            throw Error(ErrorKind::kInvalidVariance, "variance < 1");
          }
          ComplexMatrix m = (1.0 - s.photon_weight) *
                            thermal_matrix(s.variance, 0.0, n_max).matrix;
          if (n_max >= 1) m(1, 1) += s.photon_weight;
          return {m, 1.0};
        } else if constexpr (std::is_same_v<T, CatSpec>) {
          const double sign = s.parity == Parity::kEven ? 1.0 : -1.0;
          if (sign < 0 && std::abs(s.beta) < 1e-6) {
            throw Error(ErrorKind::kDegenerateState, "odd cat at beta = 0");
          }
          return cat_matrix(s.beta, sign, n_max);
        } else {
          ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
          double total = 0.0;
          for (const auto& c : s.components) {
            if (!(c.weight >= 0.0)) {
              throw Error(ErrorKind::kWeightError, "negative weight");
            }
            total += c.weight;
            if (c.weight == 0.0) continue;
            const Unnormalized part = build(c.state, n_max);
            m += c.weight * part.matrix / part.exact_trace;
          }
          if (std::abs(total - 1.0) > 1e-12) {
            throw Error(ErrorKind::kWeightError, "weights do not sum to 1");
          }
          return {m, 1.0};
        }
      },
      spec.value);
}

}  // namespace

FockMatrix::FockMatrix(ComplexMatrix elements, double tail_bound)
    : elements_(std::move(elements)), tail_bound_(tail_bound) {
  if (elements_.rows() != elements_.cols() || elements_.rows() == 0) {
    throw Error(ErrorKind::kInvariantViolation, "matrix must be square");
  }
  const double scale = std::max(1.0, elements_.cwiseAbs().maxCoeff());
  if ((elements_ - elements_.adjoint()).cwiseAbs().maxCoeff() >
      kHermitianTol * scale) {
    throw Error(ErrorKind::kInvariantViolation, "density matrix not hermitian");
  }
  if (!(tail_bound_ >= 0.0) ||
      std::abs(elements_.trace().real() - (1.0 - tail_bound_)) > 1e-12) {
    throw Error(ErrorKind::kInvariantViolation, "trace != 1 - tail");
  }
  const ComplexMatrix herm = 0.5 * (elements_ + elements_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm,
                                                      Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kPsdTol) {
    throw Error(ErrorKind::kInvariantViolation,
                "density matrix not positive semidefinite");
  }
}

QuadratureRule gauss_hermite(int order) {
  if (order < 1) throw Error(ErrorKind::kInvalidParameter, "order < 1");
  constexpr double kPiM4 = 0.7511255444649425;  // pi^{-1/4}
  const int n = order;

  // Starting nodes from the Jacobi matrix; Newton on the orthonormal recurrence
  // then gives weights with full relative accuracy far into the tails.
  Eigen::VectorXd sub(std::max(n - 1, 1));
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(Eigen::VectorXd::Zero(n), sub.head(n - 1),
                                Eigen::EigenvaluesOnly);
  const Eigen::VectorXd guess = solver.eigenvalues();

  auto evaluate = [&](double z, double& value, double& slope) {
    double p1 = kPiM4, p2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
    }
    value = p1;
    slope = std::sqrt(2.0 * n) * p2;
  };

  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < n; ++i) {
    double z = guess[i], value = 0.0, slope = 1.0;
    for (int it = 0; it < 8; ++it) {
      evaluate(z, value, slope);
      const double step = value / slope;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    evaluate(z, value, slope);
    rule.nodes[i] = z;
    rule.weights[i] = 2.0 / (slope * slope);
  }
  // Exact symmetry.
  for (int i = 0; i < n / 2; ++i) {
    const int k = n - 1 - i;
    const double z = 0.5 * (rule.nodes[k] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[k]);
    rule.nodes[i] = -z;
    rule.nodes[k] = z;
    rule.weights[i] = rule.weights[k] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

ComplexVector coherent_vector(Complex beta, int n_max) {
  ComplexVector psi(n_max + 1);
  psi(0) = std::exp(-0.5 * std::norm(beta));
  for (int n = 1; n <= n_max; ++n) psi(n) = psi(n - 1) * beta / std::sqrt(double(n));
  return psi;
}

ComplexMatrix displacement_matrix(Complex beta, int n_max) {
  // <j+k|D(beta)|j> = e^{ik arg beta} g_j with
  //   g_j = sqrt(j!/(j+k)!) x^{k/2} e^{-x/2} L_j^{(k)}(x),  x = |beta|^2,
  // run along each diagonal by the normalized Laguerre recurrence. The upper
  // triangle follows from D(beta)^+ = D(-beta).
  const int dim = n_max + 1;
  const long double x = std::norm(beta);
  const long double log_x = x > 0 ? std::log(x) : 0.0L;
  const double phase = std::arg(beta);
  ComplexMatrix out(dim, dim);
  std::vector<long double> g(dim);
  for (int k = 0; k < dim; ++k) {
    const int len = dim - k;
    if (x == 0) {
      std::fill(g.begin(), g.begin() + len, k == 0 ? 1.0L : 0.0L);
    } else {
      g[0] = std::exp(0.5L * k * log_x - 0.5L * x - 0.5L * std::lgamma((long double)k + 1));
      long double prev = 0.0L;
      for (int j = 0; j + 1 < len; ++j) {
        const long double next =
            ((2.0L * j + 1 + k - x) * g[j] - std::sqrt((long double)j * (j + k)) * prev) /
            std::sqrt((long double)(j + 1) * (j + 1 + k));
        prev = g[j];
        g[j + 1] = next;
      }
    }
    const Complex lower = std::polar(1.0, k * phase);
    const Complex upper = (k % 2 == 0 ? 1.0 : -1.0) * std::conj(lower);
    for (int j = 0; j < len; ++j) {
      const double v = double(g[j]);
      out(j + k, j) = v * lower;
      if (k > 0) out(j, j + k) = v * upper;
    }
  }
  return out;
}

ComplexMatrix thermal_smeared_matrix(double variance, double displacement,
                                     int sign, int n_max) {
  if (!(variance > 1.0)) {
    throw Error(ErrorKind::kInvalidVariance, "smearing needs V > 1");
  }
  // <m|alpha><s alpha|n> = e^{-|alpha|^2} alpha^m (s alpha*)^n / sqrt(m! n!).
  // P_th(alpha) e^{-|alpha|^2} = C exp(-kappa |alpha - c|^2) with
  // kappa = (V+1)/(V-1), c = 2d/(V+1); the remaining factor is a polynomial
  // of degree <= 2 n_max, integrated exactly by an order n_max + 2 rule.
  const double d = displacement;
  const double kappa = (variance + 1.0) / (variance - 1.0);
  const double c = 2.0 * d / (variance + 1.0);
  const double log_c = std::log(2.0 / (kPi * (variance - 1.0))) -
                       2.0 * d * d / (variance - 1.0) + kappa * c * c;
  const double scale = std::exp(log_c) / kappa;
  const int order = n_max + 2;
  const QuadratureRule gh = gauss_hermite(order);
  const int dim = n_max + 1;
  const double inv_sqrt_kappa = 1.0 / std::sqrt(kappa);

  ComplexMatrix samples(order * order, dim);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const Complex alpha(c + gh.nodes[i] * inv_sqrt_kappa,
                          gh.nodes[j] * inv_sqrt_kappa);
      const double root_w = std::sqrt(gh.weights[i] * gh.weights[j]);
      const int row = i * order + j;
      Complex v = root_w;
      for (int m = 0; m < dim; ++m) {
        samples(row, m) = v;
        v *= alpha / std::sqrt(double(m + 1));
      }
    }
  }
  ComplexMatrix out = scale * (samples.transpose() * samples.conjugate());
  if (sign < 0) {
    for (int n = 1; n < dim; n += 2) out.col(n) = -out.col(n);
  }
  return out;
}

FockMatrix fock_state_matrix(const StateSpec& spec, int n_max) {
  if (n_max < 1 || n_max > kMaxFockCutoff) {
    throw Error(ErrorKind::kInvalidParameter,
                "cutoff must lie in [1, " + std::to_string(kMaxFockCutoff) + "]");
  }
  Unnormalized raw = build(spec, n_max);
  ComplexMatrix m = raw.matrix / raw.exact_trace;
  m = 0.5 * (m + m.adjoint());
  const double trace = m.trace().real();
  double tail = 1.0 - trace;
  if (tail < 0.0) {
    // Roundoff above one: renormalize onto the exact trace.
    m /= trace;
    tail = 0.0;
  }
  if (tail > kMaxTail) {
    throw Error(ErrorKind::kTailTooLarge,
                describe(spec) + " loses " + std::to_string(tail) +
                    " beyond n_max=" + std::to_string(n_max));
  }
  return FockMatrix(std::move(m), tail);
}

namespace {

// Rough photon-number cutoff holding all but tail_target of the state:
// Poisson-like spread for pure states, geometric tail for thermal parts.
double cutoff_estimate(const StateSpec& spec, double tail_target) {
  const double log_tail = std::log(1.0 / std::max(tail_target, 1e-300));
  auto poisson = [&](double mean) {
    return mean + 2.0 * std::sqrt(mean * log_tail) + log_tail / 2.0;
  };
  auto thermal = [&](double v, double d) {
    if (v <= 1.0) return poisson(d * d);
    const double q = (v - 1.0) / (v + 1.0);
    return log_tail / -std::log(q) + d * d + 2.0 * std::abs(d) * std::sqrt((v + 1.0) / 2.0);
  };
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CoherentSpec> || std::is_same_v<T, CatSpec>) {
          return poisson(std::norm(s.beta));
        } else if constexpr (std::is_same_v<T, FockSpec>) {
          return s.n;
        } else if constexpr (std::is_same_v<T, DisplacedThermalSpec> ||
                             std::is_same_v<T, RhoMSpec> ||
                             std::is_same_v<T, SigmaInterferenceSpec>) {
          return thermal(s.variance, s.displacement);
        } else if constexpr (std::is_same_v<T, RhoSmallMSpec>) {
          return std::max(1.0, thermal(s.variance, 0.0));
        } else {
          double worst = 0.0;
          for (const auto& c : s.components) {
            if (c.weight > 0) worst = std::max(worst, cutoff_estimate(c.state, tail_target));
          }
          return worst;
        }
      },
      spec.value);
}

}  // namespace

FockMatrix fock_state_matrix_auto(const StateSpec& spec, double tail_target) {
  static constexpr int kCutoffs[] = {16, 32, 48, 64, 80, 100, 120, 150, 200};
  // Skip cutoffs that clearly cannot hold the state.
  const double guess = 0.8 * cutoff_estimate(spec, tail_target);
  for (int n_max : kCutoffs) {
    if (n_max < guess && n_max != kMaxFockCutoff) continue;
    try {
      FockMatrix m = fock_state_matrix(spec, n_max);
      if (m.tail_bound() <= tail_target || n_max == kMaxFockCutoff) return m;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kTailTooLarge || n_max == kMaxFockCutoff) throw;
    }
  }
  throw Error(ErrorKind::kTailTooLarge, describe(spec));
}

std::pair<double, double> fock_purity_and_slope(const FockMatrix& fm) {
  const ComplexMatrix& rho = fm.elements();
  const int dim = static_cast<int>(rho.rows());
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  Eigen::VectorXd number(dim);
  for (int n = 0; n < dim; ++n) {
    number(n) = n;
    if (n > 0) a(n - 1, n) = std::sqrt(double(n));
  }
  const ComplexMatrix n_rho = number.asDiagonal() * rho;
  const ComplexMatrix rho_n = rho * number.asDiagonal();
  const ComplexMatrix generator = a * rho * a.adjoint() - 0.5 * (n_rho + rho_n);
  const double purity = (rho * rho).trace().real();
  const double slope = 2.0 * (rho * generator).trace().real();
  return {purity, slope};
}

Complex displaced_parity_value(const ComplexMatrix& op, double x, double p) {
  // D(a) Pi D(a)^+ = D(2a) Pi, so the trace is sum_{m,n} op[n][m] D[m][n] (-1)^n.
  const int n_max = static_cast<int>(op.rows()) - 1;
  const ComplexMatrix disp = displacement_matrix(Complex(2.0 * x, 2.0 * p), n_max);
  Complex sum{};
  for (int n = 0; n <= n_max; ++n) {
    Complex col{};
    for (int m = 0; m <= n_max; ++m) col += op(n, m) * disp(m, n);
    sum += (n % 2 == 0) ? col : -col;
  }
  return (2.0 / kPi) * sum;
}

double fock_wigner_point(const FockMatrix& m, double x, double p) {
  return displaced_parity_value(m.elements(), x, p).real();
}

MeasureReport fock_measures(const FockMatrix& m, std::string label) {
  const auto [purity, slope] = fock_purity_and_slope(m);
  return report_from_purity(purity, slope, Method::kFock, std::move(label));
}

}  // namespace macroq
