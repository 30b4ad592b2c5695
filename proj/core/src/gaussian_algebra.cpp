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

#include "macroq/gaussian_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "macroq/error.hpp"

namespace macroq {
namespace {

constexpr double kSingularDet = 1e-30;

void require_integrable(const SymMatrix2& quad) {
  if (!quad.real_part_positive_definite()) {
    throw Error(ErrorKind::kNonIntegrable,
                "real part of the quadratic form is not positive definite");
  }
}

void require_degree(int degree) {
  if (degree > kMaxDegree) {
    throw Error(ErrorKind::kDegreeOverflow,
                "polynomial degree " + std::to_string(degree) + " exceeds " +
                    std::to_string(kMaxDegree));
  }
}

}  // namespace

bool SymMatrix2::real_part_positive_definite() const {
  const double a = xx.real();
  const double minor = xx.real() * pp.real() - xp.real() * xp.real();
  return a > 0.0 && minor > 0.0;
}

std::pair<Complex, Complex> SymMatrix2::eigenvalues() const {
  const Complex half_trace = 0.5 * trace();
  const Complex disc = std::sqrt(half_trace * half_trace - det());
  return {half_trace + disc, half_trace - disc};
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(Complex c) { return monomial(0, 0, c); }

Polynomial Polynomial::monomial(int deg_x, int deg_p, Complex c) {
  Polynomial out;
  out.add(deg_x, deg_p, c);
  return out;
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& [m, c] : coeffs_) deg = std::max(deg, m.degree());
  return deg;
}

int Polynomial::max_degree(Axis axis) const {
  int deg = 0;
  for (const auto& [m, c] : coeffs_) {
    deg = std::max(deg, axis == Axis::kX ? m.x : m.p);
  }
  return deg;
}

Complex Polynomial::coefficient(int deg_x, int deg_p) const {
  const auto it = coeffs_.find(Monomial{deg_x, deg_p});
  return it == coeffs_.end() ? Complex{} : it->second;
}

void Polynomial::add(int deg_x, int deg_p, Complex c) {
  if (c == Complex{}) return;
  const Monomial key{deg_x, deg_p};
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) coeffs_.erase(it);
  }
}

Complex Polynomial::evaluate(double x, double p) const {
  // Horner in p for each power of x would need regrouping; direct powers are
  // fine at the degrees in use.
  Complex sum{};
  for (const auto& [m, c] : coeffs_) {
    sum += c * (std::pow(x, m.x) * std::pow(p, m.p));
  }
  return sum;
}

Polynomial Polynomial::derivative(Axis axis) const {
  Polynomial out;
  for (const auto& [m, c] : coeffs_) {
    if (axis == Axis::kX && m.x > 0) out.add(m.x - 1, m.p, c * double(m.x));
    if (axis == Axis::kP && m.p > 0) out.add(m.x, m.p - 1, c * double(m.p));
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [m, c] : o.coeffs_) out.add(m.x, m.p, c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out;
  for (const auto& [m1, c1] : coeffs_) {
    for (const auto& [m2, c2] : o.coeffs_) {
      out.add(m1.x + m2.x, m1.p + m2.p, c1 * c2);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(Complex s) const {
  Polynomial out;
  for (const auto& [m, c] : coeffs_) out.add(m.x, m.p, c * s);
  return out;
}

// ---------------------------------------------------------------------------
// GaussTerm

GaussTerm GaussTerm::make(Complex coeff, const SymMatrix2& quad,
                          const Vec2& lin, Polynomial poly) {
  require_integrable(quad);
  require_degree(poly.degree());
  return GaussTerm(coeff, quad, lin, std::move(poly));
}

Complex GaussTerm::exponent(double x, double p) const {
  return -0.5 * (quad_.xx * (x * x) + 2.0 * quad_.xp * (x * p) +
                 quad_.pp * (p * p)) +
         lin_.x * x + lin_.p * p;
}

Complex GaussTerm::evaluate(double x, double p) const {
  return coeff_ * poly_.evaluate(x, p) * std::exp(exponent(x, p));
}

GaussTerm GaussTerm::scaled(Complex s) const {
  return GaussTerm(coeff_ * s, quad_, lin_, poly_);
}

double GaussTerm::envelope_bound() const {
  const SymMatrix2 re_quad = quad_.real_part();
  const Vec2 re_lin{lin_.x.real(), lin_.p.real()};
  const int mx = poly_.max_degree(Axis::kX);
  const int mp = poly_.max_degree(Axis::kP);
  const auto table = gaussian_moment_table(re_quad, re_lin, 2 * mx, 2 * mp);
  const double mass = std::abs(table[0][0]);
  double bound = 0.0;
  for (const auto& [m, c] : poly_.coefficients()) {
    bound += std::abs(c) * std::sqrt(std::abs(table[2 * m.x][2 * m.p]) * mass);
  }
  return std::abs(coeff_) * bound;
}

GaussTerm term_mul(const GaussTerm& t1, const GaussTerm& t2) {
  Polynomial poly = t1.poly() * t2.poly();
  require_degree(poly.degree());
  return GaussTerm::make(t1.coeff() * t2.coeff(), t1.quad() + t2.quad(),
                         t1.lin() + t2.lin(), std::move(poly));
}

GaussTerm term_diff(const GaussTerm& t, Axis axis) {
  // dE/dx = -(A_xx x + A_xp p) + b_x, and likewise for p.
  const SymMatrix2& a = t.quad();
  Polynomial exponent_grad;
  if (axis == Axis::kX) {
    exponent_grad.add(1, 0, -a.xx);
    exponent_grad.add(0, 1, -a.xp);
    exponent_grad.add(0, 0, t.lin().x);
  } else {
    exponent_grad.add(1, 0, -a.xp);
    exponent_grad.add(0, 1, -a.pp);
    exponent_grad.add(0, 0, t.lin().p);
  }
  Polynomial poly = t.poly().derivative(axis) + t.poly() * exponent_grad;
  require_degree(poly.degree());
  return GaussTerm::make(t.coeff(), t.quad(), t.lin(), std::move(poly));
}

// ---------------------------------------------------------------------------
// Moments

Complex inverse_sqrt_det(const SymMatrix2& quad) {
  // Re(A) positive definite puts the numerical range, hence both
  // eigenvalues, in the open right half-plane.
  const auto [l1, l2] = quad.eigenvalues();
  return 1.0 / (std::sqrt(l1) * std::sqrt(l2));
}

std::vector<std::vector<Complex>> gaussian_moment_table(const SymMatrix2& quad,
                                                        const Vec2& lin,
                                                        int max_x, int max_p) {
  require_integrable(quad);
  const Complex det = quad.det();
  if (std::abs(det) < kSingularDet) {
    throw Error(ErrorKind::kSingularMatrix, "determinant underflow");
  }
  // Covariance = A^{-1}, mean = A^{-1} b.
  const Complex cxx = quad.pp / det;
  const Complex cxp = -quad.xp / det;
  const Complex cpp = quad.xx / det;
  const Complex mx = cxx * lin.x + cxp * lin.p;
  const Complex mp = cxp * lin.x + cpp * lin.p;
  const Complex norm = 2.0 * std::numbers::pi * inverse_sqrt_det(quad) *
                       std::exp(0.5 * (lin.x * mx + lin.p * mp));

  std::vector<std::vector<Complex>> e(max_x + 1,
                                      std::vector<Complex>(max_p + 1));
  e[0][0] = 1.0;
  for (int i = 0; i < max_x; ++i) {
    e[i + 1][0] = mx * e[i][0] + (i > 0 ? double(i) * cxx * e[i - 1][0] : 0.0);
  }
  for (int j = 0; j < max_p; ++j) {
    for (int i = 0; i <= max_x; ++i) {
      Complex v = mp * e[i][j];
      if (i > 0) v += double(i) * cxp * e[i - 1][j];
      if (j > 0) v += double(j) * cpp * e[i][j - 1];
      e[i][j + 1] = v;
    }
  }
  for (auto& row : e) {
    for (auto& v : row) v *= norm;
  }
  return e;
}

Complex gaussian_moment(const SymMatrix2& quad, const Vec2& lin, int deg_x,
                        int deg_p) {
  return gaussian_moment_table(quad, lin, deg_x, deg_p)[deg_x][deg_p];
}

Complex term_integral(const GaussTerm& t) {
  const Polynomial& poly = t.poly();
  if (poly.empty()) return 0.0;
  const auto table =
      gaussian_moment_table(t.quad(), t.lin(), poly.max_degree(Axis::kX),
                            poly.max_degree(Axis::kP));
  Complex sum{};
  for (const auto& [m, c] : poly.coefficients()) sum += c * table[m.x][m.p];
  return t.coeff() * sum;
}

}  // namespace macroq
