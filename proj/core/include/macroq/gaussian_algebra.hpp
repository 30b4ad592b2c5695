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

// Exact algebra of (complex polynomial) x (complex Gaussian) terms on the
// two-dimensional phase space u = (x, p). A term is
//
//   coeff * poly(x, p) * exp(-1/2 u^T A u + b^T u)
//
// with A complex symmetric and Re(A) positive definite, so every term is
// absolutely integrable over the plane. Products, derivatives and full-plane
// integrals of terms are computed in closed form.

#ifndef MACROQ_GAUSSIAN_ALGEBRA_HPP_
#define MACROQ_GAUSSIAN_ALGEBRA_HPP_

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace macroq {

using Complex = std::complex<double>;

/// Largest total polynomial degree any term may carry.
inline constexpr int kMaxDegree = 64;

enum class Axis { kX, kP };

/// Complex symmetric 2x2 matrix; the off-diagonal entry is stored once.
struct SymMatrix2 {
  Complex xx{};
  Complex xp{};
  Complex pp{};

  static SymMatrix2 diagonal(Complex value) { return {value, 0.0, value}; }

  Complex det() const { return xx * pp - xp * xp; }
  Complex trace() const { return xx + pp; }
  SymMatrix2 real_part() const { return {xx.real(), xp.real(), pp.real()}; }
  /// Both leading minors of Re(A) strictly positive.
  bool real_part_positive_definite() const;
  /// Eigenvalues from the characteristic quadratic.
  std::pair<Complex, Complex> eigenvalues() const;

  SymMatrix2 operator+(const SymMatrix2& o) const {
    return {xx + o.xx, xp + o.xp, pp + o.pp};
  }
  SymMatrix2 operator*(Complex s) const { return {xx * s, xp * s, pp * s}; }
};

struct Vec2 {
  Complex x{};
  Complex p{};

  Vec2 operator+(const Vec2& o) const { return {x + o.x, p + o.p}; }
  Vec2 operator*(Complex s) const { return {x * s, p * s}; }
};

/// Exponent (x^i p^j) of one monomial.
struct Monomial {
  int x = 0;
  int p = 0;

  int degree() const { return x + p; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse bivariate polynomial with complex coefficients.
class Polynomial {
 public:
  using Storage = std::map<Monomial, Complex>;

  Polynomial() = default;
  static Polynomial constant(Complex c);
  static Polynomial monomial(int deg_x, int deg_p, Complex c = 1.0);

  const Storage& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int max_degree(Axis axis) const;
  Complex coefficient(int deg_x, int deg_p) const;

  void add(int deg_x, int deg_p, Complex c);
  Complex evaluate(double x, double p) const;
  Polynomial derivative(Axis axis) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(Complex s) const;

 private:
  Storage coeffs_;
};

/// One polynomial x complex-Gaussian atom. Instances always satisfy the
/// integrability and degree invariants; construction goes through make().
class GaussTerm {
 public:
  /// Throws NonIntegrable when Re(A) is not positive definite and
  /// DegreeOverflow when the polynomial exceeds kMaxDegree.
  static GaussTerm make(Complex coeff, const SymMatrix2& quad, const Vec2& lin,
                        Polynomial poly);

  Complex coeff() const { return coeff_; }
  const SymMatrix2& quad() const { return quad_; }
  const Vec2& lin() const { return lin_; }
  const Polynomial& poly() const { return poly_; }

  Complex exponent(double x, double p) const;
  Complex evaluate(double x, double p) const;
  GaussTerm scaled(Complex s) const;

  /// Upper bound on the integral of |term| over the plane (Cauchy-Schwarz on
  /// each monomial against the real Gaussian envelope).
  double envelope_bound() const;

 private:
  GaussTerm(Complex coeff, const SymMatrix2& quad, const Vec2& lin,
            Polynomial poly)
      : coeff_(coeff), quad_(quad), lin_(lin), poly_(std::move(poly)) {}

  Complex coeff_;
  SymMatrix2 quad_;
  Vec2 lin_;
  Polynomial poly_;
};

GaussTerm term_mul(const GaussTerm& t1, const GaussTerm& t2);

/// Exact partial derivative; d(poly e^E) = (d poly + poly dE) e^E.
GaussTerm term_diff(const GaussTerm& t, Axis axis);

/// Integral of x^mx p^mp exp(-1/2 u^T A u + b^T u) over the plane.
Complex gaussian_moment(const SymMatrix2& quad, const Vec2& lin, int deg_x,
                        int deg_p);

/// All moments M[i][j] for i <= max_x, j <= max_p in one recurrence pass.
std::vector<std::vector<Complex>> gaussian_moment_table(const SymMatrix2& quad,
                                                        const Vec2& lin,
                                                        int max_x, int max_p);

/// Principal-branch (det A)^{-1/2}, taken per eigenvalue.
Complex inverse_sqrt_det(const SymMatrix2& quad);

Complex term_integral(const GaussTerm& t);

}  // namespace macroq

#endif  // MACROQ_GAUSSIAN_ALGEBRA_HPP_
