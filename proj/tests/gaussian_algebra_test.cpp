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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "macroq/error.hpp"
#include "test_support.hpp"

namespace macroq {
namespace {

using testing::plane_integral;
using testing::relative_error;
using testing::uniform;

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

GaussTerm vacuum_term() {
  return GaussTerm::make(2.0 / kPi, SymMatrix2::diagonal(4.0), Vec2{},
                         Polynomial::constant(1.0));
}

void expect_error(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    FAIL() << "expected " << error_kind_name(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

TEST(MakeTerm, VacuumTermEvaluatesToGaussian) {
  const GaussTerm t = vacuum_term();
  EXPECT_DOUBLE_EQ(t.evaluate(0.0, 0.0).real(), 2.0 / kPi);
  EXPECT_NEAR(t.evaluate(0.3, -0.2).real(),
              2.0 / kPi * std::exp(-2.0 * (0.09 + 0.04)), 1e-15);
}

TEST(MakeTerm, RejectsIndefiniteRealPart) {
  expect_error(ErrorKind::kNonIntegrable, [] {
    GaussTerm::make(1.0, SymMatrix2{-1.0, 0.0, 1.0}, Vec2{},
                    Polynomial::constant(1.0));
  });
}

TEST(MakeTerm, AcceptsPositiveRealPartWithImaginaryCoupling) {
  Polynomial xp = Polynomial::monomial(1, 1);
  EXPECT_NO_THROW(GaussTerm::make(1.0, SymMatrix2{2.0, kI, 2.0},
                                  Vec2{1.0, -kI}, xp));
}

TEST(MakeTerm, RejectsDegreeAboveLimit) {
  expect_error(ErrorKind::kDegreeOverflow, [] {
    GaussTerm::make(1.0, SymMatrix2::diagonal(1.0), Vec2{},
                    Polynomial::monomial(kMaxDegree + 1, 0));
  });
  EXPECT_NO_THROW(GaussTerm::make(1.0, SymMatrix2::diagonal(1.0), Vec2{},
                                  Polynomial::monomial(kMaxDegree, 0)));
}

TEST(TermMul, VacuumSquaredAddsExponents) {
  const GaussTerm sq = term_mul(vacuum_term(), vacuum_term());
  EXPECT_DOUBLE_EQ(sq.coeff().real(), 4.0 / (kPi * kPi));
  EXPECT_EQ(sq.quad().xx, Complex(8.0));
  EXPECT_EQ(sq.quad().xp, Complex(0.0));
  EXPECT_EQ(sq.quad().pp, Complex(8.0));
  EXPECT_EQ(sq.lin().x, Complex(0.0));
  EXPECT_EQ(sq.lin().p, Complex(0.0));
}

TEST(TermMul, ConstantTermCannotBeBuilt) {
  expect_error(ErrorKind::kNonIntegrable, [] {
    GaussTerm::make(1.0, SymMatrix2{}, Vec2{}, Polynomial::constant(1.0));
  });
}

TEST(TermMul, ProductMatchesPointwiseProduct) {
  // fock(1)-like polynomial times a displaced-thermal-like Gaussian.
  Polynomial laguerre;
  laguerre.add(0, 0, -1.0);
  laguerre.add(2, 0, 4.0);
  laguerre.add(0, 2, 4.0);
  const GaussTerm f1 =
      GaussTerm::make(2.0 / kPi, SymMatrix2::diagonal(4.0), Vec2{}, laguerre);
  const GaussTerm th = GaussTerm::make(0.2, SymMatrix2::diagonal(0.8),
                                       Vec2{0.8, 0.0}, Polynomial::constant(1.0));
  const GaussTerm prod = term_mul(f1, th);
  EXPECT_EQ(prod.poly().degree(), 2);
  EXPECT_EQ(prod.quad().xx, Complex(4.8));
  for (int k = 0; k < 5; ++k) {
    const double x = uniform(-2, 2), p = uniform(-2, 2);
    const Complex want = f1.evaluate(x, p) * th.evaluate(x, p);
    EXPECT_LT(relative_error(prod.evaluate(x, p), want), 1e-12);
  }
}

TEST(TermMul, DegreeOverflow) {
  const GaussTerm high = GaussTerm::make(1.0, SymMatrix2::diagonal(1.0), Vec2{},
                                         Polynomial::monomial(40, 0));
  expect_error(ErrorKind::kDegreeOverflow, [&] { term_mul(high, high); });
}

TEST(TermDiff, VacuumXDerivative) {
  const GaussTerm d = term_diff(vacuum_term(), Axis::kX);
  EXPECT_DOUBLE_EQ(d.coeff().real(), 2.0 / kPi);
  EXPECT_EQ(d.poly().coefficient(1, 0), Complex(-4.0));
  EXPECT_EQ(d.poly().coefficients().size(), 1u);
}

TEST(TermDiff, ImaginaryLinearPartMatchesFiniteDifference) {
  const double shift = 0.7;
  const GaussTerm t = GaussTerm::make(0.5, SymMatrix2::diagonal(3.0),
                                      Vec2{0.0, 4.0 * kI * shift},
                                      Polynomial::constant(1.0));
  const GaussTerm dp = term_diff(t, Axis::kP);
  EXPECT_EQ(dp.poly().coefficient(0, 0), 4.0 * kI * shift);
  for (int k = 0; k < 5; ++k) {
    const double x = uniform(-1, 1), p = uniform(-1, 1);
    const double h = 1e-6;
    const Complex fd = (t.evaluate(x, p + h) - t.evaluate(x, p - h)) / (2 * h);
    EXPECT_LT(relative_error(dp.evaluate(x, p), fd), 1e-6);
  }
}

TEST(TermDiff, SecondDerivativeOfVacuumAtOrigin) {
  const GaussTerm dxx = term_diff(term_diff(vacuum_term(), Axis::kX), Axis::kX);
  EXPECT_NEAR(dxx.evaluate(0.0, 0.0).real(), -4.0 * 2.0 / kPi, 1e-15);
}

TEST(TermDiff, DegreeOverflow) {
  const GaussTerm t = GaussTerm::make(1.0, SymMatrix2::diagonal(1.0), Vec2{},
                                      Polynomial::monomial(kMaxDegree, 0));
  expect_error(ErrorKind::kDegreeOverflow, [&] { term_diff(t, Axis::kX); });
}

TEST(GaussianMoment, StandardNormalization) {
  EXPECT_NEAR(gaussian_moment(SymMatrix2::diagonal(1.0), Vec2{}, 0, 0).real(),
              2 * kPi, 1e-14);
  EXPECT_NEAR(gaussian_moment(SymMatrix2::diagonal(1.0), Vec2{}, 2, 0).real(),
              2 * kPi, 1e-14);
}

TEST(GaussianMoment, ComplexQuadraticPrincipalBranch) {
  const SymMatrix2 a{Complex(2.0, -1.0), 0.0, 2.0};
  const Complex want = 2.0 * kPi / std::sqrt(Complex(2.0, -1.0) * 2.0);
  const Complex got = gaussian_moment(a, Vec2{}, 0, 0);
  EXPECT_LT(relative_error(got, want), 1e-14);
  const Complex quad = plane_integral(
      [&](double x, double p) {
        return std::exp(-0.5 * (a.xx * x * x + a.pp * p * p));
      },
      8.0, 401);
  EXPECT_LT(relative_error(got, quad), 1e-8);
}

TEST(GaussianMoment, Errors) {
  expect_error(ErrorKind::kNonIntegrable, [] {
    gaussian_moment(SymMatrix2{1.0, 2.0, 1.0}, Vec2{}, 0, 0);
  });
  expect_error(ErrorKind::kSingularMatrix, [] {
    gaussian_moment(SymMatrix2::diagonal(1e-16), Vec2{}, 0, 0);
  });
}

TEST(GaussianMoment, SecondMomentFromMeanAndCovariance) {
  for (int k = 0; k < 10; ++k) {
    const SymMatrix2 a{Complex(uniform(1, 3), uniform(-1, 1)),
                       Complex(uniform(-0.4, 0.4), uniform(-1, 1)),
                       Complex(uniform(1, 3), uniform(-1, 1))};
    const Vec2 b{Complex(uniform(-1, 1), uniform(-1, 1)),
                 Complex(uniform(-1, 1), uniform(-1, 1))};
    const Complex det = a.det();
    const Complex cov_xx = a.pp / det;
    const Complex mean_x = (a.pp * b.x - a.xp * b.p) / det;
    const Complex m0 = gaussian_moment(a, b, 0, 0);
    const Complex m2 = gaussian_moment(a, b, 2, 0);
    EXPECT_LT(relative_error(m2, (mean_x * mean_x + cov_xx) * m0), 1e-12);
  }
}

TEST(GaussianMoment, RandomTermsMatchQuadrature) {
  for (int k = 0; k < 20; ++k) {
    // Diagonal entries in [0.5, 4] with a bounded coupling keep Re(A) PD.
    const double axx = uniform(0.5, 4), app = uniform(0.5, 4);
    const double coupling = uniform(-0.6, 0.6) * std::sqrt(axx * app);
    const SymMatrix2 a{Complex(axx, uniform(-1, 1)),
                       Complex(coupling, uniform(-0.5, 0.5)),
                       Complex(app, uniform(-1, 1))};
    const Vec2 b{Complex(uniform(-1, 1), uniform(-2, 2)),
                 Complex(uniform(-1, 1), uniform(-2, 2))};
    Polynomial poly;
    poly.add(0, 0, Complex(uniform(-1, 1), uniform(-1, 1)));
    poly.add(1, 0, Complex(uniform(-1, 1), uniform(-1, 1)));
    poly.add(1, 2, Complex(uniform(-1, 1), uniform(-1, 1)));
    poly.add(3, 0, Complex(uniform(-1, 1), uniform(-1, 1)));
    const GaussTerm t = GaussTerm::make(Complex(uniform(0.5, 2), 0.3), a, b, poly);
    // Size the box from the envelope: centre plus 10 standard deviations of
    // the widest direction.
    const double extent = 12.0 / std::sqrt(std::min(axx, app) * (1 - 0.36)) + 2.0;
    const Complex quad = plane_integral(
        [&](double x, double p) { return t.evaluate(x, p); }, extent, 801);
    EXPECT_LT(relative_error(term_integral(t), quad), 1e-6) << "term " << k;
  }
}

TEST(TermIntegral, NormalizedAndOddCases) {
  EXPECT_NEAR(term_integral(vacuum_term()).real(), 1.0, 1e-15);
  Polynomial laguerre;
  laguerre.add(0, 0, -1.0);
  laguerre.add(2, 0, 4.0);
  laguerre.add(0, 2, 4.0);
  const GaussTerm f1 =
      GaussTerm::make(2.0 / kPi, SymMatrix2::diagonal(4.0), Vec2{}, laguerre);
  const Complex quad = plane_integral(
      [&](double x, double p) { return f1.evaluate(x, p); }, 6.0, 301);
  EXPECT_NEAR(term_integral(f1).real(), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(term_integral(f1) - quad), 0.0, 1e-9);
  const GaussTerm odd = GaussTerm::make(1.0, SymMatrix2::diagonal(2.0), Vec2{},
                                        Polynomial::monomial(1, 0));
  EXPECT_EQ(term_integral(odd), Complex(0.0));
}

TEST(Polynomial, ArithmeticAndDerivative) {
  Polynomial a;
  a.add(1, 0, 2.0);
  a.add(0, 1, 1.0);
  Polynomial sq = a * a;  // 4x^2 + 4xp + p^2
  EXPECT_EQ(sq.coefficient(2, 0), Complex(4.0));
  EXPECT_EQ(sq.coefficient(1, 1), Complex(4.0));
  EXPECT_EQ(sq.coefficient(0, 2), Complex(1.0));
  const Polynomial dx = sq.derivative(Axis::kX);
  EXPECT_EQ(dx.coefficient(1, 0), Complex(8.0));
  EXPECT_EQ(dx.coefficient(0, 1), Complex(4.0));
  EXPECT_EQ((a + a * Complex(-1.0)).degree(), -1);
}

}  // namespace
}  // namespace macroq
