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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "macroq/error.hpp"
#include "macroq/fock_oracle.hpp"
#include "macroq/grid_oracle.hpp"
#include "macroq/states.hpp"
#include "test_support.hpp"

namespace macroq {
namespace {

using testing::relative_error;

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kInvariantViolation;
}

std::vector<StateSpec> oracle_states() {
  return {{CoherentSpec{1.3}}, {FockSpec{0}}, {FockSpec{1}}, {FockSpec{2}},
          {FockSpec{3}}, {CatSpec{1.0, Parity::kEven}}, {RhoMSpec{3.0, 1.0}},
          {RhoMSpec{10.0, 1.0}}, {RhoSmallMSpec{0.3, 5.0}}};
}

TEST(GridSpec, Validation) {
  EXPECT_NO_THROW((GridSpec{4.0, 65}.validate()));
  EXPECT_EQ(kind_of([] { GridSpec{4.0, 66}.validate(); }), ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { GridSpec{4.0, 63}.validate(); }), ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { GridSpec{0.0, 65}.validate(); }), ErrorKind::kInvalidParameter);
}

TEST(AutoGrid, Vacuum) {
  const GridSpec g = auto_grid(coherent(0.0));
  EXPECT_GE(g.extent, 4.0);
  EXPECT_LE(g.extent, 6.0);
  EXPECT_GE(g.points, kMinGridPoints);
  EXPECT_EQ(g.points % 2, 1);
}

TEST(AutoGrid, ScalesWithVarianceAndCaps) {
  const GridSpec g10 = auto_grid(rho_M(10.0, 1.0));
  const GridSpec g25 = auto_grid(rho_M(25.0, 1.0));
  EXPECT_GT(g25.points, g10.points);
  EXPECT_GT(g25.extent, g10.extent);
  EXPECT_EQ(kind_of([] { auto_grid(rho_M(1e6, 1.0)); }), ErrorKind::kInfeasibleGrid);
}

TEST(GridMeasures, Anchors) {
  const WignerRep vac = coherent(0.0);
  EXPECT_NEAR(grid_measures(vac, auto_grid(vac)).purity, 1.0, 1e-8);
  const WignerRep f1 = fock(1);
  const MeasureReport g = grid_measures(f1, auto_grid(f1));
  EXPECT_NEAR(g.chi2, 6.0, 1e-6);
  EXPECT_EQ(g.method, Method::kGrid);
  const WignerRep c = cat(1.0, Parity::kEven);
  const MeasureReport gc = grid_measures(c, auto_grid(c));
  const MeasureReport cc = report(c);
  EXPECT_LT(relative_error(gc.purity, cc.purity), 1e-6);
  EXPECT_LT(relative_error(gc.purity_decay, cc.purity_decay), 1e-6);
  EXPECT_LT(relative_error(gc.I, cc.I), 1e-6);
}

TEST(GridMeasures, SimpsonConvergenceOrder) {
  const WignerRep vac = coherent(0.0);
  const double coarse = std::abs(grid_measures(vac, GridSpec{6.0, 65}).purity - 1.0);
  const double fine = std::abs(grid_measures(vac, GridSpec{6.0, 129}).purity - 1.0);
  EXPECT_GT(coarse, 0.0);
  EXPECT_LE(fine, coarse / 8.0);
}

TEST(GridMeasures, MatchesClosedFormOnStateList) {
  for (const auto& spec : oracle_states()) {
    const WignerRep r = build_state(spec);
    const MeasureReport g = grid_measures(r, auto_grid(r));
    const MeasureReport c = report(r);
    EXPECT_NEAR(grid_integral(r, auto_grid(r)), 1.0, 1e-9) << r.label();
    EXPECT_LT(relative_error(g.purity, c.purity), 1e-6) << r.label();
    // Coherent states have dP = 0; compare on the scale of P there.
    EXPECT_LT(std::abs(g.purity_decay - c.purity_decay),
              1e-6 * std::max(std::abs(c.purity_decay), c.purity))
        << r.label();
  }
}

TEST(GaussHermite, IntegratesPolynomials) {
  const QuadratureRule rule = gauss_hermite(40);
  double w0 = 0.0, w4 = 0.0, w1 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    w0 += rule.weights[i];
    w1 += rule.weights[i] * rule.nodes[i];
    w4 += rule.weights[i] * std::pow(rule.nodes[i], 4);
  }
  EXPECT_NEAR(w0, std::sqrt(kPi), 1e-13);
  EXPECT_NEAR(w1, 0.0, 1e-13);
  EXPECT_NEAR(w4, 0.75 * std::sqrt(kPi), 1e-12);
  const QuadratureRule big = gauss_hermite(202);
  double sum = 0.0;
  for (double w : big.weights) sum += w;
  EXPECT_NEAR(sum, std::sqrt(kPi), 1e-12);
}

TEST(FockMatrixBuild, StandardExpansions) {
  const FockMatrix coh = fock_state_matrix({CoherentSpec{1.0}}, 40);
  EXPECT_NEAR(coh.elements()(0, 0).real(), std::exp(-1.0), 1e-15);
  const FockMatrix th = fock_state_matrix({DisplacedThermalSpec{3.0, 0.0}}, 60);
  double q_n = 0.5;
  for (int n = 0; n < 10; ++n, q_n *= 0.5) {
    EXPECT_NEAR(th.elements()(n, n).real(), q_n, 1e-15);
  }
  const FockMatrix rm = fock_state_matrix({RhoMSpec{1.0, 1.0}}, 40);
  const ComplexVector psi = coherent_vector(1.0, 40) + coherent_vector(-1.0, 40);
  const ComplexMatrix proj = psi * psi.adjoint() / (2.0 + 2.0 * std::exp(-2.0));
  EXPECT_LT((rm.elements() - proj).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(FockMatrixBuild, SmearedThermalMatchesGeometric) {
  const ComplexMatrix smeared = thermal_smeared_matrix(3.0, 0.0, +1, 60);
  const FockMatrix geo = fock_state_matrix({DisplacedThermalSpec{3.0, 0.0}}, 60);
  EXPECT_LT((smeared - geo.elements()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(FockMatrixBuild, Errors) {
  EXPECT_EQ(kind_of([] { fock_state_matrix({DisplacedThermalSpec{50.0, 0.0}}, 10); }),
            ErrorKind::kTailTooLarge);
  EXPECT_EQ(kind_of([] { fock_state_matrix({SigmaInterferenceSpec{2.0, 1.0}}, 10); }),
            ErrorKind::kNotAState);
  EXPECT_EQ(kind_of([] { fock_state_matrix({FockSpec{1}}, 201); }),
            ErrorKind::kInvalidParameter);
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 0) = 1.0;
  bad(0, 1) = 0.5;
  EXPECT_EQ(kind_of([&] { FockMatrix(bad, 0.0); }), ErrorKind::kInvariantViolation);
  ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_EQ(kind_of([&] { FockMatrix(negative, 0.0); }), ErrorKind::kInvariantViolation);
}

TEST(FockMatrixBuild, TruncationMonotone) {
  for (const StateSpec& spec :
       {StateSpec{CoherentSpec{2.0}}, StateSpec{RhoMSpec{3.0, 1.0}},
        StateSpec{DisplacedThermalSpec{4.0, 0.0}}}) {
    constexpr double kRoundingFloor = 1e-14;
    double previous = 1.0;
    for (int n_max : {30, 40, 50, 60, 80, 100, 120}) {
      const ComplexMatrix m = [&] {
        try {
          return fock_state_matrix(spec, n_max).elements();
        } catch (const Error&) {
          return ComplexMatrix();
        }
      }();
      if (m.size() == 0) continue;
      const double defect = std::abs(m.trace().real() - 1.0);
      EXPECT_LE(defect, std::max(previous, kRoundingFloor))
          << describe(spec) << " n_max=" << n_max;
      previous = defect;
    }
  }
}

TEST(FockSlope, ReferenceValues) {
  const auto [p1, s1] = fock_purity_and_slope(fock_state_matrix({FockSpec{1}}, 10));
  EXPECT_NEAR(p1, 1.0, 1e-15);
  EXPECT_NEAR(s1, -2.0, 1e-14);
  const auto [pt, st] =
      fock_purity_and_slope(fock_state_matrix({DisplacedThermalSpec{3.0, 0.0}}, 80));
  EXPECT_NEAR(pt, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(st, 2.0 / 9.0, 1e-12);
  const auto [pv, sv] = fock_purity_and_slope(fock_state_matrix({FockSpec{0}}, 10));
  EXPECT_NEAR(pv, 1.0, 1e-15);
  EXPECT_NEAR(sv, 0.0, 1e-15);
}

TEST(FockWigner, ParityValues) {
  const FockMatrix vac = fock_state_matrix({FockSpec{0}}, 20);
  const FockMatrix one = fock_state_matrix({FockSpec{1}}, 20);
  EXPECT_NEAR(fock_wigner_point(vac, 0, 0), 2.0 / kPi, 1e-15);
  EXPECT_NEAR(fock_wigner_point(one, 0, 0), -2.0 / kPi, 1e-15);
  EXPECT_NEAR(fock_wigner_point(vac, 0.5, 0.5), 2.0 / kPi * std::exp(-1.0), 1e-14);
}

TEST(FockWigner, DisplacementBlockIsNearlyUnitary) {
  const ComplexMatrix d = displacement_matrix({0.8, -0.5}, 80);
  const ComplexMatrix prod = d * d.adjoint();
  const ComplexMatrix block = prod.topLeftCorner(20, 20);
  EXPECT_LT((block - ComplexMatrix::Identity(20, 20)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FockRoute, MatchesClosedFormOnStateList) {
  for (const auto& spec : oracle_states()) {
    const FockMatrix m = fock_state_matrix_auto(spec, 1e-10);
    EXPECT_LE(m.tail_bound(), 1e-10);
    const MeasureReport f = fock_measures(m, describe(spec));
    const MeasureReport c = report(build_state(spec));
    EXPECT_LT(relative_error(f.purity, c.purity), 1e-6) << describe(spec);
    EXPECT_LT(std::abs(f.purity_decay - c.purity_decay),
              1e-6 * std::max(std::abs(c.purity_decay), c.purity))
        << describe(spec);
  }
}

}  // namespace
}  // namespace macroq
