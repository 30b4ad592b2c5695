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

// Brute-force check of the phase-space integrals: W and its analytic
// gradient are sampled on a uniform square grid and int W^2, int |grad W|^2
// are integrated by the composite Simpson rule.

#ifndef MACROQ_GRID_ORACLE_HPP_
#define MACROQ_GRID_ORACLE_HPP_

#include "macroq/measures.hpp"
#include "macroq/wigner_rep.hpp"

namespace macroq {

inline constexpr int kMinGridPoints = 65;
inline constexpr int kMaxGridPoints = 8192;

/// Square grid [-extent, extent]^2 with an odd number of points per axis.
struct GridSpec {
  double extent = 6.0;
  int points = kMinGridPoints;

  double step() const { return 2.0 * extent / (points - 1); }
  /// Throws InvalidParameter unless points is odd, >= kMinGridPoints and
  /// extent > 0.
  void validate() const;
};

/// Picks the extent so every term's envelope at the boundary is below 1e-16
/// of the largest term peak, and the step so each
/// Gaussian width and interference fringe gets at least 12 points and the
/// Simpson aliasing error stays below e^-40. Throws InfeasibleGrid above
/// kMaxGridPoints.
GridSpec auto_grid(const WignerRep& r);

/// Composite-Simpson integrals (int W^2, int |grad W|^2) on the grid.
std::pair<double, double> grid_integrals(const WignerRep& r, const GridSpec& g);

/// Same five quantities as report(), from quadrature; method = grid.
MeasureReport grid_measures(const WignerRep& r, const GridSpec& g);

/// Simpson integral of W over the grid (normalization check).
double grid_integral(const WignerRep& r, const GridSpec& g);

}  // namespace macroq

#endif  // MACROQ_GRID_ORACLE_HPP_
