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

#include "macroq/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "macroq/error.hpp"
#include "macroq/parallel.hpp"

namespace macroq {
namespace {

constexpr double kPi = std::numbers::pi;
// ln(1e16): boundary envelope relative to the largest peak.
constexpr double kBoundaryLog = 36.841361487904734;
constexpr double kPointsPerFeature = 12.0;
constexpr double kAliasExponent = 40.0;

struct Coefficient {
  int x;
  int p;
  Complex c;
};

std::vector<Coefficient> flatten(const Polynomial& poly) {
  std::vector<Coefficient> out;
  for (const auto& [m, c] : poly.coefficients()) out.push_back({m.x, m.p, c});
  return out;
}

// A term and its two derivatives share one exponential.
struct CompiledTerm {
  Complex coeff;
  SymMatrix2 quad;
  Vec2 lin;
  std::vector<Coefficient> value;
  std::vector<Coefficient> dx;
  std::vector<Coefficient> dp;
};

std::vector<CompiledTerm> compile(const WignerRep& r, int& max_degree) {
  std::vector<CompiledTerm> out;
  max_degree = 0;
  for (const auto& t : r.terms()) {
    const GaussTerm tx = term_diff(t, Axis::kX);
    const GaussTerm tp = term_diff(t, Axis::kP);
    max_degree = std::max({max_degree, tx.poly().degree(), tp.poly().degree()});
    out.push_back({t.coeff(), t.quad(), t.lin(), flatten(t.poly()),
                   flatten(tx.poly()), flatten(tp.poly())});
  }
  return out;
}

Complex eval_poly(const std::vector<Coefficient>& poly,
                  const std::vector<double>& xpow,
                  const std::vector<double>& ppow) {
  Complex sum{};
  for (const auto& c : poly) sum += c.c * (xpow[c.x] * ppow[c.p]);
  return sum;
}

std::vector<double> simpson_weights(const GridSpec& g) {
  const double h = g.step();
  std::vector<double> w(g.points);
  for (int i = 0; i < g.points; ++i) {
    if (i == 0 || i == g.points - 1) {
      w[i] = h / 3.0;
    } else {
      w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    }
  }
  return w;
}

struct RealEigen {
  double min;
  double max;
};

RealEigen real_eigenvalues(const SymMatrix2& a) {
  const double xx = a.xx.real(), xp = a.xp.real(), pp = a.pp.real();
  const double half_tr = 0.5 * (xx + pp);
  const double disc = std::sqrt(0.25 * (xx - pp) * (xx - pp) + xp * xp);
  return {half_tr - disc, half_tr + disc};
}

// Accumulated row sums of (W^2, |grad W|^2, W), reduced in row order.
struct RowSums {
  double w2 = 0.0;
  double grad2 = 0.0;
  double w = 0.0;
};

std::vector<RowSums> integrate_rows(const WignerRep& r, const GridSpec& g) {
  g.validate();
  int max_degree = 0;
  const auto terms = compile(r, max_degree);
  const auto weights = simpson_weights(g);
  const double h = g.step();
  std::vector<RowSums> rows(g.points);
  parallel_for(g.points, [&](std::size_t i) {
    const double x = -g.extent + h * static_cast<double>(i);
    std::vector<double> xpow(max_degree + 1, 1.0), ppow(max_degree + 1, 1.0);
    for (int k = 1; k <= max_degree; ++k) xpow[k] = xpow[k - 1] * x;
    RowSums acc;
    for (int j = 0; j < g.points; ++j) {
      const double p = -g.extent + h * j;
      for (int k = 1; k <= max_degree; ++k) ppow[k] = ppow[k - 1] * p;
      Complex w{}, wx{}, wp{};
      for (const auto& t : terms) {
        const Complex e =
            -0.5 * (t.quad.xx * (x * x) + 2.0 * t.quad.xp * (x * p) +
                    t.quad.pp * (p * p)) +
            t.lin.x * x + t.lin.p * p;
        const Complex scale = t.coeff * std::exp(e);
        w += scale * eval_poly(t.value, xpow, ppow);
        wx += scale * eval_poly(t.dx, xpow, ppow);
        wp += scale * eval_poly(t.dp, xpow, ppow);
      }
      const double wj = weights[j];
      const double wr = w.real(), wxr = wx.real(), wpr = wp.real();
      acc.w2 += wj * wr * wr;
      acc.grad2 += wj * (wxr * wxr + wpr * wpr);
      acc.w += wj * wr;
    }
    const double wi = weights[i];
    rows[i] = {wi * acc.w2, wi * acc.grad2, wi * acc.w};
  });
  return rows;
}

}  // namespace

void GridSpec::validate() const {
  if (!(extent > 0.0) || points < kMinGridPoints || points % 2 == 0) {
    throw Error(ErrorKind::kInvalidParameter,
                "grid needs extent > 0 and an odd point count >= " +
                    std::to_string(kMinGridPoints));
  }
}

GridSpec auto_grid(const WignerRep& r) {
  if (r.terms().empty()) {
    throw Error(ErrorKind::kInvalidParameter, "empty representation");
  }
  struct Shape {
    RealEigen eig;
    double cx, cp;      // envelope centre
    double log_peak;    // log of |coeff| * envelope at the centre
    double log_poly;    // log of summed |poly coefficients|
    int degree;
    double im_lin;      // |Im b|
    double im_quad;     // largest |Im A| entry
  };
  std::vector<Shape> shapes;
  double max_log_peak = -1e300;
  for (const auto& t : r.terms()) {
    const SymMatrix2 a = t.quad();
    const double xx = a.xx.real(), xp = a.xp.real(), pp = a.pp.real();
    const double det = xx * pp - xp * xp;
    const double bx = t.lin().x.real(), bp = t.lin().p.real();
    const double cx = (pp * bx - xp * bp) / det;
    const double cp = (-xp * bx + xx * bp) / det;
    double poly_abs = 0.0;
    for (const auto& [m, c] : t.poly().coefficients()) poly_abs += std::abs(c);
    Shape s{real_eigenvalues(a),
            cx,
            cp,
            std::log(std::abs(t.coeff())) + 0.5 * (bx * cx + bp * cp),
            std::log(std::max(poly_abs, 1e-300)),
            std::max(t.poly().degree(), 0),
            std::hypot(t.lin().x.imag(), t.lin().p.imag()),
            std::max({std::abs(a.xx.imag()), std::abs(a.xp.imag()),
                      std::abs(a.pp.imag())})};
    max_log_peak = std::max(max_log_peak, s.log_peak + std::max(s.log_poly, 0.0));
    shapes.push_back(s);
  }

  double extent = 0.0;
  for (const auto& s : shapes) {
    // Solve log_peak + log_poly + degree*log(R) - lambda_min r^2 / 2
    //   = max_log_peak - kBoundaryLog, R = |centre| + r.
    const double centre = std::max(std::abs(s.cx), std::abs(s.cp));
    double radius = 1.0;
    for (int it = 0; it < 20; ++it) {
      const double reach = std::max(centre + radius, 1.0);
      const double budget = s.log_peak + s.log_poly +
                            s.degree * std::log(reach) - max_log_peak +
                            kBoundaryLog;
      radius = budget > 0.0 ? std::sqrt(2.0 * budget / s.eig.min) : 0.0;
    }
    extent = std::max(extent, centre + radius);
  }
  extent = std::max(extent, 1.0);

  double step = 1e300;
  for (const auto& s : shapes) {
    const double width = std::sqrt(2.0 / s.eig.max) /
                         std::sqrt(1.0 + 0.5 * s.degree);
    const double freq = s.im_lin + s.im_quad * extent;
    const double fringe = freq > 0.0 ? 2.0 * kPi / freq : 1e300;
    step = std::min(step, std::min(width, fringe) / kPointsPerFeature);
    // Simpson's coarse trapezoid (step 2h) aliases the product integrand's
    // spectrum, centred at 2*freq with curvature 2*lambda_max.
    const double lambda = 2.0 * s.eig.max;
    const double degree = 2.0 * s.degree + 2.0;
    const double band = std::sqrt(2.0 * lambda * (kAliasExponent + degree));
    step = std::min(step, kPi / (2.0 * freq + band));
  }
  const double half = std::ceil(extent / step);
  if (!(2.0 * half + 1.0 <= kMaxGridPoints)) {
    throw Error(ErrorKind::kInfeasibleGrid,
                r.label() + " needs " + std::to_string(2.0 * half + 1.0) +
                    " points per axis");
  }
  GridSpec g{extent, std::max(kMinGridPoints, static_cast<int>(2 * half + 1))};
  return g;
}

std::pair<double, double> grid_integrals(const WignerRep& r, const GridSpec& g) {
  const auto rows = integrate_rows(r, g);
  double w2 = 0.0, grad2 = 0.0;
  for (const auto& row : rows) {
    w2 += row.w2;
    grad2 += row.grad2;
  }
  return {w2, grad2};
}

MeasureReport grid_measures(const WignerRep& r, const GridSpec& g) {
  const auto [w2, grad2] = grid_integrals(r, g);
  return report_from_integrals(w2, grad2, Method::kGrid, r.label());
}

double grid_integral(const WignerRep& r, const GridSpec& g) {
  const auto rows = integrate_rows(r, g);
  double sum = 0.0;
  for (const auto& row : rows) sum += row.w;
  return sum;
}

}  // namespace macroq
