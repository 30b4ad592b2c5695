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

#include "macroq/wigner_rep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "macroq/error.hpp"

namespace macroq {
namespace {

void require_hermitian_flag(const WignerRep& r) {
  if (!r.hermitian()) {
    throw Error(ErrorKind::kHermiticityViolation,
                "representation '" + r.label() + "' is not hermitian");
  }
}

double real_checked(Complex value, double scale, const std::string& what) {
  if (std::abs(value.imag()) > kHermiticityTol * std::max(scale, 1e-300)) {
    throw Error(ErrorKind::kHermiticityViolation,
                what + " has imaginary residual " +
                    std::to_string(value.imag()));
  }
  return value.real();
}

// Sum over ordered pairs of int(f(t1_i) f(t2_j)), plus the sum of magnitudes.
std::pair<Complex, double> ordered_pair_sum(const std::vector<GaussTerm>& a,
                                            const std::vector<GaussTerm>& b) {
  Complex sum{};
  double scale = 0.0;
  for (const auto& ta : a) {
    for (const auto& tb : b) {
      const Complex v = term_integral(term_mul(ta, tb));
      sum += v;
      scale += std::abs(v);
    }
  }
  return {sum, scale};
}

// Self pairs use i <= j; the off-diagonal integrands are equal in pairs.
std::pair<Complex, double> self_pair_sum(const std::vector<GaussTerm>& a) {
  Complex sum{};
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      const double weight = i == j ? 1.0 : 2.0;
      const Complex v = weight * term_integral(term_mul(a[i], a[j]));
      sum += v;
      scale += std::abs(v);
    }
  }
  return {sum, scale};
}

std::pair<Complex, double> bilinear(const std::vector<GaussTerm>& a,
                                    const std::vector<GaussTerm>& b,
                                    bool same) {
  if (same) return self_pair_sum(a);
  // Symmetrized so that swapping the arguments gives bit-identical results.
  const auto [s_ab, m_ab] = ordered_pair_sum(a, b);
  const auto [s_ba, m_ba] = ordered_pair_sum(b, a);
  return {0.5 * (s_ab + s_ba), 0.5 * (m_ab + m_ba)};
}

std::vector<GaussTerm> derivative_terms(const WignerRep& r, Axis axis) {
  std::vector<GaussTerm> out;
  out.reserve(r.terms().size());
  for (const auto& t : r.terms()) out.push_back(term_diff(t, axis));
  return out;
}

}  // namespace

WignerRep WignerRep::with_label(std::string label) const {
  return WignerRep(terms_, std::move(label), hermitian_);
}

WignerRep WignerRep::with_hermitian(bool hermitian) const {
  return WignerRep(terms_, label_, hermitian);
}

WignerRep WignerRep::scaled(Complex s) const {
  std::vector<GaussTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.scaled(s));
  return WignerRep(std::move(out), label_, hermitian_ && s.imag() == 0.0);
}

WignerRep WignerRep::operator+(const WignerRep& o) const {
  std::vector<GaussTerm> out = terms_;
  out.insert(out.end(), o.terms_.begin(), o.terms_.end());
  return WignerRep(std::move(out), label_, hermitian_ && o.hermitian_);
}

WignerRep WignerRep::pruned(double rel) const {
  std::vector<double> bounds;
  bounds.reserve(terms_.size());
  double total = 0.0;
  for (const auto& t : terms_) {
    bounds.push_back(t.envelope_bound());
    total += bounds.back();
  }
  std::vector<GaussTerm> kept;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (bounds[i] >= rel * total && bounds[i] > 0.0) kept.push_back(terms_[i]);
  }
  return WignerRep(std::move(kept), label_, hermitian_);
}

Complex WignerRep::evaluate_complex(double x, double p) const {
  Complex sum{};
  for (const auto& t : terms_) sum += t.evaluate(x, p);
  return sum;
}

Complex rep_trace(const WignerRep& r) {
  Complex sum{};
  for (const auto& t : r.terms()) sum += term_integral(t);
  return sum;
}

double rep_integral(const WignerRep& r) {
  Complex sum{};
  double scale = 0.0;
  for (const auto& t : r.terms()) {
    const Complex v = term_integral(t);
    sum += v;
    scale += std::abs(v);
  }
  return real_checked(sum, std::max(scale, 1.0), "integral of " + r.label());
}

double rep_overlap(const WignerRep& r1, const WignerRep& r2) {
  require_hermitian_flag(r1);
  require_hermitian_flag(r2);
  const auto [sum, scale] = bilinear(r1.terms(), r2.terms(), &r1 == &r2);
  return real_checked(sum, scale, "overlap");
}

double rep_grad_overlap(const WignerRep& r1, const WignerRep& r2) {
  require_hermitian_flag(r1);
  require_hermitian_flag(r2);
  const bool same = &r1 == &r2;
  Complex sum{};
  double scale = 0.0;
  for (Axis axis : {Axis::kX, Axis::kP}) {
    const auto d1 = derivative_terms(r1, axis);
    const auto [s, m] =
        same ? bilinear(d1, d1, true)
             : bilinear(d1, derivative_terms(r2, axis), false);
    sum += s;
    scale += m;
  }
  return real_checked(sum, scale, "gradient overlap");
}

double rep_eval(const WignerRep& r, double x, double p) {
  require_hermitian_flag(r);
  Complex sum{};
  double scale = 0.0;
  for (const auto& t : r.terms()) {
    const Complex v = t.evaluate(x, p);
    sum += v;
    scale += std::abs(v);
  }
  return real_checked(sum, scale, "value of " + r.label());
}

std::pair<double, double> rep_gradient(const WignerRep& r, double x,
                                       double p) {
  require_hermitian_flag(r);
  Complex gx{}, gp{};
  double sx = 0.0, sp = 0.0;
  for (const auto& t : r.terms()) {
    const Complex vx = term_diff(t, Axis::kX).evaluate(x, p);
    const Complex vp = term_diff(t, Axis::kP).evaluate(x, p);
    gx += vx;
    gp += vp;
    sx += std::abs(vx);
    sp += std::abs(vp);
  }
  return {real_checked(gx, sx, "x-gradient"), real_checked(gp, sp, "p-gradient")};
}

WignerRep rep_derivative(const WignerRep& r, Axis axis) {
  return WignerRep(derivative_terms(r, axis), r.label(), r.hermitian());
}

}  // namespace macroq
