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

#include "macroq/tools/verification.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "macroq/error.hpp"
#include "macroq/fock_oracle.hpp"
#include "macroq/grid_oracle.hpp"
#include "macroq/parallel.hpp"
#include "macroq/states.hpp"
#include "macroq/tools/sweep.hpp"

namespace macroq::tools {

namespace {

constexpr double kPi = std::numbers::pi;

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

void expect_near(double got, double want, double tol, const std::string& what) {
  if (!(std::abs(got - want) <= tol)) {
    throw CheckFailure(what + fmt(": got %.15g, want %.15g (tol %.1e)", got, want, tol));
  }
}

void expect_rel(double got, double want, double rel, const std::string& what) {
  expect_near(got, want, rel * std::abs(want), what);
}

// Agreement of (P, dP) between two routes. dP is compared on the scale of P
// when it vanishes (coherent states).
void expect_route_match(const MeasureReport& a, const MeasureReport& b, double rel,
                        const std::string& what) {
  expect_rel(a.purity, b.purity, rel, what + " purity");
  expect_near(a.purity_decay, b.purity_decay,
              rel * std::max(std::abs(b.purity_decay), b.purity), what + " purity_decay");
}

struct NamedSpec {
  StateSpec spec;
  bool pure;
};

std::vector<NamedSpec> library_specs() {
  return {
      {{CoherentSpec{0.0}}, true},
      {{CoherentSpec{1.3}}, true},
      {{CoherentSpec{{0.5, -0.4}}}, true},
      {{FockSpec{0}}, true},
      {{FockSpec{1}}, true},
      {{FockSpec{2}}, true},
      {{FockSpec{3}}, true},
      {{FockSpec{4}}, true},
      {{FockSpec{5}}, true},
      {{CatSpec{1.0, Parity::kEven}}, true},
      {{CatSpec{1.5, Parity::kOdd}}, true},
      {{CatSpec{{0.4, 0.7}, Parity::kEven}}, true},
      {{DisplacedThermalSpec{2.0, 1.0}}, false},
      {{DisplacedThermalSpec{5.0, 2.0}}, false},
      {{DisplacedThermalSpec{100.0, 0.0}}, false},
      {{RhoMSpec{3.0, 1.0}}, false},
      {{RhoMSpec{10.0, 1.0}}, false},
      {{RhoMSpec{30.0, 0.5}}, false},
      {{RhoMSpec{1e4, 1.0}}, false},
      {{RhoSmallMSpec{0.3, 5.0}}, false},
      {{RhoSmallMSpec{0.1, 1e6}}, false},
  };
}

std::vector<StateSpec> route_specs() {
  return {{CoherentSpec{1.3}}, {FockSpec{0}}, {FockSpec{1}}, {FockSpec{2}},
          {FockSpec{3}}, {CatSpec{1.0, Parity::kEven}}, {RhoMSpec{3.0, 1.0}},
          {RhoMSpec{10.0, 1.0}}, {RhoSmallMSpec{0.3, 5.0}}};
}

std::vector<double> log_points_for_fig1() {
  return SweepGrid{1.0, kFig1DefaultVmax, kFig1DefaultPoints, Spacing::kLog}.points();
}

// Criteria 1-5 states, for the positivity sweep.
std::vector<WignerRep> acceptance_states() {
  std::vector<WignerRep> out = {fock(1)};
  for (double v : {1.0, 2.0, 5.0, 10.0, 100.0}) {
    for (double d : {0.0, 1.0, 3.0}) out.push_back(displaced_thermal(v, d));
  }
  for (double v : log_points_for_fig1()) out.push_back(rho_M(v, 1.0));
  for (double v : {1e2, 1e4}) out.push_back(rho_M(v, 1.0));
  for (double p : SweepGrid{0.01, 1.0, 20, Spacing::kLog}.points()) {
    out.push_back(rho_small_m(p, 1e6));
  }
  out.push_back(rho_small_m(0.0, 1e6));
  for (double p : {0.03, 0.1, 0.3}) out.push_back(rho_small_m(p, 1e6));
  for (const auto& s : route_specs()) out.push_back(build_state(s));
  return out;
}

class Suite {
 public:
  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = body();
      r.passed = true;
    } catch (const CheckFailure& e) {
      r.detail = e.what();
    } catch (const Error& e) {
      r.detail = std::string("unexpected ") + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("unexpected exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(r));
  }

  std::vector<CheckResult> results;
};

std::string fig1_text(unsigned workers) {
  set_worker_override(workers);
  std::ostringstream os;
  try {
    const Fig1Data data = compute_fig1(kFig1DefaultVmax, kFig1DefaultPoints);
    write_fig1_csv(os, data);
    os << fig1_metadata_json(data, kFig1DefaultVmax, kFig1DefaultPoints);
  } catch (...) {
    set_worker_override(0);
    throw;
  }
  set_worker_override(0);
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_verification(VerifyLevel level, const ReportFn& engine) {
  const bool full = level == VerifyLevel::kFull;
  Suite suite;

  // ---- algebra and representation
  suite.run("moment_recurrence", [] {
    const SymMatrix2 a{1.3, 0.4, 2.1};
    const Vec2 b{{0.2, 0.1}, {-0.3, 0.05}};
    const double det = (a.xx * a.pp - a.xp * a.xp).real();
    const Complex s11 = a.pp / det, s12 = -a.xp / det;
    const Complex mu = s11 * b.x + s12 * b.p;
    const Complex m0 = gaussian_moment(a, b, 0, 0);
    const Complex m2 = gaussian_moment(a, b, 2, 0);
    const Complex want = (mu * mu + s11) * m0;
    expect(std::abs(m2 - want) <= 1e-12 * std::abs(want), "E[x^2] != (mu^2 + Sigma) N");
    return std::string();
  });

  suite.run("bilinearity", [] {
    const WignerRep r1 = fock(2), r2 = rho_M(3.0, 1.0), r3 = cat(1.0, Parity::kOdd);
    for (double s : {0.37, -1.9, 4.2}) {
      const WignerRep mixed = r1.scaled(s) + r2;
      const double o = rep_overlap(mixed, r3);
      const double want = s * rep_overlap(r1, r3) + rep_overlap(r2, r3);
      expect_near(o, want, 1e-12 * std::max(1.0, std::abs(want)), "rep_overlap");
      const double g = rep_grad_overlap(mixed, r3);
      const double gwant = s * rep_grad_overlap(r1, r3) + rep_grad_overlap(r2, r3);
      expect_near(g, gwant, 1e-12 * std::max(1.0, std::abs(gwant)), "rep_grad_overlap");
    }
    return std::string();
  });

  suite.run("state_normalization_and_hermiticity", [] {
    for (const auto& [spec, pure] : library_specs()) {
      const WignerRep r = build_state(spec);
      expect_near(rep_integral(r), 1.0, 1e-10, describe(spec) + " integral");
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
          const Complex w = r.evaluate_complex(-2.0 + i, -2.0 + j);
          expect(std::abs(w.imag()) < 1e-10, describe(spec) + " imaginary residual");
        }
      }
    }
    return std::string();
  });

  suite.run("grad_overlap_nonnegative", [] {
    for (const auto& [spec, pure] : library_specs()) {
      const WignerRep r = build_state(spec);
      expect(rep_grad_overlap(r, r) >= 0.0, describe(spec));
    }
    return std::string();
  });

  suite.run("rho_M_unit_variance_is_even_cat", [engine] {
    for (double d : {0.5, 1.0, 2.0}) {
      const MeasureReport a = engine(rho_M(1.0, d));
      const MeasureReport b = engine(cat(d, Parity::kEven));
      const std::string tag = fmt("d=%g", d);
      expect_near(a.purity, b.purity, 1e-10, tag + " purity");
      expect_near(a.purity_decay, b.purity_decay, 1e-10, tag + " purity_decay");
      expect_near(a.chi2, b.chi2, 1e-10, tag + " chi2");
    }
    return std::string();
  });

  suite.run("rho_m_decomposition", [] {
    const WignerRep one = fock(1);
    for (double v : {5.0, 40.0}) {
      const WignerRep th = displaced_thermal(v, 0.0);
      for (double p : {0.2, 0.5, 0.9}) {
        const double want = p * p * purity(one) +
                            2 * p * (1 - p) * kPi * rep_overlap(one, th) +
                            (1 - p) * (1 - p) * purity(th);
        expect_near(purity(rho_small_m(p, v)), want, 1e-12, fmt("p=%g V=%g", p, v));
      }
    }
    return std::string();
  });

  suite.run("displacement_invariance", [engine] {
    for (double v : {2.0, 5.0}) {
      const MeasureReport base = engine(displaced_thermal(v, 0.0));
      for (double d : {1.0, 3.0}) {
        const MeasureReport r = engine(displaced_thermal(v, d));
        const std::string tag = fmt("V=%g d=%g", v, d);
        expect_near(r.purity, base.purity, 1e-9, tag + " purity");
        expect_near(r.purity_decay, base.purity_decay, 1e-9, tag + " purity_decay");
        expect_near(r.chi2, base.chi2, 1e-9, tag + " chi2");
      }
    }
    return std::string();
  });

  // ---- measures
  suite.run("pure_state_relation", [engine] {
    for (const auto& [spec, pure] : library_specs()) {
      if (!pure) continue;
      const MeasureReport r = engine(build_state(spec));
      expect_near(r.purity, 1.0, 1e-9, describe(spec) + " purity");
      expect_near(r.chi2, 2.0 * (1.0 + 2.0 * r.I), 1e-8, describe(spec) + " chi2");
    }
    return std::string();
  });

  suite.run("chi2_route_agreement", [engine] {
    for (const auto& [spec, pure] : library_specs()) {
      const WignerRep r = build_state(spec);
      const double direct = 0.5 * rep_grad_overlap(r, r) / rep_overlap(r, r);
      const MeasureReport m = engine(r);
      const double via_purity = 2.0 * (1.0 - m.purity_decay / m.purity);
      const double scale = std::max(1.0, std::abs(direct));
      expect_near(m.chi2, direct, 1e-10 * scale, describe(spec) + " gradient route");
      expect_near(m.chi2, via_purity, 1e-10 * scale, describe(spec) + " purity route");
    }
    return std::string();
  });

  suite.run("sign_structure", [engine] {
    for (const auto& [spec, pure] : library_specs()) {
      const MeasureReport m = engine(build_state(spec));
      expect(m.chi2 >= 0.0, describe(spec) + " chi2 < 0");
      expect(m.I_plus >= -1e-12, describe(spec) + fmt(" I_plus = %.3e", m.I_plus));
      if (m.I < -1e-12) expect(!pure, describe(spec) + " pure state with I < 0");
    }
    return std::string();
  });

  suite.run("rho_m_I_increasing_in_p", [engine] {
    double previous = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 20; ++k) {
      const double p = k / 20.0;
      const double value = engine(rho_small_m(p, 1e6)).I;
      expect(value > previous, fmt("not increasing at p=%g", p));
      previous = value;
    }
    return std::string();
  });

  // ---- oracles
  suite.run("grid_convergence_order", [] {
    const WignerRep vac = coherent(0.0);
    const double coarse = std::abs(grid_measures(vac, GridSpec{6.0, 65}).purity - 1.0);
    const double fine = std::abs(grid_measures(vac, GridSpec{6.0, 129}).purity - 1.0);
    expect(fine * 8.0 <= coarse, fmt("error ratio %.3g < 8", coarse / fine));
    return fmt("ratio %.1f", coarse / fine);
  });

  suite.run("grid_vs_engine", [engine] {
    for (const auto& spec : route_specs()) {
      const WignerRep r = build_state(spec);
      expect_route_match(grid_measures(r, auto_grid(r)), engine(r), 1e-6, describe(spec));
    }
    return std::string();
  });

  if (full) {
    suite.run("fock_vs_engine", [engine] {
      for (const auto& spec : route_specs()) {
        const FockMatrix m = fock_state_matrix_auto(spec, 1e-10);
        expect(m.tail_bound() <= 1e-10, describe(spec) + " tail");
        expect_route_match(fock_measures(m, describe(spec)), engine(build_state(spec)), 1e-6,
                           describe(spec));
      }
      return std::string();
    });

    suite.run("fock_truncation_monotone", [] {
      for (const StateSpec& spec :
           {StateSpec{CoherentSpec{2.0}}, StateSpec{RhoMSpec{3.0, 1.0}},
            StateSpec{DisplacedThermalSpec{4.0, 0.0}}}) {
        // Once the tail is below rounding, |trace - 1| is summation noise.
        constexpr double kRoundingFloor = 1e-14;
        double previous = std::numeric_limits<double>::infinity();
        for (int n_max : {40, 60, 80, 100, 120}) {
          const FockMatrix m = fock_state_matrix(spec, n_max);
          const double defect = std::abs(m.elements().trace().real() - 1.0);
          expect(defect <= std::max(previous, kRoundingFloor),
                 describe(spec) + fmt(" at n_max=%d: %.3e > %.3e", n_max, defect, previous));
          previous = defect;
        }
      }
      return std::string();
    });

    suite.run("wigner_vs_displaced_parity", [] {
      const std::vector<StateSpec> specs = {
          {CoherentSpec{{0.5, -0.4}}}, {FockSpec{2}}, {DisplacedThermalSpec{3.0, 1.0}},
          {RhoMSpec{3.0, 1.0}}, {RhoMSpec{10.0, 1.0}}, {RhoSmallMSpec{0.4, 6.0}},
          {CatSpec{1.0, Parity::kOdd}}};
      double worst = 0.0;
      for (const auto& spec : specs) {
        const WignerRep r = build_state(spec);
        // n_max = 80 unless the state needs more to stay below the tail limit.
        const FockMatrix m = fock_state_matrix(
            spec, std::max(80, fock_state_matrix_auto(spec, 1e-10).n_max()));
        for (int i = 0; i < 7; ++i) {
          for (int j = 0; j < 7; ++j) {
            const double x = -3.0 + i, p = -3.0 + j;
            const double err = std::abs(rep_eval(r, x, p) - fock_wigner_point(m, x, p));
            expect(err < 1e-8, describe(spec) + fmt(" at (%g,%g): %.2e", x, p, err));
            worst = std::max(worst, err);
          }
        }
      }
      return fmt("max |dW| %.1e", worst);
    });
  }

  // ---- acceptance criteria
  suite.run("acceptance_1_single_photon", [engine] {
    const WignerRep f1 = fock(1);
    const MeasureReport c = engine(f1);
    expect_near(c.chi2, 6.0, 1e-8, "closed-form chi2");
    expect_near(c.I, 1.0, 1e-8, "closed-form I");
    expect_near(grid_measures(f1, auto_grid(f1)).chi2, 6.0, 1e-6, "grid chi2");
    return std::string();
  });

  suite.run("acceptance_2_thermal_family", [engine] {
    for (double v : {1.0, 2.0, 5.0, 10.0, 100.0}) {
      const MeasureReport base = engine(displaced_thermal(v, 0.0));
      const std::string tag = fmt("V=%g", v);
      expect_rel(base.purity, 1.0 / v, 1e-8, tag + " P");
      expect_rel(base.chi2, 2.0 / v, 1e-8, tag + " chi2");
      if (v == 1.0) {
        expect_near(base.I, 0.0, 1e-12, tag + " I");
      } else {
        expect_rel(base.I, -(v - 1) / (2 * v * v), 1e-8, tag + " I");
      }
      for (double d : {1.0, 3.0}) {
        const MeasureReport r = engine(displaced_thermal(v, d));
        expect_near(r.purity, base.purity, 1e-9, tag + fmt(" d=%g P", d));
        expect_near(r.chi2, base.chi2, 1e-9, tag + fmt(" d=%g chi2", d));
        expect_near(r.I, base.I, 1e-9, tag + fmt(" d=%g I", d));
      }
    }
    return std::string();
  });

  suite.run("acceptance_3_fig1", [engine] {
    // Every sub-claim is evaluated so the detail shows the full picture.
    std::vector<std::string> failures;
    double prev_i = std::numeric_limits<double>::infinity();
    double prev_c = -std::numeric_limits<double>::infinity();
    double first_i_rise = 0.0, first_c_drop = 0.0;
    for (double v : log_points_for_fig1()) {
      const MeasureReport r = engine(rho_M(v, 1.0));
      if (!(r.I < prev_i) && first_i_rise == 0.0) first_i_rise = v;
      if (!(r.chi2 > prev_c) && first_c_drop == 0.0) first_c_drop = v;
      prev_i = r.I;
      prev_c = r.chi2;
    }
    if (first_i_rise > 0) failures.push_back(fmt("I rises at V=%.4g", first_i_rise));
    if (first_c_drop > 0) failures.push_back(fmt("chi2 falls at V=%.4g", first_c_drop));
    const double i_far = engine(rho_M(1e4, 1.0)).I;
    if (!(std::abs(i_far - 0.5) < 0.005)) failures.push_back(fmt("I(1e4)=%.6f", i_far));
    const WignerRep c = cat(1.0, Parity::kEven);
    const double quad = grid_measures(c, auto_grid(c)).I;
    const double i_one = engine(rho_M(1.0, 1.0)).I;
    if (!(std::abs(i_one - quad) <= 1e-6)) {
      failures.push_back(fmt("I(1)=%.9f vs cat quadrature %.9f", i_one, quad));
    }
    const double chi_100 = engine(rho_M(100.0, 1.0)).chi2;
    if (!(chi_100 >= 85.0 && chi_100 <= 115.0)) {
      failures.push_back(fmt("chi2(100)=%.4f", chi_100));
    }
    std::string detail;
    for (const auto& f : failures) detail += (detail.empty() ? "" : "; ") + f;
    expect(failures.empty(), detail);
    return fmt("I(1e4)=%.6f chi2(100)=%.3f", i_far, chi_100);
  });

  suite.run("acceptance_4_rho_m", [engine] {
    constexpr double kV = 1e6;
    // p = 1 is the single photon, where chi2 = 6 sits on the closed upper edge.
    constexpr double kEdge = 1e-12;
    for (double p : SweepGrid{0.01, 1.0, 20, Spacing::kLog}.points()) {
      const double chi = engine(rho_small_m(p, kV)).chi2;
      expect(chi >= 5.8 - kEdge && chi <= 6.0 + kEdge, fmt("chi2(p=%g) = %.17g", p, chi));
    }
    for (double p : {0.03, 0.1, 0.3}) {
      expect_rel(engine(rho_small_m(p, kV)).I, p * p, 0.02, fmt("I(p=%g)", p));
    }
    const MeasureReport zero = engine(rho_small_m(0.0, kV));
    expect_rel(zero.chi2, 2.0 / kV, 1e-8, "chi2(p=0)");
    expect_rel(zero.I, -(kV - 1) / (2 * kV * kV), 1e-8, "I(p=0)");
    return std::string();
  });

  suite.run(full ? "acceptance_5_triple_route" : "acceptance_5_triple_route[grid-only]",
            [engine, full] {
              for (const auto& spec : route_specs()) {
                const WignerRep r = build_state(spec);
                const MeasureReport closed = engine(r);
                expect_route_match(grid_measures(r, auto_grid(r)), closed, 1e-6,
                                   describe(spec) + " grid");
                if (full) {
                  const FockMatrix m = fock_state_matrix_auto(spec, 1e-10);
                  expect_route_match(fock_measures(m, describe(spec)), closed, 1e-6,
                                     describe(spec) + " fock");
                }
              }
              return std::string();
            });

  suite.run("acceptance_6_identities", [engine] {
    std::mt19937_64 rng(20260514);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::vector<NamedSpec> pool = library_specs();
    for (int trial = 0; trial < 50; ++trial) {
      MixtureSpec mix;
      const int parts = 2 + trial % 3;
      double total = 0.0;
      for (int k = 0; k < parts; ++k) {
        const double w = 0.05 + u(rng);
        total += w;
        mix.components.push_back({w, pool[rng() % pool.size()].spec});
      }
      for (auto& c : mix.components) c.weight /= total;
      const MeasureReport m = engine(build_state({mix}));
      const std::string tag = fmt("mixture #%d", trial);
      expect_near(m.chi2, 2.0 * (1.0 - m.purity_decay / m.purity), 1e-10, tag + " chi2");
      expect_near(m.I_plus, m.I + m.purity / 2.0, 1e-10, tag + " I_plus");
    }
    for (const auto& [spec, pure] : library_specs()) {
      if (!pure) continue;
      const MeasureReport m = engine(build_state(spec));
      expect_near(m.chi2, 2.0 * (1.0 + 2.0 * m.I), 1e-8, describe(spec) + " pure relation");
    }
    return std::string();
  });

  suite.run("acceptance_7_I_plus_positive", [engine] {
    double lowest = std::numeric_limits<double>::infinity();
    for (const WignerRep& r : acceptance_states()) {
      const double v = engine(r).I_plus;
      expect(v >= -1e-12, r.label() + fmt(" I_plus = %.3e", v));
      lowest = std::min(lowest, v);
    }
    return fmt("min I_plus %.3e", lowest);
  });

  suite.run("acceptance_8_determinism", [] {
    const std::string one = fig1_text(1);
    const std::string four = fig1_text(4);
    expect(one == four, "fig1 output differs between 1 and 4 workers");
    return std::string();
  });

  return suite.results;
}

void print_check_table(std::ostream& out, const std::vector<CheckResult>& results) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size(), ' ')
        << fmt("  %7.3fs", r.seconds);
    if (!r.detail.empty()) out << "  " << r.detail;
    out << '\n';
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
}

}  // namespace macroq::tools
