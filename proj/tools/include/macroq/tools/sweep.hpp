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

#ifndef MACROQ_TOOLS_SWEEP_HPP_
#define MACROQ_TOOLS_SWEEP_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "macroq/measures.hpp"
#include "macroq/state_spec.hpp"

namespace macroq::tools {

enum class SweepParameter { kV, kD, kP };
enum class Spacing { kLinear, kLog };
enum class SweepMethod { kClosedForm, kGrid, kFock, kAll };

struct SweepGrid {
  double min = 0.0;
  double max = 1.0;
  int count = 2;
  Spacing spacing = Spacing::kLinear;

  /// Endpoints are exact; interior points are min + k*step (or the log analogue).
  std::vector<double> points() const;
};

struct SweepConfig {
  StateSpec state_template;
  SweepParameter parameter = SweepParameter::kV;
  SweepGrid grid;
  SweepMethod method = SweepMethod::kClosedForm;
};

/// Parses the sweep JSON. A template that omits the swept field gets it
/// filled in with grid.min before the StateSpec is validated.
/// Throws Error(kParseError) on any schema or invariant violation.
SweepConfig parse_sweep_config(const std::string& json_text);

/// Copy of spec with the swept field set to value.
StateSpec with_parameter(const StateSpec& spec, SweepParameter parameter, double value);

/// One route on one spec; grid uses auto_grid, fock picks its own cutoff.
MeasureReport evaluate(const StateSpec& spec, Method method);

struct SweepRow {
  double param = 0.0;
  Method method = Method::kClosedForm;
  bool ok = false;
  MeasureReport report;
  std::string error;
};

/// Rows ordered by grid point, then by method; evaluation is parallel.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// %.17g, with "nan" for NaN.
std::string format_number(double v);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct Fig1Probe {
  double V = 0.0;
  double I = 0.0;
  double chi2 = 0.0;
};

struct Fig1Data {
  std::vector<double> V;
  std::vector<double> I;
  std::vector<double> chi2;
  bool I_strictly_decreasing = false;
  bool chi2_strictly_increasing = false;
  std::vector<Fig1Probe> probes;
};

inline constexpr double kFig1Displacement = 1.0;
inline constexpr double kFig1DefaultVmax = 30.0;
inline constexpr int kFig1DefaultPoints = 50;

/// rho_M(V, d=1) on a log grid over [1, vmax], closed form, plus probes at
/// V = 100, 1e3, 1e4.
Fig1Data compute_fig1(double vmax, int points);

void write_fig1_csv(std::ostream& out, const Fig1Data& data);
std::string fig1_metadata_json(const Fig1Data& data, double vmax, int points);

}  // namespace macroq::tools

#endif  // MACROQ_TOOLS_SWEEP_HPP_
