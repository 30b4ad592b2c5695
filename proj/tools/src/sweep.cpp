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

#include "macroq/tools/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <variant>

#include <nlohmann/json.hpp>

#include "macroq/error.hpp"
#include "macroq/fock_oracle.hpp"
#include "macroq/grid_oracle.hpp"
#include "macroq/parallel.hpp"
#include "macroq/states.hpp"

namespace macroq::tools {

namespace {

using nlohmann::json;

[[noreturn]] void config_fail(const std::string& msg) {
  throw Error(ErrorKind::kParseError, "sweep config: " + msg);
}

const char* field_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::kV: return "V";
    case SweepParameter::kD: return "d";
    case SweepParameter::kP: return "p";
  }
  return "?";
}

bool applicable(const std::string& type, SweepParameter p) {
  const bool thermal = type == "thermal" || type == "displaced_thermal";
  const bool small_m = type == "rho_m" || type == "rho_small_m";
  switch (p) {
    case SweepParameter::kV: return thermal || small_m || type == "rho_M";
    case SweepParameter::kD: return thermal || type == "rho_M";
    case SweepParameter::kP: return small_m;
  }
  return false;
}

const json& member(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) config_fail(std::string("missing field '") + name + "'");
  return *it;
}

double number(const json& j, const char* name) {
  const json& v = member(j, name);
  if (!v.is_number()) config_fail(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

std::vector<Method> methods_for(SweepMethod m) {
  switch (m) {
    case SweepMethod::kClosedForm: return {Method::kClosedForm};
    case SweepMethod::kGrid: return {Method::kGrid};
    case SweepMethod::kFock: return {Method::kFock};
    case SweepMethod::kAll: return {Method::kClosedForm, Method::kGrid, Method::kFock};
  }
  return {};
}

std::vector<double> log_points(double lo, double hi, int count) {
  std::vector<double> out(count);
  const double a = std::log(lo), b = std::log(hi);
  for (int k = 0; k < count; ++k) {
    out[k] = std::exp(a + (b - a) * k / (count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace

std::vector<double> SweepGrid::points() const {
  if (spacing == Spacing::kLog) return log_points(min, max, count);
  std::vector<double> out(count);
  const double step = (max - min) / (count - 1);
  for (int k = 0; k < count; ++k) out[k] = min + step * k;
  out.back() = max;
  return out;
}

SweepConfig parse_sweep_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    config_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) config_fail("top level must be an object");

  SweepConfig cfg;
  const json& param = member(j, "parameter");
  if (param == "V") {
    cfg.parameter = SweepParameter::kV;
  } else if (param == "d") {
    cfg.parameter = SweepParameter::kD;
  } else if (param == "p") {
    cfg.parameter = SweepParameter::kP;
  } else {
    config_fail("parameter must be one of V, d, p");
  }

  const json& grid = member(j, "grid");
  if (!grid.is_object()) config_fail("grid must be an object");
  cfg.grid.min = number(grid, "min");
  cfg.grid.max = number(grid, "max");
  const json& count = member(grid, "count");
  if (!count.is_number_integer()) config_fail("grid.count must be an integer");
  cfg.grid.count = count.get<int>();
  if (grid.contains("spacing")) {
    const json& s = grid["spacing"];
    if (s == "linear") {
      cfg.grid.spacing = Spacing::kLinear;
    } else if (s == "log") {
      cfg.grid.spacing = Spacing::kLog;
    } else {
      config_fail("grid.spacing must be linear or log");
    }
  }
  if (!(cfg.grid.min < cfg.grid.max)) config_fail("grid.min must be < grid.max");
  if (cfg.grid.count < 2) config_fail("grid.count must be >= 2");
  if (cfg.grid.spacing == Spacing::kLog && cfg.grid.min <= 0) {
    config_fail("log spacing needs grid.min > 0");
  }

  if (j.contains("method")) {
    const json& m = j["method"];
    if (m == "closed_form" || m == "closed") {
      cfg.method = SweepMethod::kClosedForm;
    } else if (m == "grid") {
      cfg.method = SweepMethod::kGrid;
    } else if (m == "fock") {
      cfg.method = SweepMethod::kFock;
    } else if (m == "all") {
      cfg.method = SweepMethod::kAll;
    } else {
      config_fail("method must be closed_form, grid, fock or all");
    }
  }

  json tmpl = member(j, "template");
  if (!tmpl.is_object() || !tmpl.contains("type") || !tmpl["type"].is_string()) {
    config_fail("template must be a state object with a 'type'");
  }
  const std::string type = tmpl["type"].get<std::string>();
  if (!applicable(type, cfg.parameter)) {
    config_fail(std::string("parameter ") + field_name(cfg.parameter) +
                " does not apply to template type '" + type + "'");
  }
  if (!tmpl.contains(field_name(cfg.parameter))) {
    tmpl[field_name(cfg.parameter)] = cfg.grid.min;
  }
  cfg.state_template = parse_state_spec(tmpl.dump());
  return cfg;
}

StateSpec with_parameter(const StateSpec& spec, SweepParameter parameter, double value) {
  StateSpec out = spec;
  std::visit(
      [&](auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, DisplacedThermalSpec> || std::is_same_v<T, RhoMSpec>) {
          if (parameter == SweepParameter::kV) s.variance = value;
          if (parameter == SweepParameter::kD) s.displacement = value;
          if (parameter == SweepParameter::kP) {
            throw Error(ErrorKind::kInvalidParameter, "p does not apply to " + describe(spec));
          }
        } else if constexpr (std::is_same_v<T, RhoSmallMSpec>) {
          if (parameter == SweepParameter::kV) s.variance = value;
          if (parameter == SweepParameter::kP) s.photon_weight = value;
          if (parameter == SweepParameter::kD) {
            throw Error(ErrorKind::kInvalidParameter, "d does not apply to " + describe(spec));
          }
        } else {
          throw Error(ErrorKind::kInvalidParameter,
                      std::string(field_name(parameter)) + " does not apply to " +
                          describe(spec));
        }
      },
      out.value);
  return out;
}

MeasureReport evaluate(const StateSpec& spec, Method method) {
  switch (method) {
    case Method::kClosedForm:
      return report(build_state(spec));
    case Method::kGrid: {
      const WignerRep r = build_state(spec);
      return grid_measures(r, auto_grid(r));
    }
    case Method::kFock:
      return fock_measures(fock_state_matrix_auto(spec), describe(spec));
  }
  throw Error(ErrorKind::kInvalidParameter, "unknown method");
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  const std::vector<double> values = config.grid.points();
  const std::vector<Method> methods = methods_for(config.method);
  std::vector<SweepRow> rows(values.size() * methods.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].param = values[i / methods.size()];
    rows[i].method = methods[i % methods.size()];
  }
  parallel_for(rows.size(), [&](std::size_t i) {
    SweepRow& row = rows[i];
    try {
      row.report = evaluate(with_parameter(config.state_template, config.parameter, row.param),
                            row.method);
      row.ok = true;
    } catch (const Error& e) {
      row.error = e.what();
    }
  });
  return rows;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "param,purity,purity_decay,I,I_plus,chi2,method\n";
  const std::string nan = format_number(std::nan(""));
  for (const SweepRow& row : rows) {
    out << format_number(row.param) << ',';
    if (row.ok) {
      const MeasureReport& r = row.report;
      out << format_number(r.purity) << ',' << format_number(r.purity_decay) << ','
          << format_number(r.I) << ',' << format_number(r.I_plus) << ','
          << format_number(r.chi2);
    } else {
      out << nan << ',' << nan << ',' << nan << ',' << nan << ',' << nan;
    }
    out << ',' << method_name(row.method) << '\n';
  }
}

Fig1Data compute_fig1(double vmax, int points) {
  if (!(vmax > 1.0)) throw Error(ErrorKind::kInvalidParameter, "vmax must be > 1");
  if (points < 2) throw Error(ErrorKind::kInvalidParameter, "points must be >= 2");
  Fig1Data data;
  data.V = log_points(1.0, vmax, points);
  data.I.resize(points);
  data.chi2.resize(points);
  const std::vector<double> probe_v = {1e2, 1e3, 1e4};
  data.probes.resize(probe_v.size());

  parallel_for(points + probe_v.size(), [&](std::size_t i) {
    const double v = i < std::size_t(points) ? data.V[i] : probe_v[i - points];
    const MeasureReport r = report(rho_M(v, kFig1Displacement));
    if (i < std::size_t(points)) {
      data.I[i] = r.I;
      data.chi2[i] = r.chi2;
    } else {
      data.probes[i - points] = {v, r.I, r.chi2};
    }
  });

  data.I_strictly_decreasing = true;
  data.chi2_strictly_increasing = true;
  for (int k = 1; k < points; ++k) {
    if (!(data.I[k] < data.I[k - 1])) data.I_strictly_decreasing = false;
    if (!(data.chi2[k] > data.chi2[k - 1])) data.chi2_strictly_increasing = false;
  }
  return data;
}

void write_fig1_csv(std::ostream& out, const Fig1Data& data) {
  out << "V,I,chi2\n";
  for (std::size_t k = 0; k < data.V.size(); ++k) {
    out << format_number(data.V[k]) << ',' << format_number(data.I[k]) << ','
        << format_number(data.chi2[k]) << '\n';
  }
}

std::string fig1_metadata_json(const Fig1Data& data, double vmax, int points) {
  json probes = json::array();
  for (const Fig1Probe& p : data.probes) {
    probes.push_back({{"V", p.V}, {"I", p.I}, {"chi2", p.chi2},
                      {"I_minus_half", p.I - 0.5}});
  }
  const json meta = {
      {"state", "rho_M"},
      {"d", kFig1Displacement},
      {"vmax", vmax},
      {"points", points},
      {"spacing", "log"},
      {"method", "closed_form"},
      {"I_strictly_decreasing", data.I_strictly_decreasing},
      {"chi2_strictly_increasing", data.chi2_strictly_increasing},
      {"asymptote_probes", probes},
  };
  return meta.dump(2) + "\n";
}

}  // namespace macroq::tools
