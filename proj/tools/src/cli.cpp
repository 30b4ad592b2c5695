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

#include "macroq/tools/cli.hpp"

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "macroq/error.hpp"
#include "macroq/states.hpp"
#include "macroq/tools/sweep.hpp"

namespace macroq::tools {

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot write " + path);
  out << text;
  if (!out.flush()) throw IoFailure("write failed for " + path);
}

std::string report_json(const MeasureReport& r) {
  nlohmann::ordered_json j;
  j["purity"] = r.purity;
  j["purity_decay"] = r.purity_decay;
  j["I"] = r.I;
  j["I_plus"] = r.I_plus;
  j["chi2"] = r.chi2;
  j["method"] = method_name(r.method);
  j["state_label"] = r.state_label;
  return j.dump();
}

int cmd_measure(const std::string& spec_file, const std::string& method_flag,
                const ReportFn& engine, std::ostream& out) {
  const StateSpec spec = parse_state_spec(read_file(spec_file));
  MeasureReport r;
  if (method_flag == "closed") {
    r = engine(build_state(spec));
  } else if (method_flag == "grid") {
    r = evaluate(spec, Method::kGrid);
  } else {
    r = evaluate(spec, Method::kFock);
  }
  out << report_json(r) << '\n';
  return kExitOk;
}

int cmd_sweep(const std::string& config_file, const std::string& out_file, std::ostream& err) {
  const SweepConfig cfg = parse_sweep_config(read_file(config_file));
  const std::vector<SweepRow> rows = run_sweep(cfg);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  write_file(out_file, csv.str());
  int failed = 0;
  for (const SweepRow& row : rows) {
    if (row.ok) continue;
    ++failed;
    err << "warning: param=" << format_number(row.param) << " method="
        << method_name(row.method) << ": " << one_line(row.error) << '\n';
  }
  return failed > 0 ? kExitPointsFailed : kExitOk;
}

int cmd_fig1(double vmax, int points, const std::string& out_file) {
  const Fig1Data data = compute_fig1(vmax, points);
  std::ostringstream csv;
  write_fig1_csv(csv, data);
  write_file(out_file, csv.str());
  write_file(out_file + ".meta.json", fig1_metadata_json(data, vmax, points));
  return kExitOk;
}

int cmd_verify(const std::string& level, const ReportFn& engine, std::ostream& out,
               std::ostream& err) {
  const auto results =
      run_verification(level == "quick" ? VerifyLevel::kQuick : VerifyLevel::kFull, engine);
  print_check_table(out, results);
  std::string failed;
  for (const auto& r : results) {
    if (r.passed) continue;
    if (!failed.empty()) failed += ", ";
    failed += r.name;
  }
  if (failed.empty()) return kExitOk;
  err << "error: VerifyFailed: " << failed << '\n';
  return kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const ReportFn& engine) {
  CLI::App app{"Macroscopic-quantumness measures for continuous-variable states", "macroq"};
  app.require_subcommand(1);

  std::string spec_file, method = "closed";
  CLI::App* measure = app.add_subcommand("measure", "Evaluate measures for one state");
  measure->add_option("--spec", spec_file, "StateSpec JSON file")->required();
  measure->add_option("--method", method, "closed | grid | fock")
      ->check(CLI::IsMember({"closed", "grid", "fock"}));

  std::string config_file, out_file;
  CLI::App* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
  sweep->add_option("--config", config_file, "SweepConfig JSON file")->required();
  sweep->add_option("--out", out_file, "CSV output path")->required();

  double vmax = kFig1DefaultVmax;
  int points = kFig1DefaultPoints;
  CLI::App* fig1 = app.add_subcommand("fig1", "I and chi2 against V for rho_M with d = 1");
  fig1->add_option("--vmax", vmax, "Largest V");
  fig1->add_option("--points", points, "Number of log-spaced points");
  fig1->add_option("--out", out_file, "CSV output path")->required();

  std::string level = "full";
  CLI::App* verify = app.add_subcommand("verify", "Run the invariant and acceptance suite");
  verify->add_option("--level", level, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << one_line(e.what()) << '\n';
    return kExitParseError;
  }

  if (*fig1 && (!(vmax > 1.0) || points < 2)) {
    err << "error: UsageError: fig1 needs --vmax > 1 and --points >= 2\n";
    return kExitParseError;
  }

  try {
    if (*measure) return cmd_measure(spec_file, method, engine, out);
    if (*sweep) return cmd_sweep(config_file, out_file, err);
    if (*fig1) return cmd_fig1(vmax, points, out_file);
    return cmd_verify(level, engine, out, err);
  } catch (const IoFailure& e) {
    err << "error: IoError: " << one_line(e.what()) << '\n';
    return kExitIoError;
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return e.kind() == ErrorKind::kParseError ? kExitParseError : kExitEngineError;
  }
}

}  // namespace macroq::tools
