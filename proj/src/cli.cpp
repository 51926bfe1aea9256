// Copyright 2026 The Clonesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clonesim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "clonesim/analysis.hpp"
#include "clonesim/circuitlang.hpp"
#include "clonesim/ugates.hpp"

namespace clonesim::cli {

namespace {

using nlohmann::json;

const char* variant_name(PcVariant v) {
  return v == PcVariant::kAnchored ? "anchored" : "as-printed";
}

std::vector<double> uniform_grid(int points) {
  std::vector<double> grid(static_cast<std::size_t>(points), 0.0);
  for (int i = 0; i < points; ++i) grid[std::size_t(i)] = double(i) / double(points - 1);
  return grid;
}

std::string sanitize_field(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& csv, const json& j) {
  if (cfg.format == OutputFormat::kCsv)
    out << csv;
  else
    out << j.dump(2) << "\n";
}

}  // namespace

std::string format_fixed9(double v) {
  if (std::abs(v) < 5e-10) v = 0.0;  // avoid "-0.000000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

int cmd_sweep_concurrence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.grid < 2) {
    err << "error: grid resolution must be >= 2\n";
    return kExitConfig;
  }
  const SweepTable table = cnot_concurrence_sweep(uniform_grid(cfg.grid));

  double max_abs_error = 0.0;
  std::ostringstream csv;
  csv << "x,concurrence_measured,concurrence_formula,abs_error\n";
  json rows = json::array();
  for (const SweepRow& row : table.rows) {
    const double measured = row.values[0];
    const double formula = row.values[1];
    const double abs_error = std::abs(measured - formula);
    max_abs_error = std::max(max_abs_error, abs_error);
    csv << format_fixed9(row.parameter) << ',' << format_fixed9(measured) << ','
        << format_fixed9(formula) << ',' << format_fixed9(abs_error) << "\n";
    rows.push_back({{"x", row.parameter},
                    {"concurrence_measured", measured},
                    {"concurrence_formula", formula},
                    {"abs_error", abs_error}});
  }
  emit(cfg, out, csv.str(),
       json{{"parameter", "x"}, {"rows", rows}, {"max_abs_error", max_abs_error}});
  return max_abs_error <= 1e-9 ? kExitOk : kExitAssertFailed;
}

int cmd_fig2(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n_max < 1 || cfg.n_max > 50) {
    err << "error: --nmax must lie in [1, 50]\n";
    return kExitConfig;
  }
  const std::vector<Fig2Row> rows = figure2_table(cfg.n_max, cfg.pc_variant);

  bool ordering_violated = false;
  std::ostringstream csv;
  csv << "N,F_universal,F_pc_bound,variant\n";
  json jrows = json::array();
  for (const Fig2Row& row : rows) {
    ordering_violated |= row.f_pc_bound <= row.f_universal;
    csv << row.n << ',' << format_fixed9(row.f_universal) << ',' << format_fixed9(row.f_pc_bound)
        << ',' << variant_name(cfg.pc_variant) << "\n";
    jrows.push_back({{"N", row.n},
                     {"F_universal", row.f_universal},
                     {"F_pc_bound", row.f_pc_bound},
                     {"variant", variant_name(cfg.pc_variant)}});
  }
  if (ordering_violated)
    err << "warning: " << variant_name(cfg.pc_variant)
        << " bound falls below the universal fidelity at small N\n";
  emit(cfg, out, csv.str(), json{{"variant", variant_name(cfg.pc_variant)}, {"rows", jrows}});
  return kExitOk;
}

int cmd_clone(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.clone_n < 1 || cfg.clone_m <= cfg.clone_n || cfg.clone_m > 8) {
    err << "error: clone requires 1 <= N < M <= 8\n";
    return kExitConfig;
  }
  const Ket psi = real_ket(RealQubitState(cfg.clone_alpha));
  CloneOutput cloned{ComplexMatrix{}, 0, 0};
  try {
    cloned = universal_clone(psi.projector(), cfg.clone_n, cfg.clone_m);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitConfig;
  }
  const double measured = measured_clone_fidelity(cloned, psi, 0);
  const bool has_formula = cfg.clone_m == cfg.clone_n + 1;
  const double formula = has_formula ? universal_fidelity_formula(cfg.clone_n) : 0.0;

  std::ostringstream csv;
  csv << "N,M,alpha,fidelity_measured,fidelity_closed_form,abs_difference\n";
  csv << cfg.clone_n << ',' << cfg.clone_m << ',' << format_fixed9(cfg.clone_alpha) << ','
      << format_fixed9(measured) << ',';
  if (has_formula)
    csv << format_fixed9(formula) << ',' << format_fixed9(std::abs(measured - formula));
  else
    csv << ',';
  csv << "\n";

  json j{{"N", cfg.clone_n},
         {"M", cfg.clone_m},
         {"alpha", cfg.clone_alpha},
         {"fidelity_measured", measured}};
  j["fidelity_closed_form"] = has_formula ? json(formula) : json(nullptr);
  j["abs_difference"] = has_formula ? json(std::abs(measured - formula)) : json(nullptr);
  emit(cfg, out, csv.str(), j);
  return kExitOk;
}

int cmd_budget(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) {
    err << "error: --delta must lie in (0, 1)\n";
    return kExitConfig;
  }
  const int n = toffoli_budget(cfg.delta);
  const double f = universal_fidelity_formula(n);

  std::ostringstream csv;
  csv << "delta,N,F_universal\n";
  csv << format_fixed9(cfg.delta) << ',' << n << ',' << format_fixed9(f) << "\n";
  emit(cfg, out, csv.str(), json{{"delta", cfg.delta}, {"N", n}, {"F_universal", f}});
  return kExitOk;
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream file(cfg.circuit_path, std::ios::binary);
  if (!file) {
    err << "error: cannot read circuit file '" << cfg.circuit_path << "'\n";
    return kExitConfig;
  }
  std::ostringstream content;
  content << file.rdbuf();

  const lang::ParseResult parsed = lang::parse(content.str());
  if (!parsed.ok()) {
    const lang::ParseError& e = *parsed.error;
    err << cfg.circuit_path << ":" << e.line << ":" << e.column << ": parse error ["
        << lang::error_code_name(e.code) << "]: " << e.message << " (expected " << e.expected
        << ")\n";
    return kExitParse;
  }

  lang::ExecutionReport report;
  try {
    report = lang::execute(*parsed.program);
  } catch (const lang::RuntimeError& ex) {
    err << cfg.circuit_path << ":" << ex.line() << ": runtime error: " << ex.what() << "\n";
    return kExitRuntime;
  }

  std::ostringstream csv;
  csv << "type,line,name,args,measured,target,tol,status\n";
  json jexpects = json::array();
  for (const lang::ExpectOutcome& e : report.expects) {
    std::string args;
    for (std::size_t i = 0; i < e.qubits.size(); ++i)
      args += (i ? " q" : "q") + std::to_string(e.qubits[i]);
    csv << "expect," << e.line << ',' << e.name << ',' << args << ','
        << format_fixed9(e.measured) << ',' << (e.target ? format_fixed9(*e.target) : "") << ','
        << format_fixed9(e.tol) << ',' << (e.passed ? "pass" : "fail") << "\n";
    json je{{"line", e.line}, {"name", e.name},       {"qubits", e.qubits},
            {"measured", e.measured}, {"tol", e.tol}, {"passed", e.passed}};
    je["target"] = e.target ? json(*e.target) : json(nullptr);
    jexpects.push_back(je);
  }
  csv << "stat,,zeta,," << format_fixed9(report.zeta) << ",,,\n";
  if (report.gate_fidelity)
    csv << "stat,,gate_fidelity,," << format_fixed9(*report.gate_fidelity) << ",,,\n";
  csv << "stat,,f_zeta,," << format_fixed9(report.f_zeta) << ",,,\n";
  for (const std::string& note : report.notes) csv << "note,,,," << sanitize_field(note) << ",,,\n";

  json j{{"qubits", report.qubit_count},
         {"expects", jexpects},
         {"zeta", report.zeta},
         {"zeta_per_qubit", report.universal_touches},
         {"f_zeta", report.f_zeta},
         {"notes", report.notes},
         {"all_passed", report.all_passed}};
  j["gate_fidelity"] = report.gate_fidelity ? json(*report.gate_fidelity) : json(nullptr);
  emit(cfg, out, csv.str(), j);
  return report.all_passed ? kExitOk : kExitAssertFailed;
}

}  // namespace clonesim::cli
