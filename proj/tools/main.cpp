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

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "clonesim/cli.hpp"

namespace {

using clonesim::PcVariant;
using clonesim::cli::OutputFormat;
using clonesim::cli::RunConfig;

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::string& format, std::string& variant) {
  cmd->add_option("--out", cfg.out_path, "Output path (default: stdout)");
  cmd->add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--grid", cfg.grid, "Sweep grid resolution");
  cmd->add_option("--pc-variant", variant, "Main-circle bound variant: anchored or as-printed")
      ->check(CLI::IsMember({"anchored", "as-printed"}));
  cmd->add_option("--nmax", cfg.n_max, "Largest N for table commands");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-matrix simulator for cloning-based basis-independent gates"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "csv";
  std::string variant = "anchored";

  CLI::App* sweep = app.add_subcommand(
      "sweep-concurrence", "Entanglement decay of the basis C-NOT on pseudo-pure inputs");
  add_common_flags(sweep, cfg, format, variant);

  CLI::App* fig2 = app.add_subcommand(
      "fig2", "Cloning fidelity vs control count: universal value and main-circle bound");
  add_common_flags(fig2, cfg, format, variant);

  CLI::App* clone = app.add_subcommand("clone", "Universal N -> M cloning of a main-circle state");
  add_common_flags(clone, cfg, format, variant);
  clone->add_option("--n", cfg.clone_n, "Number of identical inputs")->required();
  clone->add_option("--m", cfg.clone_m, "Number of output copies")->required();
  clone->add_option("--alpha", cfg.clone_alpha, "Main-circle angle of the input state");

  CLI::App* budget = app.add_subcommand(
      "budget", "Smallest control count with per-gate loss below delta");
  add_common_flags(budget, cfg, format, variant);
  budget->add_option("--delta", cfg.delta, "Loss budget in (0, 1)")->required();

  CLI::App* run = app.add_subcommand("run", "Parse and execute a circuit file");
  add_common_flags(run, cfg, format, variant);
  run->add_option("file", cfg.circuit_path, "Circuit file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return clonesim::cli::kExitConfig;
  }

  cfg.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  cfg.pc_variant = variant == "as-printed" ? PcVariant::kAsPrinted : PcVariant::kAnchored;

  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!cfg.out_path.empty()) {
    out_file.open(cfg.out_path, std::ios::binary);
    if (!out_file) {
      std::cerr << "error: cannot open output path '" << cfg.out_path << "'\n";
      return clonesim::cli::kExitConfig;
    }
    out = &out_file;
  }

  using Command = std::function<int(const RunConfig&, std::ostream&, std::ostream&)>;
  Command command;
  if (sweep->parsed()) command = clonesim::cli::cmd_sweep_concurrence;
  if (fig2->parsed()) command = clonesim::cli::cmd_fig2;
  if (clone->parsed()) command = clonesim::cli::cmd_clone;
  if (budget->parsed()) command = clonesim::cli::cmd_budget;
  if (run->parsed()) command = clonesim::cli::cmd_run;

  try {
    return command(cfg, *out, std::cerr);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return clonesim::cli::kExitRuntime;
  }
}
