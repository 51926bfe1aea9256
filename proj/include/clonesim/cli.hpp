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

#ifndef CLONESIM_CLI_HPP
#define CLONESIM_CLI_HPP

#include <iosfwd>
#include <string>

#include "clonesim/cloning.hpp"

namespace clonesim::cli {

// Exit codes: 0 success, 1 failed expectation/threshold, 2 configuration,
// 3 circuit parse error, 4 circuit runtime error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitRuntime = 4;

enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  std::string out_path;  // empty writes to stdout
  OutputFormat format = OutputFormat::kCsv;
  int grid = 101;
  PcVariant pc_variant = PcVariant::kAnchored;
  int n_max = 20;
  // clone
  int clone_n = 1;
  int clone_m = 2;
  double clone_alpha = 0.0;
  // budget
  double delta = 0.01;
  // run
  std::string circuit_path;
};

int cmd_sweep_concurrence(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_fig2(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_clone(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_budget(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Fixed 9-fractional-digit decimal with '.' separator; negative zero is
/// normalized so output is byte-stable.
std::string format_fixed9(double v);

}  // namespace clonesim::cli

#endif  // CLONESIM_CLI_HPP
