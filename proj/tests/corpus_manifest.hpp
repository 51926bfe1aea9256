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

#ifndef CLONESIM_TESTS_CORPUS_MANIFEST_HPP
#define CLONESIM_TESTS_CORPUS_MANIFEST_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "clonesim/circuitlang.hpp"

namespace clonesim::testing {

inline const std::vector<std::string> kValidCorpus = {
    "v01_minimal_not.circ",      "v02_ucnot_golden.circ",   "v03_rotation.circ",
    "v04_cnot_concurrence.circ", "v05_pseudo_pure_purity.circ",
    "v06_ucu.circ",              "v07_toffoli_n2.circ",     "v08_toffoli_n3.circ",
    "v09_comments.circ",         "v10_not_twice.circ",      "v11_ucnot_then_purity.circ",
    "v12_four_qubits.circ",      "v13_explicit_epsilon_one.circ",
    "v14_tol_override.circ",     "v15_ucu_not.circ",        "v16_two_ucnots.circ",
    "v17_mixed_control_ucnot.circ",
};

struct MalformedCase {
  std::string file;
  lang::ErrorCode code;
  int line;
};

inline const std::vector<MalformedCase> kMalformedCorpus = {
    {"m01_no_header.circ", lang::ErrorCode::kMissingHeader, 1},
    {"m02_duplicate_header.circ", lang::ErrorCode::kDuplicateHeader, 3},
    {"m03_unknown_keyword.circ", lang::ErrorCode::kUnknownKeyword, 2},
    {"m04_malformed_number.circ", lang::ErrorCode::kMalformedNumber, 2},
    {"m05_qubit_out_of_range.circ", lang::ErrorCode::kQubitOutOfRange, 2},
    {"m06_duplicate_prepare.circ", lang::ErrorCode::kDuplicatePrepare, 4},
    {"m07_prepare_after_gate.circ", lang::ErrorCode::kPrepareAfterGate, 3},
    {"m08_malformed_qref.circ", lang::ErrorCode::kMalformedQubitRef, 2},
    {"m09_missing_field.circ", lang::ErrorCode::kMissingField, 2},
    {"m10_trailing_token.circ", lang::ErrorCode::kUnexpectedToken, 2},
    {"m11_duplicate_qubit_arg.circ", lang::ErrorCode::kDuplicateQubitArg, 2},
    {"m12_unknown_gate.circ", lang::ErrorCode::kUnknownKeyword, 2},
    {"m13_bad_qubit_count.circ", lang::ErrorCode::kQubitOutOfRange, 1},
    {"m14_unknown_metric.circ", lang::ErrorCode::kUnknownKeyword, 3},
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

}  // namespace clonesim::testing

#endif  // CLONESIM_TESTS_CORPUS_MANIFEST_HPP
