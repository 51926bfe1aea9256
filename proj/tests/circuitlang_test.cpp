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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "clonesim/circuitlang.hpp"
#include "clonesim/ugates.hpp"
#include "corpus_manifest.hpp"

using namespace clonesim;
using namespace clonesim::lang;
using clonesim::testing::kMalformedCorpus;
using clonesim::testing::kValidCorpus;
using clonesim::testing::read_file;

namespace {
const std::string kCorpusDir = CLONESIM_CORPUS_DIR;
}

TEST_CASE("parse: minimal program structure") {
  const ParseResult result =
      parse("qubits 1\nprepare q0 real alpha=0\ngate NOT q0\nexpect fidelity q0 alpha=3.14159265\n");
  REQUIRE(result.ok());
  const CircuitProgram& p = *result.program;
  CHECK(p.qubit_count == 1);
  REQUIRE(p.statements.size() == 3);
  CHECK(std::holds_alternative<PrepareStmt>(p.statements[0].node));
  CHECK(std::holds_alternative<GateStmt>(p.statements[1].node));
  CHECK(std::holds_alternative<ExpectStmt>(p.statements[2].node));
  CHECK(std::get<PrepareStmt>(p.statements[0].node).epsilon == 1.0);
}

TEST_CASE("parse: missing header is reported on line 1") {
  const ParseResult result = parse("gate NOT q0\n");
  REQUIRE(!result.ok());
  CHECK(result.error->code == ErrorCode::kMissingHeader);
  CHECK(result.error->line == 1);
}

TEST_CASE("parse: UCNOT program with pseudo-pure preparation") {
  const ParseResult result = parse(
      "qubits 2\nprepare q0 real alpha=0.7854 epsilon=0.9\nprepare q1 real alpha=0\n"
      "gate UCNOT q0 q1\nexpect concurrence q0 q1\n");
  REQUIRE(result.ok());
  const auto& prep = std::get<PrepareStmt>(result.program->statements[0].node);
  CHECK(prep.epsilon == 0.9);
  const auto& gate = std::get<GateStmt>(result.program->statements[2].node);
  CHECK(gate.op == GateOp::kUcnot);
}

TEST_CASE("parse: UTOFFOLI controls list") {
  const ParseResult result = parse(
      "qubits 4\nprepare q0 real alpha=0\nprepare q1 real alpha=0\nprepare q2 real alpha=0\n"
      "prepare q3 real alpha=0\ngate UTOFFOLI controls=q0,q1,q2 target=q3\n");
  REQUIRE(result.ok());
  const auto& gate = std::get<GateStmt>(result.program->statements[4].node);
  CHECK(gate.op == GateOp::kUtoffoli);
  CHECK(gate.qubits == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("parse: error positions include line and column") {
  const ParseResult result = parse("qubits 1\nprepare q0 real alpha=bad\n");
  REQUIRE(!result.ok());
  CHECK(result.error->code == ErrorCode::kMalformedNumber);
  CHECK(result.error->line == 2);
  CHECK(result.error->column > 1);
  CHECK(!result.error->expected.empty());
}

TEST_CASE("round trip: valid corpus programs are unparse-stable") {
  for (const std::string& name : kValidCorpus) {
    INFO("program: ", name);
    const std::string text = read_file(kCorpusDir + "/valid/" + name);
    REQUIRE(!text.empty());
    const ParseResult first = parse(text);
    REQUIRE(first.ok());
    const ParseResult second = parse(unparse(*first.program));
    REQUIRE(second.ok());
    CHECK(*first.program == *second.program);
  }
}

TEST_CASE("malformed corpus: documented error codes with correct line numbers") {
  for (const auto& expected : kMalformedCorpus) {
    INFO("program: ", expected.file);
    const std::string text = read_file(kCorpusDir + "/malformed/" + expected.file);
    REQUIRE(!text.empty());
    const ParseResult result = parse(text);
    REQUIRE(!result.ok());
    CHECK(result.error->code == expected.code);
    CHECK(result.error->line == expected.line);
  }
}

TEST_CASE("execute: NOT twice restores the prepared ray") {
  const ParseResult result = parse(read_file(kCorpusDir + "/valid/v10_not_twice.circ"));
  REQUIRE(result.ok());
  const ExecutionReport report = execute(*result.program);
  REQUIRE(report.expects.size() == 1);
  CHECK(report.expects[0].passed);
  CHECK(report.expects[0].measured == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.all_passed);
  CHECK(report.zeta == 0.0);
  CHECK(report.f_zeta == 1.0);
}

TEST_CASE("execute: UCNOT golden program measures 1/2 + sqrt(1/8)") {
  const ParseResult result = parse(read_file(kCorpusDir + "/valid/v02_ucnot_golden.circ"));
  REQUIRE(result.ok());
  const ExecutionReport report = execute(*result.program);
  REQUIRE(report.expects.size() == 2);
  for (const ExpectOutcome& e : report.expects) {
    CHECK(std::abs(e.measured - kPcCnotFidelity) < 1e-6);
    REQUIRE(e.target.has_value());
    CHECK(*e.target == doctest::Approx(kPcCnotFidelity).epsilon(1e-12));
    CHECK(e.passed);
  }
  CHECK(report.all_passed);
}

TEST_CASE("execute: zeta statistics for two UCNOT gates on two qubits") {
  const ParseResult result = parse(read_file(kCorpusDir + "/valid/v16_two_ucnots.circ"));
  REQUIRE(result.ok());
  const ExecutionReport report = execute(*result.program);
  CHECK(report.zeta == doctest::Approx(2.0));
  CHECK(report.universal_touches == std::vector<int>{2, 2});
  REQUIRE(report.gate_fidelity.has_value());
  CHECK(*report.gate_fidelity == doctest::Approx(kPcCnotFidelity).epsilon(1e-12));
  CHECK(report.f_zeta == doctest::Approx(kPcCnotFidelity * kPcCnotFidelity).epsilon(1e-12));
  CHECK(report.f_zeta == doctest::Approx(0.728553).epsilon(1e-6));
}

TEST_CASE("execute: every valid corpus program passes and stays physical") {
  for (const std::string& name : kValidCorpus) {
    INFO("program: ", name);
    const ParseResult result = parse(read_file(kCorpusDir + "/valid/" + name));
    REQUIRE(result.ok());
    const ExecutionReport report = execute(*result.program);
    CHECK(report.all_passed);
    CHECK(std::abs(report.final_state.trace() - cplx{1.0, 0.0}) < 1e-9);
    CHECK(min_eigenvalue(report.final_state) > -1e-9);
  }
}

TEST_CASE("execute: purity expectation tracks (1 + eps^2)/2 after exact gates") {
  const ParseResult result = parse(read_file(kCorpusDir + "/valid/v05_pseudo_pure_purity.circ"));
  REQUIRE(result.ok());
  const ExecutionReport report = execute(*result.program);
  REQUIRE(report.expects.size() == 1);
  REQUIRE(report.expects[0].target.has_value());
  CHECK(*report.expects[0].target == doctest::Approx(0.5 * (1.0 + 0.81)).epsilon(1e-12));
  CHECK(report.expects[0].passed);
}

TEST_CASE("execute: UTOFFOLI rejects controls that are not identically prepared") {
  const ParseResult result = parse(
      "qubits 3\nprepare q0 real alpha=0.5\nprepare q1 real alpha=0.6\n"
      "prepare q2 real alpha=0\ngate UTOFFOLI controls=q0,q1 target=q2\n");
  REQUIRE(result.ok());
  CHECK_THROWS_AS(execute(*result.program), RuntimeError);
  try {
    execute(*result.program);
  } catch (const RuntimeError& ex) {
    CHECK(ex.line() == 5);
  }
}

TEST_CASE("execute: UTOFFOLI rejects controls already consumed by a gate") {
  const ParseResult result = parse(
      "qubits 3\nprepare q0 real alpha=0.5\nprepare q1 real alpha=0.5\n"
      "prepare q2 real alpha=0\ngate NOT q0\ngate NOT q0\ngate UTOFFOLI controls=q0,q1 target=q2\n");
  REQUIRE(result.ok());
  CHECK_THROWS_AS(execute(*result.program), RuntimeError);
}

TEST_CASE("execute: metrics on unprepared qubits are runtime errors") {
  const ParseResult result = parse("qubits 2\nprepare q0 real alpha=0\nexpect purity q1\n");
  REQUIRE(result.ok());
  CHECK_THROWS_AS(execute(*result.program), RuntimeError);
}

TEST_CASE("execute: pseudo-pure UTOFFOLI goes through the ensemble path") {
  const ParseResult result = parse(
      "qubits 3\nprepare q0 real alpha=0.5 epsilon=0.7\nprepare q1 real alpha=0.5 epsilon=0.7\n"
      "prepare q2 real alpha=0.3\ngate UTOFFOLI controls=q0,q1 target=q2\nexpect fidelity q2 alpha=0.8\n");
  REQUIRE(result.ok());
  const ExecutionReport report = execute(*result.program);
  CHECK(!report.notes.empty());
  REQUIRE(report.expects.size() == 1);
  CHECK(!report.expects[0].target.has_value());  // prediction void on mixed inputs
  CHECK(report.expects[0].passed);               // informational
  CHECK(std::abs(report.final_state.trace() - cplx{1.0, 0.0}) < 1e-9);
}

TEST_CASE("unparse: canonical text parses back to the same program") {
  const std::string text =
      "qubits 3\nprepare q0 real alpha=0.25\ngate UTOFFOLI controls=q0 target=q1\n"
      "expect fidelity q1 alpha=0.25 tol=0.001\n";
  const ParseResult first = parse(text);
  REQUIRE(first.ok());
  const std::string canonical = unparse(*first.program);
  const ParseResult second = parse(canonical);
  REQUIRE(second.ok());
  CHECK(*first.program == *second.program);
  CHECK(canonical == unparse(*second.program));
}
