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

#ifndef CLONESIM_CIRCUITLANG_HPP
#define CLONESIM_CIRCUITLANG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clonesim/qmath.hpp"

namespace clonesim::lang {

// Circuit files are line oriented: '#' starts a comment, tokens are separated
// by whitespace, and the first non-comment line must declare "qubits N".
//
//   prepare q0 real alpha=0.7854 epsilon=0.9
//   gate NOT q0 | gate U xi=1.5708 q0 | gate CNOT q0 q1 | gate UCNOT q0 q1
//   gate UCU xi=1.5708 q0 q1 | gate UTOFFOLI controls=q0,q1 target=q2
//   expect fidelity q0 alpha=3.1416 [tol=1e-9]
//   expect concurrence q0 q1 [tol=...] | expect purity q0 [tol=...]

enum class ErrorCode {
  kMissingHeader,
  kDuplicateHeader,
  kUnknownKeyword,
  kUnexpectedToken,
  kMalformedNumber,
  kMalformedQubitRef,
  kQubitOutOfRange,
  kMissingField,
  kDuplicatePrepare,
  kPrepareAfterGate,
  kDuplicateQubitArg,
};

const char* error_code_name(ErrorCode code);

struct ParseError {
  ErrorCode code;
  int line;
  int column;
  std::string expected;  // token class the parser was looking for
  std::string message;
};

struct PrepareStmt {
  int qubit;
  double alpha;
  double epsilon;  // 1 when omitted

  bool operator==(const PrepareStmt&) const = default;
};

enum class GateOp { kNot, kRotate, kCnot, kUcnot, kUcu, kUtoffoli };

struct GateStmt {
  GateOp op;
  std::vector<int> qubits;  // UTOFFOLI: controls followed by the target
  double xi = 0.0;          // kRotate / kUcu only

  bool operator==(const GateStmt&) const = default;
};

enum class ExpectKind { kFidelity, kConcurrence, kPurity };

struct ExpectStmt {
  ExpectKind kind;
  std::vector<int> qubits;
  double alpha = 0.0;  // kFidelity only
  std::optional<double> tol;

  bool operator==(const ExpectStmt&) const = default;
};

struct Statement {
  int line;
  std::variant<PrepareStmt, GateStmt, ExpectStmt> node;

  // Round-trip equality compares content, not source lines.
  bool operator==(const Statement& other) const { return node == other.node; }
};

struct CircuitProgram {
  int qubit_count = 0;
  std::vector<Statement> statements;

  bool operator==(const CircuitProgram&) const = default;
};

struct ParseResult {
  std::optional<CircuitProgram> program;
  std::optional<ParseError> error;

  bool ok() const { return program.has_value(); }
};

ParseResult parse(std::string_view text);

/// Canonical text form; parse(unparse(p)) == p for every valid program.
std::string unparse(const CircuitProgram& program);

class RuntimeError : public std::runtime_error {
 public:
  RuntimeError(int line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ExpectOutcome {
  int line;
  std::string name;
  std::vector<int> qubits;
  double measured;
  std::optional<double> target;  // absent when no prediction applies
  double tol;
  bool passed;
};

struct ExecutionReport {
  int qubit_count = 0;
  ComplexMatrix final_state;
  std::vector<ExpectOutcome> expects;
  std::vector<int> universal_touches;  // per qubit
  double zeta = 0.0;                   // universal-gate touches averaged over qubits
  std::optional<double> gate_fidelity; // smallest ideal constant among applied universal gates
  double f_zeta = 1.0;                 // gate_fidelity ^ zeta
  std::vector<std::string> notes;
  bool all_passed = true;
};

/// Runs the program against a register density matrix. Throws RuntimeError
/// for UTOFFOLI controls that are not identically (and freshly) prepared and
/// for metrics on unprepared qubits.
ExecutionReport execute(const CircuitProgram& program);

}  // namespace clonesim::lang

#endif  // CLONESIM_CIRCUITLANG_HPP
