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

#include "clonesim/circuitlang.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "clonesim/analysis.hpp"
#include "clonesim/cloning.hpp"
#include "clonesim/gates.hpp"
#include "clonesim/states.hpp"
#include "clonesim/ugates.hpp"

namespace clonesim::lang {

namespace {

constexpr int kMaxQubits = 10;
constexpr double kDefaultExpectTol = 1e-6;

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), int(start) + 1});
  }
  return tokens;
}

struct ParseException {
  ParseError error;
};

[[noreturn]] void fail(ErrorCode code, int line, int column, std::string expected,
                       std::string message) {
  throw ParseException{{code, line, column, std::move(expected), std::move(message)}};
}

class LineParser {
 public:
  LineParser(const std::vector<Token>& tokens, int line) : tokens_(tokens), line_(line) {}

  bool done() const { return next_ >= tokens_.size(); }

  const Token& take(const std::string& expected) {
    if (done())
      fail(ErrorCode::kUnexpectedToken, line_, end_column(), expected,
           "expected " + expected + " before end of line");
    return tokens_[next_++];
  }

  const Token* peek() const { return done() ? nullptr : &tokens_[next_]; }

  void expect_end() {
    if (!done())
      fail(ErrorCode::kUnexpectedToken, line_, tokens_[next_].column, "end of line",
           "unexpected trailing token '" + tokens_[next_].text + "'");
  }

  int end_column() const {
    if (tokens_.empty()) return 1;
    const Token& last = tokens_.back();
    return last.column + int(last.text.size());
  }

  int line() const { return line_; }

 private:
  const std::vector<Token>& tokens_;
  std::size_t next_ = 0;
  int line_;
};

double parse_double_text(const std::string& text, int line, int column) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value))
    fail(ErrorCode::kMalformedNumber, line, column, "number", "malformed number '" + text + "'");
  return value;
}

int parse_int_text(const std::string& text, int line, int column) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    fail(ErrorCode::kMalformedNumber, line, column, "integer", "malformed integer '" + text + "'");
  return value;
}

int parse_qref_text(const std::string& text, int line, int column, int qubit_count) {
  if (text.size() < 2 || text[0] != 'q')
    fail(ErrorCode::kMalformedQubitRef, line, column, "qubit reference",
         "expected a qubit reference like q0, got '" + text + "'");
  const int index = parse_int_text(text.substr(1), line, column + 1);
  if (index < 0 || index >= qubit_count)
    fail(ErrorCode::kQubitOutOfRange, line, column, "qubit reference",
         "qubit index " + std::to_string(index) + " out of range for " +
             std::to_string(qubit_count) + " qubits");
  return index;
}

int take_qref(LineParser& p, int qubit_count) {
  const Token& tok = p.take("qubit reference");
  return parse_qref_text(tok.text, p.line(), tok.column, qubit_count);
}

// Parses a token of the form key=value; returns the value text.
std::string take_keyed(LineParser& p, const std::string& key) {
  const Token& tok = p.take(key + "=<value>");
  const std::string prefix = key + "=";
  if (tok.text.rfind(prefix, 0) != 0)
    fail(ErrorCode::kMissingField, p.line(), tok.column, prefix + "<value>",
         "expected '" + prefix + "...', got '" + tok.text + "'");
  return tok.text.substr(prefix.size());
}

double take_keyed_double(LineParser& p, const std::string& key) {
  const Token* tok = p.peek();
  const int column = tok ? tok->column : p.end_column();
  return parse_double_text(take_keyed(p, key), p.line(), column + int(key.size()) + 1);
}

std::optional<double> take_optional_tol(LineParser& p) {
  const Token* tok = p.peek();
  if (!tok || tok->text.rfind("tol=", 0) != 0) return std::nullopt;
  return take_keyed_double(p, "tol");
}

void check_distinct(const std::vector<int>& qubits, int line, int column) {
  std::set<int> seen(qubits.begin(), qubits.end());
  if (seen.size() != qubits.size())
    fail(ErrorCode::kDuplicateQubitArg, line, column, "distinct qubit references",
         "gate arguments must name distinct qubits");
}

GateStmt parse_gate(LineParser& p, int qubit_count) {
  const Token& name = p.take("gate name");
  GateStmt gate;
  if (name.text == "NOT") {
    gate.op = GateOp::kNot;
    gate.qubits = {take_qref(p, qubit_count)};
  } else if (name.text == "U") {
    gate.op = GateOp::kRotate;
    gate.xi = take_keyed_double(p, "xi");
    gate.qubits = {take_qref(p, qubit_count)};
  } else if (name.text == "CNOT" || name.text == "UCNOT") {
    gate.op = name.text == "CNOT" ? GateOp::kCnot : GateOp::kUcnot;
    gate.qubits = {take_qref(p, qubit_count), take_qref(p, qubit_count)};
  } else if (name.text == "UCU") {
    gate.op = GateOp::kUcu;
    gate.xi = take_keyed_double(p, "xi");
    gate.qubits = {take_qref(p, qubit_count), take_qref(p, qubit_count)};
  } else if (name.text == "UTOFFOLI") {
    gate.op = GateOp::kUtoffoli;
    const Token* ctrl_tok = p.peek();
    const int ctrl_column = ctrl_tok ? ctrl_tok->column : p.end_column();
    const std::string controls = take_keyed(p, "controls");
    std::stringstream ss(controls);
    std::string item;
    while (std::getline(ss, item, ','))
      gate.qubits.push_back(parse_qref_text(item, p.line(), ctrl_column, qubit_count));
    if (gate.qubits.empty())
      fail(ErrorCode::kMissingField, p.line(), ctrl_column, "controls=q<i>[,q<j>...]",
           "UTOFFOLI requires at least one control qubit");
    const Token* tgt_tok = p.peek();
    const int tgt_column = tgt_tok ? tgt_tok->column : p.end_column();
    gate.qubits.push_back(
        parse_qref_text(take_keyed(p, "target"), p.line(), tgt_column, qubit_count));
  } else {
    fail(ErrorCode::kUnknownKeyword, p.line(), name.column, "gate name",
         "unknown gate '" + name.text + "'");
  }
  check_distinct(gate.qubits, p.line(), name.column);
  return gate;
}

ExpectStmt parse_expect(LineParser& p, int qubit_count) {
  const Token& name = p.take("metric name");
  ExpectStmt expect;
  if (name.text == "fidelity") {
    expect.kind = ExpectKind::kFidelity;
    expect.qubits = {take_qref(p, qubit_count)};
    expect.alpha = take_keyed_double(p, "alpha");
  } else if (name.text == "concurrence") {
    expect.kind = ExpectKind::kConcurrence;
    expect.qubits = {take_qref(p, qubit_count), take_qref(p, qubit_count)};
    check_distinct(expect.qubits, p.line(), name.column);
  } else if (name.text == "purity") {
    expect.kind = ExpectKind::kPurity;
    expect.qubits = {take_qref(p, qubit_count)};
  } else {
    fail(ErrorCode::kUnknownKeyword, p.line(), name.column, "metric name",
         "unknown metric '" + name.text + "'");
  }
  expect.tol = take_optional_tol(p);
  return expect;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingHeader: return "missing_header";
    case ErrorCode::kDuplicateHeader: return "duplicate_header";
    case ErrorCode::kUnknownKeyword: return "unknown_keyword";
    case ErrorCode::kUnexpectedToken: return "unexpected_token";
    case ErrorCode::kMalformedNumber: return "malformed_number";
    case ErrorCode::kMalformedQubitRef: return "malformed_qubit_ref";
    case ErrorCode::kQubitOutOfRange: return "qubit_out_of_range";
    case ErrorCode::kMissingField: return "missing_field";
    case ErrorCode::kDuplicatePrepare: return "duplicate_prepare";
    case ErrorCode::kPrepareAfterGate: return "prepare_after_gate";
    case ErrorCode::kDuplicateQubitArg: return "duplicate_qubit_arg";
  }
  return "unknown";
}

ParseResult parse(std::string_view text) {
  CircuitProgram program;
  bool have_header = false;
  std::vector<bool> prepared;
  std::vector<int> prepare_line;
  std::vector<bool> gate_touched;

  try {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t eol = text.find('\n', pos);
      std::string_view raw =
          text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
      pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      ++line_no;

      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      const std::size_t hash = raw.find('#');
      if (hash != std::string_view::npos) raw = raw.substr(0, hash);

      const std::vector<Token> tokens = tokenize(raw);
      if (tokens.empty()) continue;
      LineParser p(tokens, line_no);
      const Token& keyword = p.take("keyword");

      if (keyword.text == "qubits") {
        if (have_header)
          fail(ErrorCode::kDuplicateHeader, line_no, keyword.column, "statement",
               "duplicate qubits declaration");
        const Token& count_tok = p.take("integer");
        const int count = parse_int_text(count_tok.text, line_no, count_tok.column);
        if (count < 1 || count > kMaxQubits)
          fail(ErrorCode::kQubitOutOfRange, line_no, count_tok.column, "integer in [1, 10]",
               "qubit count must lie in [1, " + std::to_string(kMaxQubits) + "]");
        p.expect_end();
        program.qubit_count = count;
        prepared.assign(std::size_t(count), false);
        prepare_line.assign(std::size_t(count), 0);
        gate_touched.assign(std::size_t(count), false);
        have_header = true;
        continue;
      }
      if (!have_header)
        fail(ErrorCode::kMissingHeader, line_no, keyword.column, "qubits declaration",
             "first statement must be 'qubits N'");

      if (keyword.text == "prepare") {
        PrepareStmt prep;
        const Token* qtok = p.peek();
        const int qcol = qtok ? qtok->column : p.end_column();
        prep.qubit = take_qref(p, program.qubit_count);
        const Token& kind = p.take("'real'");
        if (kind.text != "real")
          fail(ErrorCode::kUnexpectedToken, line_no, kind.column, "'real'",
               "only 'real' preparations are supported");
        prep.alpha = take_keyed_double(p, "alpha");
        prep.epsilon = 1.0;
        if (const Token* extra = p.peek(); extra && extra->text.rfind("epsilon=", 0) == 0) {
          prep.epsilon = take_keyed_double(p, "epsilon");
          if (!(prep.epsilon >= 0.0 && prep.epsilon <= 1.0))
            fail(ErrorCode::kMalformedNumber, line_no, extra->column, "epsilon in [0, 1]",
                 "epsilon must lie in [0, 1]");
        }
        p.expect_end();
        if (prepared[std::size_t(prep.qubit)])
          fail(ErrorCode::kDuplicatePrepare, line_no, qcol, "unprepared qubit",
               "qubit q" + std::to_string(prep.qubit) + " already prepared on line " +
                   std::to_string(prepare_line[std::size_t(prep.qubit)]));
        if (gate_touched[std::size_t(prep.qubit)])
          fail(ErrorCode::kPrepareAfterGate, line_no, qcol, "untouched qubit",
               "qubit q" + std::to_string(prep.qubit) + " was already touched by a gate");
        prepared[std::size_t(prep.qubit)] = true;
        prepare_line[std::size_t(prep.qubit)] = line_no;
        program.statements.push_back({line_no, prep});
      } else if (keyword.text == "gate") {
        GateStmt gate = parse_gate(p, program.qubit_count);
        p.expect_end();
        for (int q : gate.qubits) gate_touched[std::size_t(q)] = true;
        program.statements.push_back({line_no, std::move(gate)});
      } else if (keyword.text == "expect") {
        ExpectStmt expect = parse_expect(p, program.qubit_count);
        p.expect_end();
        program.statements.push_back({line_no, std::move(expect)});
      } else {
        fail(ErrorCode::kUnknownKeyword, line_no, keyword.column, "statement keyword",
             "unknown keyword '" + keyword.text + "'");
      }
    }
    if (!have_header)
      fail(ErrorCode::kMissingHeader, 1, 1, "qubits declaration", "empty program");
  } catch (const ParseException& ex) {
    return {std::nullopt, ex.error};
  }
  return {std::move(program), std::nullopt};
}

std::string unparse(const CircuitProgram& program) {
  std::ostringstream out;
  out << "qubits " << program.qubit_count << "\n";
  for (const Statement& stmt : program.statements) {
    if (const auto* prep = std::get_if<PrepareStmt>(&stmt.node)) {
      out << "prepare q" << prep->qubit << " real alpha=" << format_double(prep->alpha)
          << " epsilon=" << format_double(prep->epsilon) << "\n";
    } else if (const auto* gate = std::get_if<GateStmt>(&stmt.node)) {
      switch (gate->op) {
        case GateOp::kNot:
          out << "gate NOT q" << gate->qubits[0] << "\n";
          break;
        case GateOp::kRotate:
          out << "gate U xi=" << format_double(gate->xi) << " q" << gate->qubits[0] << "\n";
          break;
        case GateOp::kCnot:
          out << "gate CNOT q" << gate->qubits[0] << " q" << gate->qubits[1] << "\n";
          break;
        case GateOp::kUcnot:
          out << "gate UCNOT q" << gate->qubits[0] << " q" << gate->qubits[1] << "\n";
          break;
        case GateOp::kUcu:
          out << "gate UCU xi=" << format_double(gate->xi) << " q" << gate->qubits[0] << " q"
              << gate->qubits[1] << "\n";
          break;
        case GateOp::kUtoffoli: {
          out << "gate UTOFFOLI controls=";
          for (std::size_t i = 0; i + 1 < gate->qubits.size(); ++i)
            out << (i ? "," : "") << "q" << gate->qubits[i];
          out << " target=q" << gate->qubits.back() << "\n";
          break;
        }
      }
    } else if (const auto* expect = std::get_if<ExpectStmt>(&stmt.node)) {
      switch (expect->kind) {
        case ExpectKind::kFidelity:
          out << "expect fidelity q" << expect->qubits[0]
              << " alpha=" << format_double(expect->alpha);
          break;
        case ExpectKind::kConcurrence:
          out << "expect concurrence q" << expect->qubits[0] << " q" << expect->qubits[1];
          break;
        case ExpectKind::kPurity:
          out << "expect purity q" << expect->qubits[0];
          break;
      }
      if (expect->tol) out << " tol=" << format_double(*expect->tol);
      out << "\n";
    }
  }
  return out.str();
}

namespace {

// Tracks what the single-gate theory predicts for each register qubit.
struct QubitBook {
  bool prepared = false;
  double alpha = 0.0;
  double epsilon = 1.0;
  bool clean = false;             // prepared and untouched by any gate since
  bool exact_gates_only = true;   // only NOT / U have acted on it
  bool basis_cnot_touched = false;
  bool prediction_void = false;   // a universal gate consumed a pseudo-pure input
  std::vector<double> universal_constants;
};

class Interpreter {
 public:
  explicit Interpreter(const CircuitProgram& program)
      : program_(program),
        n_(program.qubit_count),
        dim_(std::size_t{1} << program.qubit_count),
        rho_(dim_, dim_),
        books_(std::size_t(program.qubit_count)) {
    rho_(0, 0) = 1.0;  // |0...0><0...0|
  }

  ExecutionReport run() {
    for (const Statement& stmt : program_.statements) {
      line_ = stmt.line;
      std::visit([this](const auto& node) { this->apply(node); }, stmt.node);
      check_trace();
    }
    return finish();
  }

 private:
  ComplexMatrix marginal(int qubit) const {
    return partial_trace(rho_, std::vector<std::size_t>(std::size_t(n_), 2),
                         {std::size_t(qubit)});
  }

  ComplexMatrix pair_marginal(int a, int b) const {
    return partial_trace(rho_, std::vector<std::size_t>(std::size_t(n_), 2),
                         {std::size_t(std::min(a, b)), std::size_t(std::max(a, b))});
  }

  // Replaces the joint state of `qubits` (factor order as listed) with
  // `state`, keeping the remaining qubits' joint marginal.
  void replace_qubits(const std::vector<int>& qubits, const ComplexMatrix& state) {
    std::vector<int> kept;
    for (int q = 0; q < n_; ++q)
      if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) kept.push_back(q);

    ComplexMatrix inner = state;
    if (!kept.empty()) {
      std::vector<std::size_t> keep_idx(kept.begin(), kept.end());
      inner = tensor(partial_trace(rho_, std::vector<std::size_t>(std::size_t(n_), 2), keep_idx),
                     state);
    }
    // Factor j of `inner` holds register qubit order[j]; scatter back.
    std::vector<int> order = kept;
    order.insert(order.end(), qubits.begin(), qubits.end());
    auto inner_index = [&](std::size_t reg_index) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < order.size(); ++j) {
        const std::size_t bit = (reg_index >> (n_ - 1 - order[j])) & 1;
        idx |= bit << (order.size() - 1 - j);
      }
      return idx;
    };
    ComplexMatrix out(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) = inner(inner_index(r), inner_index(c));
    rho_ = std::move(out);
  }

  void mark_gate(const std::vector<int>& qubits, bool exact) {
    for (int q : qubits) {
      books_[std::size_t(q)].clean = false;
      if (!exact) books_[std::size_t(q)].exact_gates_only = false;
    }
  }

  void mark_universal(const std::vector<int>& qubits, double constant) {
    // The single-gate constants assume pure main-circle inputs; once a
    // pseudo-pure qubit feeds a universal gate the prediction is dropped for
    // every qubit the gate touched.
    bool pure_inputs = true;
    for (int q : qubits) pure_inputs &= books_[std::size_t(q)].epsilon == 1.0;
    for (int q : qubits) {
      books_[std::size_t(q)].universal_constants.push_back(constant);
      if (!pure_inputs) books_[std::size_t(q)].prediction_void = true;
    }
  }

  void apply(const PrepareStmt& prep) {
    QubitBook& book = books_[std::size_t(prep.qubit)];
    const ComplexMatrix state =
        pseudo_pure_density(PseudoPureState(prep.epsilon, real_ket(RealQubitState(prep.alpha)), 1));
    replace_qubits({prep.qubit}, state);
    book.prepared = true;
    book.alpha = prep.alpha;
    book.epsilon = prep.epsilon;
    book.clean = true;
  }

  void apply(const GateStmt& gate) {
    switch (gate.op) {
      case GateOp::kNot:
        rho_ = apply_unitary(rho_, universal_not(), gate.qubits, n_);
        mark_gate(gate.qubits, true);
        break;
      case GateOp::kRotate:
        rho_ = apply_unitary(rho_, rotation_gate(gate.xi), gate.qubits, n_);
        mark_gate(gate.qubits, true);
        break;
      case GateOp::kCnot:
        rho_ = apply_unitary(rho_, standard_cnot(), gate.qubits, n_);
        mark_gate(gate.qubits, false);
        for (int q : gate.qubits) books_[std::size_t(q)].basis_cnot_touched = true;
        break;
      case GateOp::kUcnot: {
        const ChannelResult result =
            apply_universal_cnot(tensor(marginal(gate.qubits[0]), marginal(gate.qubits[1])));
        replace_qubits(gate.qubits, result.output);
        mark_gate(gate.qubits, false);
        mark_universal(gate.qubits, kPcCnotFidelity);
        break;
      }
      case GateOp::kUcu: {
        const ChannelResult result =
            universal_controlled_u_density(marginal(gate.qubits[0]), rotation_gate(gate.xi));
        replace_qubits(gate.qubits, result.output);
        mark_gate(gate.qubits, false);
        mark_universal(gate.qubits, 5.0 / 6.0);
        break;
      }
      case GateOp::kUtoffoli:
        apply_toffoli(gate);
        break;
    }
  }

  void apply_toffoli(const GateStmt& gate) {
    const int n_controls = int(gate.qubits.size()) - 1;
    if (n_controls > 5)
      throw RuntimeError(line_, "UTOFFOLI supports at most 5 control qubits");
    const QubitBook& first = books_[std::size_t(gate.qubits[0])];
    for (int i = 0; i < n_controls; ++i) {
      const QubitBook& book = books_[std::size_t(gate.qubits[std::size_t(i)])];
      if (!book.prepared || !book.clean)
        throw RuntimeError(line_, "UTOFFOLI control q" + std::to_string(gate.qubits[std::size_t(i)]) +
                                      " must be freshly prepared");
      if (book.alpha != first.alpha || book.epsilon != first.epsilon)
        throw RuntimeError(line_, "UTOFFOLI controls are not identically prepared");
    }
    const int target = gate.qubits.back();
    const RealQubitState psi(first.alpha);
    const RealQubitState chi(main_circle_angle(marginal(target)));
    const ChannelResult result =
        first.epsilon == 1.0
            ? universal_toffoli(psi, n_controls, chi)
            : universal_toffoli_pseudo_pure(first.epsilon, psi, n_controls, chi);
    replace_qubits(gate.qubits, result.output);
    mark_gate(gate.qubits, false);
    mark_universal(gate.qubits, universal_fidelity_formula(n_controls));
    for (const std::string& note : result.notes) notes_.push_back(note);
  }

  void apply(const ExpectStmt& expect) {
    for (int q : expect.qubits)
      if (!books_[std::size_t(q)].prepared)
        throw RuntimeError(line_, "metric on unprepared qubit q" + std::to_string(q));

    ExpectOutcome outcome;
    outcome.line = line_;
    outcome.qubits = expect.qubits;
    outcome.tol = expect.tol.value_or(kDefaultExpectTol);

    const QubitBook& book = books_[std::size_t(expect.qubits[0])];
    switch (expect.kind) {
      case ExpectKind::kFidelity: {
        outcome.name = "fidelity";
        outcome.measured =
            state_fidelity(real_ket(RealQubitState(expect.alpha)), marginal(expect.qubits[0]));
        outcome.target = fidelity_target(book);
        break;
      }
      case ExpectKind::kConcurrence:
        outcome.name = "concurrence";
        outcome.measured = concurrence(pair_marginal(expect.qubits[0], expect.qubits[1]));
        break;
      case ExpectKind::kPurity:
        outcome.name = "purity";
        outcome.measured = purity(marginal(expect.qubits[0]));
        if (book.exact_gates_only && !book.basis_cnot_touched)
          outcome.target = 0.5 * (1.0 + book.epsilon * book.epsilon);
        break;
    }
    outcome.passed = !outcome.target || std::abs(outcome.measured - *outcome.target) <= outcome.tol;
    expects_.push_back(std::move(outcome));
  }

  // Predicted fidelity against the ideal output: (1 + eps)/2 attenuated by
  // the ideal constant of every universal gate that touched the qubit. The
  // product is exact for a single universal gate on pure inputs and a
  // heuristic beyond that; no prediction once a basis C-NOT entangled the
  // qubit or a universal gate acted on a pseudo-pure one.
  std::optional<double> fidelity_target(const QubitBook& book) {
    if (book.basis_cnot_touched || book.prediction_void) return std::nullopt;
    if (book.epsilon < 1.0 && !book.universal_constants.empty()) return std::nullopt;
    double target = 0.5 * (1.0 + book.epsilon);
    for (double c : book.universal_constants) target *= c;
    if (book.universal_constants.size() > 1)
      notes_.push_back("fidelity prediction after chained universal gates is a product heuristic");
    return target;
  }

  void check_trace() const {
    if (std::abs(rho_.trace() - cplx{1.0, 0.0}) > 1e-9)
      throw RuntimeError(line_, "register trace drifted from 1");
  }

  ExecutionReport finish() {
    ExecutionReport report;
    report.qubit_count = n_;
    report.final_state = rho_;
    report.expects = std::move(expects_);
    report.notes = std::move(notes_);

    int total_touches = 0;
    std::optional<double> worst;
    for (const QubitBook& book : books_) {
      report.universal_touches.push_back(int(book.universal_constants.size()));
      total_touches += int(book.universal_constants.size());
      for (double c : book.universal_constants)
        worst = worst ? std::min(*worst, c) : c;
    }
    report.zeta = double(total_touches) / double(n_);
    report.gate_fidelity = worst;
    report.f_zeta = worst ? std::pow(*worst, report.zeta) : 1.0;
    report.all_passed = std::all_of(report.expects.begin(), report.expects.end(),
                                    [](const ExpectOutcome& e) { return e.passed; });
    return report;
  }

  const CircuitProgram& program_;
  int n_;
  std::size_t dim_;
  ComplexMatrix rho_;
  std::vector<QubitBook> books_;
  std::vector<ExpectOutcome> expects_;
  std::vector<std::string> notes_;
  int line_ = 0;
};

}  // namespace

ExecutionReport execute(const CircuitProgram& program) {
  if (program.qubit_count < 1 || program.qubit_count > kMaxQubits)
    throw RuntimeError(0, "program qubit count out of range");
  return Interpreter(program).run();
}

}  // namespace clonesim::lang
