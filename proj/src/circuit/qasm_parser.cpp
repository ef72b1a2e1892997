// Copyright 2026 The qddsim Authors
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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>

#include "qddsim/circuit/qasm.hpp"

namespace qddsim {

QasmError::QasmError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double number = 0.0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        t.kind = Tok::Number;
        lex_number(t);
      } else if (c == '"') {
        t.kind = Tok::String;
        advance();
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') t.text += advance();
        if (pos_ >= src_.size() || src_[pos_] != '"') throw QasmError(t.line, t.column, "unterminated string");
        advance();
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        t.kind = Tok::Symbol;
        t.text = "->";
        advance();
        advance();
      } else if (std::string_view(";,()[]{}+-*/^=").find(c) != std::string_view::npos) {
        t.kind = Tok::Symbol;
        t.text = std::string(1, advance());
      } else {
        throw QasmError(t.line, t.column, std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  void lex_number(Token& t) {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      advance();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
      digits();
    }
    t.text = std::string(src_.substr(start, pos_ - start));
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.number);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      throw QasmError(t.line, t.column, "malformed number '" + t.text + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Expression tree; leaves are literals or gate-parameter names.
struct Expr {
  enum class Op { Literal, Param, Neg, Add, Sub, Mul, Div };
  Op op = Op::Literal;
  double value = 0.0;
  std::string name;
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
  int line = 0;
  int column = 0;
};

using ExprPtr = std::unique_ptr<Expr>;
using Env = std::unordered_map<std::string, double>;

double eval(const Expr& e, const Env& env) {
  switch (e.op) {
    case Expr::Op::Literal: return e.value;
    case Expr::Op::Param: {
      auto it = env.find(e.name);
      if (it == env.end()) throw QasmError(e.line, e.column, "unknown identifier '" + e.name + "'");
      return it->second;
    }
    case Expr::Op::Neg: return -eval(*e.lhs, env);
    case Expr::Op::Add: return eval(*e.lhs, env) + eval(*e.rhs, env);
    case Expr::Op::Sub: return eval(*e.lhs, env) - eval(*e.rhs, env);
    case Expr::Op::Mul: return eval(*e.lhs, env) * eval(*e.rhs, env);
    case Expr::Op::Div: {
      const double d = eval(*e.rhs, env);
      if (d == 0.0) throw QasmError(e.line, e.column, "division by zero in expression");
      return eval(*e.lhs, env) / d;
    }
  }
  return 0.0;
}

struct Argument {
  std::string reg;
  std::optional<std::size_t> index;
  int line = 0;
  int column = 0;
};

struct GateCall {
  std::string name;
  std::vector<ExprPtr> params;
  std::vector<Argument> args;
  int line = 0;
  int column = 0;
};

struct GateDef {
  std::vector<std::string> params;
  std::vector<std::string> qargs;
  std::vector<GateCall> body;
};

struct Register {
  std::size_t offset;
  std::size_t size;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<std::string>* warnings)
      : toks_(std::move(toks)), warnings_(warnings) {}

  Circuit run() {
    header();
    while (peek().kind != Tok::End) statement();
    if (num_qubits_ == 0) throw QasmError(peek().line, peek().column, "program declares no qubits");
    Circuit c(num_qubits_, "qasm");
    for (auto& op : ops_) c.add(std::move(op));
    if (dropped_measures_ > 0 && warnings_ != nullptr) {
      warnings_->push_back("dropped " + std::to_string(dropped_measures_) + " trailing measure statement(s)");
    }
    return c;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw QasmError(t.line, t.column, msg); }
  [[noreturn]] static void fail_at(int line, int column, const std::string& msg) {
    throw QasmError(line, column, msg);
  }
  bool is_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }
  bool is_ident(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }

  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) fail(peek(), "expected '" + std::string(s) + "'" + found());
    next();
  }
  std::string expect_ident() {
    if (peek().kind != Tok::Ident) fail(peek(), "expected identifier" + found());
    return next().text;
  }
  std::size_t expect_index() {
    const Token& t = peek();
    if (t.kind != Tok::Number || t.text.find_first_of(".eE") != std::string::npos) {
      fail(t, "expected integer" + found());
    }
    next();
    return static_cast<std::size_t>(t.number);
  }
  std::string found() const {
    const Token& t = peek();
    if (t.kind == Tok::End) return ", found end of input";
    return ", found '" + t.text + "'";
  }

  void header() {
    if (!is_ident("OPENQASM")) fail(peek(), "program must start with 'OPENQASM 2.0;'");
    next();
    const Token& v = peek();
    if (v.kind != Tok::Number) fail(v, "expected version number" + found());
    if (v.number < 2.0 || v.number >= 3.0) fail(v, "unsupported OpenQASM version " + v.text);
    next();
    expect_symbol(";");
  }

  void statement() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail(t, "expected statement" + found());
    if (t.text == "include") return include();
    if (t.text == "qreg" || t.text == "creg") return reg_decl();
    if (t.text == "gate") return gate_def();
    if (t.text == "barrier") return barrier();
    if (t.text == "measure") return measure();
    if (t.text == "reset" || t.text == "if" || t.text == "opaque") {
      fail(t, "unsupported statement '" + t.text + "'");
    }
    GateCall call = gate_call();
    if (measured_) fail_at(call.line, call.column, "gate '" + call.name + "' after measure (mid-circuit measurement is not supported)");
    apply_top_level(call);
  }

  void include() {
    next();
    const Token& f = peek();
    if (f.kind != Tok::String) fail(f, "expected file name" + found());
    if (f.text != "qelib1.inc") fail(f, "unsupported include '" + f.text + "'");
    next();
    expect_symbol(";");
  }

  void reg_decl() {
    const bool quantum = next().text == "qreg";
    const Token& name_tok = peek();
    std::string name = expect_ident();
    expect_symbol("[");
    const std::size_t size = expect_index();
    expect_symbol("]");
    expect_symbol(";");
    if (size == 0) fail(name_tok, "register '" + name + "' has size 0");
    if (qregs_.count(name) || cregs_.count(name)) fail(name_tok, "register '" + name + "' redeclared");
    if (quantum) {
      qregs_[name] = {num_qubits_, size};
      num_qubits_ += size;
    } else {
      cregs_[name] = size;
    }
  }

  void gate_def() {
    next();
    const Token& name_tok = peek();
    std::string name = expect_ident();
    GateDef def;
    if (is_symbol("(")) {
      next();
      if (!is_symbol(")")) {
        def.params.push_back(expect_ident());
        while (is_symbol(",")) {
          next();
          def.params.push_back(expect_ident());
        }
      }
      expect_symbol(")");
    }
    def.qargs.push_back(expect_ident());
    while (is_symbol(",")) {
      next();
      def.qargs.push_back(expect_ident());
    }
    expect_symbol("{");
    while (!is_symbol("}")) {
      if (peek().kind == Tok::End) fail(peek(), "unterminated gate body for '" + name + "'");
      if (is_ident("barrier")) {
        barrier();
        continue;
      }
      GateCall call = gate_call();
      for (const auto& a : call.args) {
        if (a.index) fail_at(a.line, a.column, "indexed argument inside gate body");
        if (std::find(def.qargs.begin(), def.qargs.end(), a.reg) == def.qargs.end()) {
          fail_at(a.line, a.column, "unknown qubit argument '" + a.reg + "' in gate '" + name + "'");
        }
      }
      def.body.push_back(std::move(call));
    }
    next();
    if (defs_.count(name)) fail(name_tok, "gate '" + name + "' redefined");
    defs_.emplace(std::move(name), std::move(def));
  }

  void barrier() {
    next();
    argument();
    while (is_symbol(",")) {
      next();
      argument();
    }
    expect_symbol(";");
  }

  void measure() {
    next();
    Argument q = argument();
    expect_symbol("->");
    Argument c = argument();
    expect_symbol(";");
    if (!qregs_.count(q.reg)) fail_at(q.line, q.column, "unknown quantum register '" + q.reg + "'");
    if (!cregs_.count(c.reg)) fail_at(c.line, c.column, "unknown classical register '" + c.reg + "'");
    measured_ = true;
    ++dropped_measures_;
  }

  Argument argument() {
    Argument a;
    a.line = peek().line;
    a.column = peek().column;
    a.reg = expect_ident();
    if (is_symbol("[")) {
      next();
      a.index = expect_index();
      expect_symbol("]");
    }
    return a;
  }

  GateCall gate_call() {
    GateCall call;
    call.line = peek().line;
    call.column = peek().column;
    call.name = expect_ident();
    if (is_symbol("(")) {
      next();
      if (!is_symbol(")")) {
        call.params.push_back(expression());
        while (is_symbol(",")) {
          next();
          call.params.push_back(expression());
        }
      }
      expect_symbol(")");
    }
    call.args.push_back(argument());
    while (is_symbol(",")) {
      next();
      call.args.push_back(argument());
    }
    expect_symbol(";");
    return call;
  }

  // expr := term (('+'|'-') term)*
  ExprPtr expression() {
    ExprPtr lhs = term();
    while (is_symbol("+") || is_symbol("-")) {
      const Token& op = next();
      lhs = binary(op.text == "+" ? Expr::Op::Add : Expr::Op::Sub, std::move(lhs), term(), op);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (is_symbol("*") || is_symbol("/")) {
      const Token& op = next();
      lhs = binary(op.text == "*" ? Expr::Op::Mul : Expr::Op::Div, std::move(lhs), unary(), op);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (is_symbol("-")) {
      const Token& op = next();
      auto e = std::make_unique<Expr>();
      e->op = Expr::Op::Neg;
      e->lhs = unary();
      e->line = op.line;
      e->column = op.column;
      return e;
    }
    if (is_symbol("+")) {
      next();
      return unary();
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    auto e = std::make_unique<Expr>();
    e->line = t.line;
    e->column = t.column;
    if (t.kind == Tok::Number) {
      next();
      e->value = t.number;
      return e;
    }
    if (t.kind == Tok::Ident) {
      next();
      if (t.text == "pi") {
        e->value = std::numbers::pi;
      } else {
        if (is_symbol("(")) fail(t, "functions are not supported in expressions ('" + t.text + "')");
        e->op = Expr::Op::Param;
        e->name = t.text;
      }
      return e;
    }
    if (is_symbol("(")) {
      next();
      ExprPtr inner = expression();
      expect_symbol(")");
      return inner;
    }
    fail(t, "expected expression" + found());
  }

  static ExprPtr binary(Expr::Op op, ExprPtr lhs, ExprPtr rhs, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->op = op;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  void apply_top_level(const GateCall& call) {
    // Resolve each argument to a list of absolute qubits, then broadcast.
    std::vector<std::vector<Qubit>> resolved;
    std::size_t width = 1;
    for (const auto& a : call.args) {
      auto it = qregs_.find(a.reg);
      if (it == qregs_.end()) fail_at(a.line, a.column, "unknown quantum register '" + a.reg + "'");
      const Register& r = it->second;
      std::vector<Qubit> qs;
      if (a.index) {
        if (*a.index >= r.size) {
          fail_at(a.line, a.column, "qubit index " + std::to_string(*a.index) + " out of range for register '" +
                                           a.reg + "[" + std::to_string(r.size) + "]'");
        }
        qs.push_back(static_cast<Qubit>(r.offset + *a.index));
      } else {
        for (std::size_t i = 0; i < r.size; ++i) qs.push_back(static_cast<Qubit>(r.offset + i));
        if (width != 1 && r.size != width) {
          fail_at(a.line, a.column, "register size mismatch in broadcast of '" + call.name + "'");
        }
        width = r.size;
      }
      resolved.push_back(std::move(qs));
    }
    const Env empty;
    std::vector<double> params;
    for (const auto& p : call.params) params.push_back(eval(*p, empty));
    for (std::size_t k = 0; k < width; ++k) {
      std::vector<Qubit> qubits;
      for (const auto& qs : resolved) qubits.push_back(qs.size() == 1 ? qs[0] : qs[k]);
      expand(call.name, params, qubits, call.line, call.column, 0);
    }
  }

  void expand(const std::string& name, const std::vector<double>& params, const std::vector<Qubit>& qubits,
              int line, int column, int depth) {
    if (depth > kMaxGateExpansionDepth) {
      throw QasmError(line, column, "gate expansion depth exceeded " + std::to_string(kMaxGateExpansionDepth) +
                                        " while expanding '" + name + "'");
    }
    if (auto it = defs_.find(name); it != defs_.end()) {
      const GateDef& def = it->second;
      if (params.size() != def.params.size()) {
        throw QasmError(line, column, "gate '" + name + "' expects " + std::to_string(def.params.size()) +
                                          " parameter(s), got " + std::to_string(params.size()));
      }
      if (qubits.size() != def.qargs.size()) {
        throw QasmError(line, column, "gate '" + name + "' expects " + std::to_string(def.qargs.size()) +
                                          " qubit(s), got " + std::to_string(qubits.size()));
      }
      Env env;
      for (std::size_t i = 0; i < params.size(); ++i) env[def.params[i]] = params[i];
      std::unordered_map<std::string, Qubit> binding;
      for (std::size_t i = 0; i < qubits.size(); ++i) binding[def.qargs[i]] = qubits[i];
      for (const auto& inner : def.body) {
        std::vector<double> inner_params;
        for (const auto& p : inner.params) inner_params.push_back(eval(*p, env));
        std::vector<Qubit> inner_qubits;
        for (const auto& a : inner.args) inner_qubits.push_back(binding.at(a.reg));
        expand(inner.name, inner_params, inner_qubits, inner.line, inner.column, depth + 1);
      }
      return;
    }
    const auto kind = gate_kind_from_name(name);
    if (!kind) throw QasmError(line, column, "unknown gate '" + name + "'");
    const auto& info = gate_info(*kind);
    const std::size_t ncontrols =
        info.num_controls >= 0 ? static_cast<std::size_t>(info.num_controls) : qubits.size() - 1;
    if (info.num_controls < 0 && qubits.size() < 2) {
      throw QasmError(line, column, "gate '" + name + "' needs at least 2 qubits");
    }
    if (qubits.size() != ncontrols + static_cast<std::size_t>(info.num_targets)) {
      throw QasmError(line, column, "gate '" + name + "' expects " +
                                        std::to_string(ncontrols + info.num_targets) + " qubit(s), got " +
                                        std::to_string(qubits.size()));
    }
    if (params.size() != static_cast<std::size_t>(info.num_params)) {
      throw QasmError(line, column, "gate '" + name + "' expects " + std::to_string(info.num_params) +
                                        " parameter(s), got " + std::to_string(params.size()));
    }
    GateOp op{*kind,
              {qubits.begin(), qubits.begin() + static_cast<std::ptrdiff_t>(ncontrols)},
              {qubits.begin() + static_cast<std::ptrdiff_t>(ncontrols), qubits.end()},
              params};
    try {
      validate_op(op, num_qubits_);
    } catch (const std::invalid_argument& e) {
      throw QasmError(line, column, e.what());
    }
    ops_.push_back(std::move(op));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string>* warnings_;
  std::map<std::string, Register> qregs_;
  std::map<std::string, std::size_t> cregs_;
  std::unordered_map<std::string, GateDef> defs_;
  std::size_t num_qubits_ = 0;
  std::vector<GateOp> ops_;
  bool measured_ = false;
  std::size_t dropped_measures_ = 0;
};

}  // namespace

Circuit parse_qasm(std::string_view text, std::vector<std::string>* warnings) {
  Parser parser(Lexer(text).run(), warnings);
  return parser.run();
}

}  // namespace qddsim
