// Copyright 2026 The gadsim Authors
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

#include "gadsim/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace gadsim {

WireMapping::WireMapping(std::vector<std::size_t> wire_to_physical)
    : wire_to_physical_(std::move(wire_to_physical)) {
  const std::size_t n = wire_to_physical_.size();
  physical_to_wire_.assign(n, n);
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t p = wire_to_physical_[w];
    if (p >= n || physical_to_wire_[p] != n) {
      throw std::invalid_argument(
          "WireMapping: not a bijection onto 0.." + std::to_string(n - 1));
    }
    physical_to_wire_[p] = w;
  }
}

WireMapping WireMapping::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return WireMapping(std::move(m));
}

WireMapping WireMapping::simulator_default() {
  // Circuit wires (Q, E, A) land on physical qubits (2, 0, 1).
  return WireMapping({2, 0, 1});
}

std::size_t WireMapping::physical(std::size_t wire) const {
  if (wire >= wire_to_physical_.size()) {
    throw std::invalid_argument("WireMapping: wire " + std::to_string(wire) +
                                " out of range");
  }
  return wire_to_physical_[wire];
}

std::size_t WireMapping::wire(std::size_t physical) const {
  if (physical >= physical_to_wire_.size()) {
    throw std::invalid_argument("WireMapping: qubit " +
                                std::to_string(physical) +
                                " is not mapped to a circuit wire");
  }
  return physical_to_wire_[physical];
}

std::string format_g12(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string format_exact(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string emit(const Circuit& c, const WireMapping& mapping,
                 const std::set<std::size_t>& measure_wires) {
  if (mapping.size() != c.width()) {
    throw std::invalid_argument("emit: mapping size does not match circuit "
                                "width");
  }
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.width()) + "];\n";
  out += "creg c[" + std::to_string(c.width()) + "];\n";
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case Gate::Kind::Ry:
        out += "ry(" + format_exact(g.angle) + ") q[" +
               std::to_string(mapping.physical(g.target)) + "];\n";
        break;
      case Gate::Kind::Cnot:
        out += "cx q[" + std::to_string(mapping.physical(g.control)) +
               "],q[" + std::to_string(mapping.physical(g.target)) + "];\n";
        break;
      default:
        throw std::invalid_argument(
            "emit: unsupported gate kind (only cx and ry are emitted)");
    }
  }
  std::vector<std::size_t> measures;
  for (std::size_t w : measure_wires) {
    if (w >= c.width()) {
      throw std::invalid_argument("emit: measured wire out of range");
    }
    measures.push_back(mapping.physical(w));
  }
  std::sort(measures.begin(), measures.end());
  for (std::size_t p : measures) {
    out += "measure q[" + std::to_string(p) + "] -> c[" + std::to_string(p) +
           "];\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class Kind {
    Identifier,
    Number,
    String,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
    Arrow,
    Star,
    Slash,
    Minus,
    End,
  };

  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) break;
      tokens.push_back(next_token());
    }
    tokens.push_back({Token::Kind::End, "", line_, col_});
    return tokens;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++col_;
        ++pos_;
      } else if (ch == '/' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  Token next_token() {
    const std::size_t line = line_;
    const std::size_t col = col_;
    const char ch = text_[pos_];

    auto single = [&](Token::Kind kind) {
      advance(1);
      return Token{kind, std::string(1, ch), line, col};
    };

    switch (ch) {
      case '(': return single(Token::Kind::LParen);
      case ')': return single(Token::Kind::RParen);
      case '[': return single(Token::Kind::LBracket);
      case ']': return single(Token::Kind::RBracket);
      case ',': return single(Token::Kind::Comma);
      case ';': return single(Token::Kind::Semicolon);
      case '*': return single(Token::Kind::Star);
      case '/': return single(Token::Kind::Slash);
      default: break;
    }
    if (ch == '-') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        advance(2);
        return {Token::Kind::Arrow, "->", line, col};
      }
      advance(1);
      return {Token::Kind::Minus, "-", line, col};
    }
    if (ch == '"') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && text_[end] != '"' && text_[end] != '\n') {
        ++end;
      }
      if (end >= text_.size() || text_[end] != '"') {
        throw QasmParseError("unterminated string literal", line, col);
      }
      const std::string value = text_.substr(pos_ + 1, end - pos_ - 1);
      advance(end + 1 - pos_);
      return {Token::Kind::String, value, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '.')) {
        ++end;
      }
      if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
        std::size_t exp = end + 1;
        if (exp < text_.size() && (text_[exp] == '+' || text_[exp] == '-')) {
          ++exp;
        }
        std::size_t digits = exp;
        while (digits < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[digits]))) {
          ++digits;
        }
        if (digits > exp) end = digits;
      }
      const std::string value = text_.substr(pos_, end - pos_);
      advance(end - pos_);
      return {Token::Kind::Number, value, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_')) {
        ++end;
      }
      const std::string value = text_.substr(pos_, end - pos_);
      advance(end - pos_);
      return {Token::Kind::Identifier, value, line, col};
    }
    throw QasmParseError(std::string("unexpected character '") + ch + "'",
                         line, col);
  }

  void advance(std::size_t n) {
    pos_ += n;
    col_ += n;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  QasmProgram run() {
    QasmProgram prog;
    const Token header = expect(Token::Kind::Identifier, "OPENQASM header");
    if (header.text != "OPENQASM") {
      throw QasmParseError("expected OPENQASM header, found '" + header.text +
                           "'", header.line, header.column);
    }
    const Token version = expect(Token::Kind::Number, "version number");
    if (version.text != "2.0") {
      throw QasmParseError("unsupported QASM version '" + version.text +
                           "' (only 2.0 is supported)",
                           version.line, version.column);
    }
    prog.version = version.text;
    expect(Token::Kind::Semicolon, "';'");

    while (peek().kind != Token::Kind::End) {
      statement(prog);
    }
    return prog;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  Token take() { return tokens_[pos_++]; }

  Token expect(Token::Kind kind, const std::string& what) {
    const Token t = take();
    if (t.kind != kind) {
      throw QasmParseError("expected " + what + ", found '" + t.text + "'",
                           t.line, t.column);
    }
    return t;
  }

  std::size_t expect_index() {
    expect(Token::Kind::LBracket, "'['");
    const Token num = expect(Token::Kind::Number, "register size or index");
    for (char ch : num.text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw QasmParseError("expected a nonnegative integer, found '" +
                             num.text + "'", num.line, num.column);
      }
    }
    expect(Token::Kind::RBracket, "']'");
    std::size_t value = 0;
    const auto res = std::from_chars(num.text.data(),
                                     num.text.data() + num.text.size(),
                                     value);
    if (res.ec != std::errc{}) {
      throw QasmParseError("index '" + num.text + "' is out of range",
                           num.line, num.column);
    }
    return value;
  }

  std::size_t qubit_operand(const QasmProgram& prog) {
    const Token reg = expect(Token::Kind::Identifier, "register name");
    if (prog.qreg_name.empty() || reg.text != prog.qreg_name) {
      throw QasmParseError("unknown quantum register '" + reg.text + "'",
                           reg.line, reg.column);
    }
    const Token open = peek();
    const std::size_t index = expect_index();
    if (index >= prog.qreg_size) {
      throw QasmParseError("qubit index " + std::to_string(index) +
                           " out of bounds for " + prog.qreg_name + "[" +
                           std::to_string(prog.qreg_size) + "]",
                           open.line, open.column);
    }
    return index;
  }

  std::size_t clbit_operand(const QasmProgram& prog) {
    const Token reg = expect(Token::Kind::Identifier, "register name");
    if (prog.creg_name.empty() || reg.text != prog.creg_name) {
      throw QasmParseError("unknown classical register '" + reg.text + "'",
                           reg.line, reg.column);
    }
    const Token open = peek();
    const std::size_t index = expect_index();
    if (index >= prog.creg_size) {
      throw QasmParseError("classical index " + std::to_string(index) +
                           " out of bounds for " + prog.creg_name + "[" +
                           std::to_string(prog.creg_size) + "]",
                           open.line, open.column);
    }
    return index;
  }

  double number_value(const Token& t) {
    const char* begin = t.text.data();
    const char* end = begin + t.text.size();
    double value = 0.0;
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
      throw QasmParseError("malformed number '" + t.text + "'", t.line,
                           t.column);
    }
    return value;
  }

  // decimal | [n '*'] pi ['/' m], with an optional leading minus.
  double angle_expression() {
    const double pi = 4.0 * std::atan(1.0);
    double sign = 1.0;
    if (peek().kind == Token::Kind::Minus) {
      take();
      sign = -1.0;
    }
    double value;
    if (peek().kind == Token::Kind::Number) {
      value = number_value(take());
      if (peek().kind == Token::Kind::Star) {
        take();
        const Token id = expect(Token::Kind::Identifier, "'pi'");
        if (id.text != "pi") {
          throw QasmParseError("expected 'pi', found '" + id.text + "'",
                               id.line, id.column);
        }
        value *= pi;
      }
    } else if (peek().kind == Token::Kind::Identifier &&
               peek().text == "pi") {
      take();
      value = pi;
    } else {
      const Token t = peek();
      throw QasmParseError("expected an angle, found '" + t.text + "'",
                           t.line, t.column);
    }
    if (peek().kind == Token::Kind::Slash) {
      take();
      const Token denom = expect(Token::Kind::Number, "denominator");
      const double d = number_value(denom);
      if (d == 0.0) {
        throw QasmParseError("division by zero in angle", denom.line,
                             denom.column);
      }
      value /= d;
    }
    return sign * value;
  }

  void register_decl(QasmProgram& prog, bool quantum, const Token& at) {
    const Token name = expect(Token::Kind::Identifier, "register name");
    const std::size_t size = expect_index();
    expect(Token::Kind::Semicolon, "';'");
    if (size == 0) {
      throw QasmParseError("register size must be positive", at.line,
                           at.column);
    }
    if (quantum) {
      if (!prog.qreg_name.empty()) {
        throw QasmParseError("duplicate qreg declaration", at.line,
                             at.column);
      }
      prog.qreg_name = name.text;
      prog.qreg_size = size;
    } else {
      if (!prog.creg_name.empty()) {
        throw QasmParseError("duplicate creg declaration", at.line,
                             at.column);
      }
      prog.creg_name = name.text;
      prog.creg_size = size;
    }
  }

  void statement(QasmProgram& prog) {
    const Token head = expect(Token::Kind::Identifier, "statement");

    if (head.text == "include") {
      expect(Token::Kind::String, "include path");
      expect(Token::Kind::Semicolon, "';'");
      return;
    }
    if (head.text == "qreg" || head.text == "creg") {
      register_decl(prog, head.text == "qreg", head);
      return;
    }
    if (head.text == "barrier") {
      // Ignored semantically; swallow operands.
      while (peek().kind != Token::Kind::Semicolon &&
             peek().kind != Token::Kind::End) {
        take();
      }
      expect(Token::Kind::Semicolon, "';'");
      return;
    }
    if (head.text == "measure") {
      QasmInstruction inst;
      inst.name = "measure";
      inst.qubits.push_back(qubit_operand(prog));
      expect(Token::Kind::Arrow, "'->'");
      inst.clbits.push_back(clbit_operand(prog));
      expect(Token::Kind::Semicolon, "';'");
      prog.instructions.push_back(std::move(inst));
      return;
    }
    if (head.text == "ry") {
      QasmInstruction inst;
      inst.name = "ry";
      expect(Token::Kind::LParen, "'('");
      inst.params.push_back(angle_expression());
      expect(Token::Kind::RParen, "')'");
      inst.qubits.push_back(qubit_operand(prog));
      expect(Token::Kind::Semicolon, "';'");
      prog.instructions.push_back(std::move(inst));
      return;
    }
    if (head.text == "cx") {
      QasmInstruction inst;
      inst.name = "cx";
      inst.qubits.push_back(qubit_operand(prog));
      expect(Token::Kind::Comma, "','");
      inst.qubits.push_back(qubit_operand(prog));
      if (inst.qubits[0] == inst.qubits[1]) {
        throw QasmParseError("cx control and target must differ", head.line,
                             head.column);
      }
      expect(Token::Kind::Semicolon, "';'");
      prog.instructions.push_back(std::move(inst));
      return;
    }
    if (head.text == "x") {
      QasmInstruction inst;
      inst.name = "x";
      inst.qubits.push_back(qubit_operand(prog));
      expect(Token::Kind::Semicolon, "';'");
      prog.instructions.push_back(std::move(inst));
      return;
    }
    throw QasmParseError("unsupported gate '" + head.text + "'", head.line,
                         head.column);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

QasmProgram parse(const std::string& text) {
  return Parser(Lexer(text).run()).run();
}

Circuit to_circuit(const QasmProgram& prog, const WireMapping& mapping) {
  Circuit c(mapping.size());
  for (const QasmInstruction& inst : prog.instructions) {
    if (inst.name == "measure") continue;
    if (inst.name == "ry") {
      c.append(Gate::ry(mapping.wire(inst.qubits[0]), inst.params[0]));
    } else if (inst.name == "cx") {
      c.append(Gate::cnot(mapping.wire(inst.qubits[0]),
                          mapping.wire(inst.qubits[1])));
    } else if (inst.name == "x") {
      c.append(Gate::x(mapping.wire(inst.qubits[0])));
    } else {
      throw std::invalid_argument("to_circuit: unsupported instruction '" +
                                  inst.name + "'");
    }
  }
  return c;
}

}  // namespace gadsim
