// Copyright 2026 The wittsym Authors
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

#include <sstream>

#include "wittsym/io.hpp"

namespace wittsym::io {

namespace {

constexpr int64_t kMaxExponent = 4096;

struct Token {
  enum Kind {
    Int,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Eq,
    End
  };
  Kind kind;
  std::string text;
  int64_t value = 0;
  int line;
  int col;
};

class Lexer {
public:
  Lexer(const std::string& text, int line) : text_(text), line_(line) {}

  const Token& peek() {
    if (!have_) {
      cur_ = lex();
      have_ = true;
    }
    return cur_;
  }

  Token take() {
    Token t = peek();
    have_ = false;
    return t;
  }

  [[noreturn]] void error(const Token& at, const std::string& msg) const {
    throw ParseError(at.line, at.col, msg);
  }

private:
  Token lex() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    Token t;
    t.line = line_;
    t.col = static_cast<int>(pos_) + 1;
    if (pos_ >= text_.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = text_[pos_];
    if (c >= '0' && c <= '9') {
      int64_t v = 0;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        if (v > (int64_t{1} << 60) / 10) throw ParseError(t.line, t.col, "integer too large");
        v = v * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      t.kind = Token::Int;
      t.value = v;
      return t;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
              (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
              (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_'))
        ++pos_;
      t.kind = Token::Ident;
      t.text = text_.substr(start, pos_ - start);
      return t;
    }
    ++pos_;
    switch (c) {
      case '+': t.kind = Token::Plus; return t;
      case '-': t.kind = Token::Minus; return t;
      case '*': t.kind = Token::Star; return t;
      case '/': t.kind = Token::Slash; return t;
      case '^': t.kind = Token::Caret; return t;
      case '(': t.kind = Token::LParen; return t;
      case ')': t.kind = Token::RParen; return t;
      case '[': t.kind = Token::LBracket; return t;
      case ']': t.kind = Token::RBracket; return t;
      case ',': t.kind = Token::Comma; return t;
      case ';': t.kind = Token::Semi; return t;
      case '=': t.kind = Token::Eq; return t;
      default:
        throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_;
  Token cur_;
  bool have_ = false;
};

class ElemParser {
public:
  ElemParser(Lexer& lex, const SigPtr& sig) : lex_(lex), sig_(sig) {}

  FieldElem parse_sum() {
    FieldElem acc = parse_prod();
    for (;;) {
      Token::Kind k = lex_.peek().kind;
      if (k == Token::Plus) {
        lex_.take();
        acc = acc + parse_prod();
      } else if (k == Token::Minus) {
        lex_.take();
        acc = acc - parse_prod();
      } else {
        return acc;
      }
    }
  }

private:
  FieldElem parse_prod() {
    FieldElem acc = parse_unary();
    for (;;) {
      Token::Kind k = lex_.peek().kind;
      if (k == Token::Star) {
        lex_.take();
        acc = acc * parse_unary();
      } else if (k == Token::Slash) {
        Token t = lex_.take();
        FieldElem rhs = parse_unary();
        if (rhs.is_zero()) lex_.error(t, "division by zero");
        acc = acc / rhs;
      } else {
        return acc;
      }
    }
  }

  FieldElem parse_unary() {
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      return parse_unary().neg();
    }
    return parse_power();
  }

  FieldElem parse_power() {
    FieldElem base = parse_atom();
    if (lex_.peek().kind != Token::Caret) return base;
    Token caret = lex_.take();
    int64_t e = parse_exponent();
    if (e < 0 && base.is_zero()) lex_.error(caret, "zero raised to a negative power");
    return base.pow(e);
  }

  int64_t parse_exponent() {
    bool neg = false;
    bool paren = false;
    if (lex_.peek().kind == Token::LParen) {
      paren = true;
      lex_.take();
    }
    if (lex_.peek().kind == Token::Minus) {
      neg = true;
      lex_.take();
    }
    Token t = lex_.take();
    if (t.kind != Token::Int) lex_.error(t, "expected integer exponent");
    if (t.value > kMaxExponent) lex_.error(t, "exponent too large");
    if (paren) {
      Token r = lex_.take();
      if (r.kind != Token::RParen) lex_.error(r, "expected ')'");
    }
    return neg ? -t.value : t.value;
  }

  FieldElem parse_atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Int:
        return FieldElem::constant(sig_, t.value % sig_->p);
      case Token::Ident: {
        for (size_t i = 0; i < sig_->vars.size(); ++i)
          if (sig_->vars[i] == t.text) return FieldElem::variable(sig_, i);
        lex_.error(t, "unknown variable '" + t.text + "'");
      }
      case Token::LParen: {
        FieldElem inner = parse_sum();
        Token r = lex_.take();
        if (r.kind != Token::RParen) lex_.error(r, "expected ')'");
        return inner;
      }
      default:
        lex_.error(t, "expected a value");
    }
  }

  Lexer& lex_;
  const SigPtr& sig_;
};

FieldElem parse_elem_at(Lexer& lex, const SigPtr& sig) {
  return ElemParser(lex, sig).parse_sum();
}

WittVector parse_witt_at(Lexer& lex, const SigPtr& sig) {
  Token open = lex.take();
  if (open.kind != Token::LBracket) lex.error(open, "expected '['");
  WittVector w;
  w.sig = sig;
  for (;;) {
    w.slots.push_back(parse_elem_at(lex, sig));
    Token t = lex.take();
    if (t.kind == Token::RBracket) break;
    if (t.kind != Token::Comma) lex.error(t, "expected ',' or ']'");
  }
  return w;
}

Symbol parse_symbol_at(Lexer& lex, const SigPtr& sig) {
  Symbol s;
  s.w = parse_witt_at(lex, sig);
  Token open = lex.take();
  if (open.kind != Token::LParen) lex.error(open, "expected '(' after vector");
  for (;;) {
    Token at = lex.peek();
    FieldElem slot = parse_elem_at(lex, sig);
    if (slot.is_zero()) lex.error(at, "field slot must be nonzero");
    s.slots.push_back(std::move(slot));
    Token t = lex.take();
    if (t.kind == Token::RParen) break;
    if (t.kind != Token::Semi) lex.error(t, "expected ';' or ')'");
  }
  return s;
}

SymbolSum parse_symbolsum_at(Lexer& lex, const SigPtr& sig) {
  SymbolSum sum;
  // the empty sum is written "0"
  if (lex.peek().kind == Token::Int && lex.peek().value == 0) {
    lex.take();
    return sum;
  }
  bool negative = false;
  if (lex.peek().kind == Token::Minus) {
    negative = true;
    lex.take();
  }
  for (;;) {
    int64_t mag = 1;
    Token at = lex.peek();
    if (at.kind == Token::Int) {
      mag = lex.take().value;
      if (mag == 0) lex.error(at, "zero coefficient");
    }
    Term t;
    t.coeff = negative ? -mag : mag;
    t.sym = parse_symbol_at(lex, sig);
    if (!sum.terms.empty()) {
      const Symbol& first = sum.terms[0].sym;
      if (t.sym.m() != first.m()) lex.error(at, "mixed vector lengths in sum");
      if (t.sym.n() != first.n()) lex.error(at, "mixed slot counts in sum");
    }
    sum.terms.push_back(std::move(t));
    Token sep = lex.peek();
    if (sep.kind == Token::Plus) {
      negative = false;
      lex.take();
    } else if (sep.kind == Token::Minus) {
      negative = true;
      lex.take();
    } else {
      return sum;
    }
  }
}

void expect_end(Lexer& lex) {
  Token t = lex.peek();
  if (t.kind != Token::End) lex.error(t, "trailing input");
}

// --- line-structured documents ---------------------------------------------

struct Line {
  int number;  // 1-based in the original text
  std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string raw =
        nl == std::string::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' || raw.back() == '\r'))
      raw.pop_back();
    size_t start = 0;
    while (start < raw.size() && (raw[start] == ' ' || raw[start] == '\t')) ++start;
    if (start < raw.size()) lines.push_back(Line{number, raw.substr(start)});
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return lines;
}

std::string first_word(const std::string& s) {
  size_t end = 0;
  while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
  return s.substr(0, end);
}

std::string rest_after_word(const std::string& s) {
  size_t end = 0;
  while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
  while (end < s.size() && (s[end] == ' ' || s[end] == '\t')) ++end;
  return s.substr(end);
}

SigPtr parse_header_text(const std::string& text, int line) {
  Lexer lex(text, line);
  Token t = lex.peek();
  if (t.kind == Token::Ident && t.text == "field") lex.take();
  t = lex.take();
  if (t.kind != Token::Ident || t.text != "p") lex.error(t, "expected p=<prime>");
  t = lex.take();
  if (t.kind != Token::Eq) lex.error(t, "expected '='");
  Token pv = lex.take();
  if (pv.kind != Token::Int) lex.error(pv, "expected prime");
  t = lex.take();
  if (t.kind != Token::Ident || t.text != "vars") lex.error(t, "expected vars=<names>");
  t = lex.take();
  if (t.kind != Token::Eq) lex.error(t, "expected '='");
  std::vector<std::string> names;
  for (;;) {
    Token name = lex.take();
    if (name.kind != Token::Ident) lex.error(name, "expected variable name");
    names.push_back(name.text);
    if (lex.peek().kind != Token::Comma) break;
    lex.take();
  }
  expect_end(lex);
  try {
    return make_signature(pv.value, std::move(names));
  } catch (const ContractError& e) {
    throw ParseError(line, pv.col, e.what());
  }
}

// lambda line, then zero or more z lines
ASWitness parse_as_witness_lines(const std::vector<Line>& lines, size_t& i,
                                 const SigPtr& sig) {
  if (i >= lines.size() || first_word(lines[i].text) != "lambda")
    throw ParseError(i < lines.size() ? lines[i].number : 0, 1, "expected lambda line");
  ASWitness wit;
  {
    Lexer lex(lines[i].text, lines[i].number);
    Token t = lex.take();  // lambda
    t = lex.take();
    if (t.kind != Token::Eq) lex.error(t, "expected '='");
    wit.lambda = parse_elem_at(lex, sig);
    expect_end(lex);
    ++i;
  }
  while (i < lines.size() && first_word(lines[i].text) == "z") {
    Lexer lex(lines[i].text, lines[i].number);
    lex.take();  // z
    ExpIndex d;
    while (lex.peek().kind == Token::Int)
      d.push_back(static_cast<int>(lex.take().value));
    if (d.empty()) lex.error(lex.peek(), "expected index entries");
    Token t = lex.take();
    if (t.kind != Token::Eq) lex.error(t, "expected '='");
    Token at = lex.peek();
    FieldElem z = parse_elem_at(lex, sig);
    expect_end(lex);
    if (wit.z.count(d)) throw ParseError(lines[i].number, 1, "duplicate witness index");
    if (z.is_zero()) throw ParseError(at.line, at.col, "witness value must be nonzero");
    wit.z.emplace(std::move(d), std::move(z));
    ++i;
  }
  return wit;
}

Move parse_move_line(const Line& line, const SigPtr& sig) {
  Lexer lex(line.text, line.number);
  Token kw = lex.take();  // step
  Token name = lex.take();
  if (name.kind != Token::Ident) lex.error(name, "expected move name");
  (void)kw;
  Move mv;
  bool needs_term2 = false, needs_slot = false, needs_w = false, needs_a = false;
  if (name.text == "witt_merge") {
    mv.kind = MoveKind::WittMerge;
    needs_term2 = true;
  } else if (name.text == "witt_split") {
    mv.kind = MoveKind::WittSplit;
    needs_w = true;
  } else if (name.text == "coeff_merge") {
    mv.kind = MoveKind::CoeffMerge;
    needs_term2 = true;
  } else if (name.text == "negate") {
    mv.kind = MoveKind::Negate;
  } else if (name.text == "slot_split") {
    mv.kind = MoveKind::SlotSplit;
    needs_slot = true;
    needs_a = true;
  } else if (name.text == "slot_merge") {
    mv.kind = MoveKind::SlotMerge;
    needs_term2 = true;
    needs_slot = true;
  } else if (name.text == "repeat_kill") {
    mv.kind = MoveKind::RepeatKill;
  } else if (name.text == "frob_kill") {
    mv.kind = MoveKind::FrobKill;
  } else if (name.text == "slot_kill") {
    mv.kind = MoveKind::SlotKill;
  } else if (name.text == "scalar_fold") {
    mv.kind = MoveKind::ScalarFold;
  } else if (name.text == "zero_kill") {
    mv.kind = MoveKind::ZeroKill;
  } else {
    lex.error(name, "unknown move '" + name.text + "'");
  }

  auto take_kv_int = [&](const char* key) -> size_t {
    Token k = lex.take();
    if (k.kind != Token::Ident || k.text != key)
      lex.error(k, std::string("expected ") + key + "=<int>");
    Token eq = lex.take();
    if (eq.kind != Token::Eq) lex.error(eq, "expected '='");
    Token v = lex.take();
    if (v.kind != Token::Int) lex.error(v, "expected integer");
    return static_cast<size_t>(v.value);
  };

  mv.term = take_kv_int("term");
  if (needs_term2) mv.term2 = take_kv_int("term2");
  if (needs_slot) mv.slot = take_kv_int("slot");
  if (needs_w) {
    Token k = lex.take();
    if (k.kind != Token::Ident || k.text != "w") lex.error(k, "expected w=[...]");
    Token eq = lex.take();
    if (eq.kind != Token::Eq) lex.error(eq, "expected '='");
    mv.wsplit = parse_witt_at(lex, sig);
  }
  if (needs_a) {
    Token k = lex.take();
    if (k.kind != Token::Ident || k.text != "a") lex.error(k, "expected a=<elem>");
    Token eq = lex.take();
    if (eq.kind != Token::Eq) lex.error(eq, "expected '='");
    Token at = lex.peek();
    mv.factor = parse_elem_at(lex, sig);
    if (mv.factor.is_zero()) lex.error(at, "split factor must be nonzero");
  }
  expect_end(lex);
  return mv;
}

SymbolSum parse_sum_rest(const Line& line, const std::string& rest, const SigPtr& sig) {
  Lexer lex(rest, line.number);
  SymbolSum s = parse_symbolsum_at(lex, sig);
  expect_end(lex);
  return s;
}

}  // namespace

SigPtr parse_header(const std::string& line) { return parse_header_text(line, 1); }

FieldElem parse_elem(const std::string& text, const SigPtr& sig) {
  Lexer lex(text, 1);
  FieldElem e = parse_elem_at(lex, sig);
  expect_end(lex);
  return e;
}

WittVector parse_witt(const std::string& text, const SigPtr& sig) {
  Lexer lex(text, 1);
  WittVector w = parse_witt_at(lex, sig);
  expect_end(lex);
  return w;
}

SymbolSum parse_symbolsum(const std::string& text, const SigPtr& sig) {
  Lexer lex(text, 1);
  SymbolSum s = parse_symbolsum_at(lex, sig);
  expect_end(lex);
  return s;
}

Document parse_document(const std::string& text) {
  std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  Document doc;
  doc.sig = parse_header_text(lines[0].text, lines[0].number);
  if (lines.size() < 2) throw ParseError(lines[0].number, 1, "missing document body");
  const Line& kind = lines[1];
  std::string kw = first_word(kind.text);

  if (kw == "sum") {
    doc.body = parse_sum_rest(kind, rest_after_word(kind.text), doc.sig);
    if (lines.size() > 2) throw ParseError(lines[2].number, 1, "trailing input");
    return doc;
  }

  if (kw == "witness") {
    if (rest_after_word(kind.text) != "")
      throw ParseError(kind.number, 1, "trailing input after 'witness'");
    size_t i = 2;
    ASWitness w = parse_as_witness_lines(lines, i, doc.sig);
    if (i != lines.size()) throw ParseError(lines[i].number, 1, "trailing input");
    doc.body = std::move(w);
    return doc;
  }

  if (kw == "t4witness") {
    T4Witness w;
    size_t i = 2;
    while (i < lines.size()) {
      if (first_word(lines[i].text) != "level")
        throw ParseError(lines[i].number, 1, "expected level line");
      Lexer lex(lines[i].text, lines[i].number);
      lex.take();
      Token lv = lex.take();
      if (lv.kind != Token::Int || lv.value < 1) lex.error(lv, "expected level number");
      expect_end(lex);
      ++i;
      if (w.levels.count(static_cast<int>(lv.value)))
        throw ParseError(lines[i - 1].number, 1, "duplicate level");
      w.levels.emplace(static_cast<int>(lv.value),
                       parse_as_witness_lines(lines, i, doc.sig));
    }
    if (w.levels.empty()) throw ParseError(kind.number, 1, "t4witness needs a level");
    doc.body = std::move(w);
    return doc;
  }

  if (kw == "chainwitness") {
    ChainWitness w;
    size_t i = 2;
    while (i < lines.size() && first_word(lines[i].text) == "gamma") {
      Lexer lex(lines[i].text, lines[i].number);
      lex.take();
      Token idx = lex.take();
      if (idx.kind != Token::Int) lex.error(idx, "expected gamma index");
      if (static_cast<size_t>(idx.value) != w.gammas.size() + 1)
        lex.error(idx, "gamma indices must count up from 1");
      Token eq = lex.take();
      if (eq.kind != Token::Eq) lex.error(eq, "expected '='");
      Token at = lex.peek();
      FieldElem g = parse_elem_at(lex, doc.sig);
      expect_end(lex);
      if (g.is_zero()) lex.error(at, "gamma must be nonzero");
      w.gammas.push_back(std::move(g));
      ++i;
    }
    while (i < lines.size()) {
      if (first_word(lines[i].text) != "line")
        throw ParseError(lines[i].number, 1, "expected line section");
      Lexer lex(lines[i].text, lines[i].number);
      lex.take();
      Token idx = lex.take();
      if (idx.kind != Token::Int) lex.error(idx, "expected line number");
      if (static_cast<size_t>(idx.value) != w.lines.size() + 1)
        lex.error(idx, "line numbers must count up from 1");
      expect_end(lex);
      ++i;
      w.lines.push_back(parse_as_witness_lines(lines, i, doc.sig));
    }
    if (w.lines.empty()) throw ParseError(kind.number, 1, "chainwitness needs lines");
    doc.body = std::move(w);
    return doc;
  }

  if (kw == "certificate") {
    Certificate cert;
    size_t i = 2;
    if (i >= lines.size() || first_word(lines[i].text) != "start")
      throw ParseError(i < lines.size() ? lines[i].number : kind.number, 1,
                       "expected start line");
    cert.start = parse_sum_rest(lines[i], rest_after_word(lines[i].text), doc.sig);
    ++i;
    while (i < lines.size() && first_word(lines[i].text) == "step") {
      CertStep step;
      step.move = parse_move_line(lines[i], doc.sig);
      ++i;
      if (i >= lines.size() || first_word(lines[i].text) != "=")
        throw ParseError(i < lines.size() ? lines[i].number : lines[i - 1].number, 1,
                         "expected '=' result line after step");
      step.after = parse_sum_rest(lines[i], rest_after_word(lines[i].text), doc.sig);
      ++i;
      cert.steps.push_back(std::move(step));
    }
    if (i >= lines.size() || first_word(lines[i].text) != "end")
      throw ParseError(i < lines.size() ? lines[i].number : kind.number, 1,
                       "expected end line");
    cert.end = parse_sum_rest(lines[i], rest_after_word(lines[i].text), doc.sig);
    ++i;
    if (i != lines.size()) throw ParseError(lines[i].number, 1, "trailing input");
    doc.body = std::move(cert);
    return doc;
  }

  throw ParseError(kind.number, 1, "unknown document kind '" + kw + "'");
}

namespace {

template <typename T>
T take_body(const std::string& text, SigPtr* sig_out, const char* what) {
  Document doc = parse_document(text);
  if (sig_out) *sig_out = doc.sig;
  if (auto* body = std::get_if<T>(&doc.body)) return std::move(*body);
  throw ParseError(1, 1, std::string("expected a ") + what + " document");
}

}  // namespace

SymbolSum parse_symbolsum_doc(const std::string& text, SigPtr* sig_out) {
  return take_body<SymbolSum>(text, sig_out, "sum");
}
ASWitness parse_as_witness_doc(const std::string& text, SigPtr* sig_out) {
  return take_body<ASWitness>(text, sig_out, "witness");
}
T4Witness parse_t4_witness_doc(const std::string& text, SigPtr* sig_out) {
  return take_body<T4Witness>(text, sig_out, "t4witness");
}
ChainWitness parse_chain_witness_doc(const std::string& text, SigPtr* sig_out) {
  return take_body<ChainWitness>(text, sig_out, "chainwitness");
}
Certificate parse_certificate_doc(const std::string& text, SigPtr* sig_out) {
  return take_body<Certificate>(text, sig_out, "certificate");
}

}  // namespace wittsym::io
