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

#ifndef WITTSYM_IO_HPP
#define WITTSYM_IO_HPP

#include <string>
#include <variant>

#include "wittsym/certificate.hpp"
#include "wittsym/witnesses.hpp"

// Text format. Every document starts with a header line
//
//   field p=<prime> vars=<name>,<name>,...
//
// followed by a body whose first keyword names its kind:
//
//   sum <symbol sum>
//
//   witness                       certificate
//   lambda = <elem>               start <symbol sum>
//   z <i1> <i2> ... = <elem>      step <move> <args>
//                                 = <symbol sum>
//   t4witness                     ...
//   level <j>                     end <symbol sum>
//   lambda = <elem>
//   ...                           chainwitness
//                                 gamma <i> = <elem>
//                                 line <l>
//                                 lambda = <elem>
//                                 ...
//
// Element grammar (usual precedence; no chained ^):
//   elem := sum of products of atoms, operators + - * / ^, parens,
//   integers (reduced mod p), variables by name; exponents may be negative.
// Witt vectors are bracketed slot lists "[e0, e1]"; symbols append the field
// slots "(s1; s2)"; sum terms carry an optional integer multiplier and are
// joined with + or -; the empty sum renders as "0".
// '#' starts a comment until end of line. Rendering is canonical (grlex
// descending polynomial order, reduced fractions) and parse(render(x)) == x.
namespace wittsym::io {

class ParseError : public Error {
public:
  ParseError(int line_, int col_, const std::string& msg)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
  int line;
  int col;
};

// --- rendering -------------------------------------------------------------

std::string render_elem(const FieldElem& e);
std::string render_witt(const WittVector& w);
std::string render_symbol(const Symbol& s);
std::string render_symbolsum(const SymbolSum& s);
std::string render_index(const ExpIndex& d);  // space-separated entries
std::string render_header(const SigPtr& sig);
std::string render_move(const Move& mv);

// Full documents (header line + body).
std::string render_symbolsum_doc(const SigPtr& sig, const SymbolSum& s);
std::string render_as_witness_doc(const SigPtr& sig, const ASWitness& w);
std::string render_t4_witness_doc(const SigPtr& sig, const T4Witness& w);
std::string render_chain_witness_doc(const SigPtr& sig, const ChainWitness& w);
std::string render_certificate_doc(const SigPtr& sig, const Certificate& c);

// --- parsing ---------------------------------------------------------------

// Whole-string forms; throw ParseError (1-based line/column) on failure.
SigPtr parse_header(const std::string& line);
FieldElem parse_elem(const std::string& text, const SigPtr& sig);
WittVector parse_witt(const std::string& text, const SigPtr& sig);
SymbolSum parse_symbolsum(const std::string& text, const SigPtr& sig);

struct Document {
  SigPtr sig;
  std::variant<SymbolSum, ASWitness, T4Witness, ChainWitness, Certificate> body;
};

Document parse_document(const std::string& text);

// Typed wrappers that fail with ParseError if the body kind differs.
SymbolSum parse_symbolsum_doc(const std::string& text, SigPtr* sig_out);
ASWitness parse_as_witness_doc(const std::string& text, SigPtr* sig_out);
T4Witness parse_t4_witness_doc(const std::string& text, SigPtr* sig_out);
ChainWitness parse_chain_witness_doc(const std::string& text, SigPtr* sig_out);
Certificate parse_certificate_doc(const std::string& text, SigPtr* sig_out);

}  // namespace wittsym::io

#endif  // WITTSYM_IO_HPP
