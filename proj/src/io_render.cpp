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

#include <cstdlib>
#include <sstream>

#include "wittsym/io.hpp"

namespace wittsym::io {

namespace {

std::string render_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // grlex descending, matching the leading-term convention
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [mono, coeff] = *it;
    if (!first) os << " + ";
    first = false;
    bool has_var = false;
    for (uint32_t e : mono)
      if (e != 0) has_var = true;
    bool wrote = false;
    if (coeff != 1 || !has_var) {
      os << coeff;
      wrote = true;
    }
    for (size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      if (wrote) os << "*";
      os << p.sig()->vars[v];
      if (mono[v] > 1) os << "^" << mono[v];
      wrote = true;
    }
  }
  return os.str();
}

// Wrap when the rendered polynomial would bind wrongly next to / or *.
std::string wrap_num(const std::string& s) {
  if (s.find('+') != std::string::npos) return "(" + s + ")";
  return s;
}

std::string wrap_den(const std::string& s) {
  if (s.find('+') != std::string::npos || s.find('*') != std::string::npos)
    return "(" + s + ")";
  return s;
}

}  // namespace

std::string render_elem(const FieldElem& e) {
  std::string num = render_poly(e.num());
  if (e.is_poly()) return num;
  return wrap_num(num) + "/" + wrap_den(render_poly(e.den()));
}

std::string render_witt(const WittVector& w) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < w.slots.size(); ++i) {
    if (i) os << ", ";
    os << render_elem(w.slots[i]);
  }
  os << "]";
  return os.str();
}

std::string render_symbol(const Symbol& s) {
  std::ostringstream os;
  os << render_witt(s.w) << " (";
  for (size_t i = 0; i < s.slots.size(); ++i) {
    if (i) os << "; ";
    os << render_elem(s.slots[i]);
  }
  os << ")";
  return os.str();
}

std::string render_symbolsum(const SymbolSum& s) {
  if (s.terms.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < s.terms.size(); ++i) {
    const Term& t = s.terms[i];
    if (i == 0) {
      if (t.coeff < 0) os << "- ";
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    int64_t mag = std::llabs(t.coeff);
    if (mag != 1) os << mag << " ";
    os << render_symbol(t.sym);
  }
  return os.str();
}

std::string render_index(const ExpIndex& d) {
  std::ostringstream os;
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << " ";
    os << d[i];
  }
  return os.str();
}

std::string render_header(const SigPtr& sig) {
  std::ostringstream os;
  os << "field p=" << sig->p << " vars=";
  for (size_t i = 0; i < sig->vars.size(); ++i) {
    if (i) os << ",";
    os << sig->vars[i];
  }
  return os.str();
}

std::string render_move(const Move& mv) {
  std::ostringstream os;
  os << move_name(mv.kind);
  switch (mv.kind) {
    case MoveKind::WittMerge:
    case MoveKind::CoeffMerge:
      os << " term=" << mv.term << " term2=" << mv.term2;
      break;
    case MoveKind::SlotMerge:
      os << " term=" << mv.term << " term2=" << mv.term2 << " slot=" << mv.slot;
      break;
    case MoveKind::WittSplit:
      os << " term=" << mv.term << " w=" << render_witt(mv.wsplit);
      break;
    case MoveKind::SlotSplit:
      os << " term=" << mv.term << " slot=" << mv.slot << " a=" << render_elem(mv.factor);
      break;
    case MoveKind::Negate:
    case MoveKind::RepeatKill:
    case MoveKind::FrobKill:
    case MoveKind::SlotKill:
    case MoveKind::ScalarFold:
    case MoveKind::ZeroKill:
      os << " term=" << mv.term;
      break;
  }
  return os.str();
}

namespace {

std::string render_as_witness_body(const ASWitness& w) {
  std::ostringstream os;
  os << "lambda = " << render_elem(w.lambda) << "\n";
  for (const auto& [d, z] : w.z)
    os << "z " << render_index(d) << " = " << render_elem(z) << "\n";
  return os.str();
}

}  // namespace

std::string render_symbolsum_doc(const SigPtr& sig, const SymbolSum& s) {
  return render_header(sig) + "\nsum " + render_symbolsum(s) + "\n";
}

std::string render_as_witness_doc(const SigPtr& sig, const ASWitness& w) {
  return render_header(sig) + "\nwitness\n" + render_as_witness_body(w);
}

std::string render_t4_witness_doc(const SigPtr& sig, const T4Witness& w) {
  std::ostringstream os;
  os << render_header(sig) << "\nt4witness\n";
  // highest level first: the decomposition consumes levels top down
  for (auto it = w.levels.rbegin(); it != w.levels.rend(); ++it)
    os << "level " << it->first << "\n" << render_as_witness_body(it->second);
  return os.str();
}

std::string render_chain_witness_doc(const SigPtr& sig, const ChainWitness& w) {
  std::ostringstream os;
  os << render_header(sig) << "\nchainwitness\n";
  for (size_t i = 0; i < w.gammas.size(); ++i)
    os << "gamma " << (i + 1) << " = " << render_elem(w.gammas[i]) << "\n";
  for (size_t i = 0; i < w.lines.size(); ++i)
    os << "line " << (i + 1) << "\n" << render_as_witness_body(w.lines[i]);
  return os.str();
}

std::string render_certificate_doc(const SigPtr& sig, const Certificate& c) {
  std::ostringstream os;
  os << render_header(sig) << "\ncertificate\n";
  os << "start " << render_symbolsum(c.start) << "\n";
  for (const auto& step : c.steps) {
    os << "step " << render_move(step.move) << "\n";
    os << "= " << render_symbolsum(step.after) << "\n";
  }
  os << "end " << render_symbolsum(c.end) << "\n";
  return os.str();
}

}  // namespace wittsym::io
