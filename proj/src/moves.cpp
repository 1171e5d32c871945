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

#include "wittsym/moves.hpp"

#include <cstdlib>

#include "wittsym/fp.hpp"

namespace wittsym {

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::WittMerge: return "witt_merge";
    case MoveKind::WittSplit: return "witt_split";
    case MoveKind::CoeffMerge: return "coeff_merge";
    case MoveKind::Negate: return "negate";
    case MoveKind::SlotSplit: return "slot_split";
    case MoveKind::SlotMerge: return "slot_merge";
    case MoveKind::RepeatKill: return "repeat_kill";
    case MoveKind::FrobKill: return "frob_kill";
    case MoveKind::SlotKill: return "slot_kill";
    case MoveKind::ScalarFold: return "scalar_fold";
    case MoveKind::ZeroKill: return "zero_kill";
  }
  return "?";
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw ContractError("move: " + what); }

const Term& term_at(const SymbolSum& s, size_t i) {
  if (i >= s.terms.size()) bad("term index out of range");
  return s.terms[i];
}

void require_pair(const Move& mv) {
  if (mv.term >= mv.term2) bad("merge requires term < term2");
}

bool slots_equal(const Symbol& a, const Symbol& b) { return a.slots == b.slots; }

bool has_repeated_slot(const Symbol& s) {
  for (size_t a = 0; a < s.slots.size(); ++a)
    for (size_t b = a + 1; b < s.slots.size(); ++b)
      if (s.slots[a] == s.slots[b]) return true;
  return false;
}

// Index of the unique nonzero vector slot, or nullopt.
std::optional<size_t> single_nonzero_slot(const WittVector& w) {
  std::optional<size_t> found;
  for (size_t i = 0; i < w.slots.size(); ++i) {
    if (w.slots[i].is_zero()) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

}  // namespace

SymbolSum apply_move(const SymbolSum& s, const Move& mv) {
  SymbolSum r = s;
  switch (mv.kind) {
    case MoveKind::WittMerge: {
      require_pair(mv);
      const Term& a = term_at(s, mv.term);
      const Term& b = term_at(s, mv.term2);
      if (a.coeff != b.coeff) bad("witt_merge requires equal coefficients");
      if (!slots_equal(a.sym, b.sym)) bad("witt_merge requires equal field slots");
      r.terms[mv.term].sym.w = witt_add(a.sym.w, b.sym.w);
      r.terms.erase(r.terms.begin() + static_cast<ptrdiff_t>(mv.term2));
      break;
    }
    case MoveKind::WittSplit: {
      const Term& a = term_at(s, mv.term);
      if (mv.wsplit.m() != a.sym.m()) bad("witt_split vector length mismatch");
      require_same_sig(mv.wsplit.sig, a.sym.sig());
      Term rest = a;
      rest.sym.w = mv.wsplit;
      r.terms[mv.term].sym.w = witt_sub(a.sym.w, mv.wsplit);
      r.terms.insert(r.terms.begin() + static_cast<ptrdiff_t>(mv.term) + 1, std::move(rest));
      break;
    }
    case MoveKind::CoeffMerge: {
      require_pair(mv);
      const Term& a = term_at(s, mv.term);
      const Term& b = term_at(s, mv.term2);
      if (a.sym != b.sym) bad("coeff_merge requires identical symbols");
      if (std::llabs(a.coeff) + std::llabs(b.coeff) > (int64_t{1} << 60))
        bad("coefficient overflow");
      int64_t c = a.coeff + b.coeff;
      if (c == 0) bad("coeff_merge cannot produce a zero coefficient");
      r.terms[mv.term].coeff = c;
      r.terms.erase(r.terms.begin() + static_cast<ptrdiff_t>(mv.term2));
      break;
    }
    case MoveKind::Negate: {
      const Term& a = term_at(s, mv.term);
      r.terms[mv.term].coeff = -a.coeff;
      r.terms[mv.term].sym.w = witt_neg(a.sym.w);
      break;
    }
    case MoveKind::SlotSplit: {
      const Term& a = term_at(s, mv.term);
      if (mv.slot >= a.sym.slots.size()) bad("slot index out of range");
      if (mv.factor.is_zero()) bad("slot_split factor must be nonzero");
      require_same_sig(mv.factor.sig(), a.sym.sig());
      FieldElem rest = a.sym.slots[mv.slot] / mv.factor;
      Term other = a;
      other.sym.slots[mv.slot] = std::move(rest);
      r.terms[mv.term].sym.slots[mv.slot] = mv.factor;
      r.terms.insert(r.terms.begin() + static_cast<ptrdiff_t>(mv.term) + 1, std::move(other));
      break;
    }
    case MoveKind::SlotMerge: {
      require_pair(mv);
      const Term& a = term_at(s, mv.term);
      const Term& b = term_at(s, mv.term2);
      if (mv.slot >= a.sym.slots.size()) bad("slot index out of range");
      if (a.coeff != b.coeff) bad("slot_merge requires equal coefficients");
      if (a.sym.w != b.sym.w) bad("slot_merge requires equal vectors");
      for (size_t i = 0; i < a.sym.slots.size(); ++i)
        if (i != mv.slot && a.sym.slots[i] != b.sym.slots[i])
          bad("slot_merge requires equality outside the merged slot");
      r.terms[mv.term].sym.slots[mv.slot] = a.sym.slots[mv.slot] * b.sym.slots[mv.slot];
      r.terms.erase(r.terms.begin() + static_cast<ptrdiff_t>(mv.term2));
      break;
    }
    case MoveKind::RepeatKill: {
      const Term& a = term_at(s, mv.term);
      if (!has_repeated_slot(a.sym)) bad("repeat_kill requires a repeated field slot");
      r.terms.erase(r.terms.begin() + static_cast<ptrdiff_t>(mv.term));
      break;
    }
    case MoveKind::FrobKill: {
      const Term& a = term_at(s, mv.term);
      auto root = witt_pth_root(a.sym.w);
      if (!root) bad("frob_kill requires every vector slot to be a p-th power");
      r.terms[mv.term].sym.w = std::move(*root);
      break;
    }
    case MoveKind::SlotKill: {
      const Term& a = term_at(s, mv.term);
      auto pos = single_nonzero_slot(a.sym.w);
      if (!pos) bad("slot_kill requires exactly one nonzero vector slot");
      const FieldElem& v = a.sym.w.slots[*pos];
      bool match = false;
      for (const auto& slot : a.sym.slots)
        if (slot == v) match = true;
      if (!match) bad("slot_kill requires the vector entry to equal a field slot");
      r.terms.erase(r.terms.begin() + static_cast<ptrdiff_t>(mv.term));
      break;
    }
    case MoveKind::ScalarFold: {
      const Term& a = term_at(s, mv.term);
      r.terms[mv.term].coeff = 1;
      r.terms[mv.term].sym.w = witt_scalar(a.coeff, a.sym.w);
      break;
    }
    case MoveKind::ZeroKill: {
      const Term& a = term_at(s, mv.term);
      if (!a.sym.w.is_zero()) bad("zero_kill requires a zero vector");
      r.terms.erase(r.terms.begin() + static_cast<ptrdiff_t>(mv.term));
      break;
    }
  }
  return r;
}

}  // namespace wittsym
