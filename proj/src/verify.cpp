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

#include "wittsym/certificate.hpp"
#include "wittsym/fp.hpp"

namespace wittsym {

// This file deliberately reimplements the move semantics instead of calling
// apply_move: the checker assembles each expected sum with its own logic so a
// bug in the producer's move application cannot hide inside the verifier.

namespace {

struct CheckFail {
  std::string reason;
};

[[noreturn]] void fail(const std::string& why) { throw CheckFail{why}; }

const Term& pick(const SymbolSum& s, size_t i, const char* what) {
  if (i >= s.terms.size()) fail(std::string(what) + ": term index out of range");
  return s.terms[i];
}

// Expected result assembled term by term: `keep` marks surviving source
// terms, `replace` overrides kept terms, `insert_after` adds new terms.
SymbolSum assemble(const SymbolSum& src, const std::vector<bool>& keep,
                   const std::vector<std::pair<size_t, Term>>& replace,
                   const std::vector<std::pair<size_t, Term>>& insert_after) {
  SymbolSum out;
  for (size_t i = 0; i < src.terms.size(); ++i) {
    if (keep[i]) {
      const Term* t = &src.terms[i];
      for (const auto& [idx, rep] : replace)
        if (idx == i) t = &rep;
      out.terms.push_back(*t);
    }
    for (const auto& [idx, ins] : insert_after)
      if (idx == i) out.terms.push_back(ins);
  }
  return out;
}

SymbolSum expected_after(const SymbolSum& cur, const Move& mv) {
  std::vector<bool> keep(cur.terms.size(), true);
  std::vector<std::pair<size_t, Term>> replace;
  std::vector<std::pair<size_t, Term>> insert;

  switch (mv.kind) {
    case MoveKind::WittMerge: {
      const Term& a = pick(cur, mv.term, "witt_merge");
      const Term& b = pick(cur, mv.term2, "witt_merge");
      if (mv.term >= mv.term2) fail("witt_merge: term order");
      if (a.coeff != b.coeff) fail("witt_merge: coefficients differ");
      if (a.sym.slots != b.sym.slots) fail("witt_merge: field slots differ");
      Term merged = a;
      merged.sym.w = witt_add(a.sym.w, b.sym.w);
      replace.emplace_back(mv.term, std::move(merged));
      keep[mv.term2] = false;
      break;
    }
    case MoveKind::WittSplit: {
      const Term& a = pick(cur, mv.term, "witt_split");
      if (mv.wsplit.m() != a.sym.m()) fail("witt_split: length mismatch");
      if (!same_sig(mv.wsplit.sig, a.sym.sig())) fail("witt_split: field mismatch");
      Term head = a;
      head.sym.w = witt_add(a.sym.w, witt_neg(mv.wsplit));
      Term tail = a;
      tail.sym.w = mv.wsplit;
      replace.emplace_back(mv.term, std::move(head));
      insert.emplace_back(mv.term, std::move(tail));
      break;
    }
    case MoveKind::CoeffMerge: {
      const Term& a = pick(cur, mv.term, "coeff_merge");
      const Term& b = pick(cur, mv.term2, "coeff_merge");
      if (mv.term >= mv.term2) fail("coeff_merge: term order");
      if (!(a.sym == b.sym)) fail("coeff_merge: symbols differ");
      if (std::llabs(a.coeff) + std::llabs(b.coeff) > (int64_t{1} << 60))
        fail("coeff_merge: overflow");
      if (a.coeff + b.coeff == 0) fail("coeff_merge: zero result");
      Term merged = a;
      merged.coeff = a.coeff + b.coeff;
      replace.emplace_back(mv.term, std::move(merged));
      keep[mv.term2] = false;
      break;
    }
    case MoveKind::Negate: {
      const Term& a = pick(cur, mv.term, "negate");
      Term flipped = a;
      flipped.coeff = -a.coeff;
      flipped.sym.w = witt_neg(a.sym.w);
      replace.emplace_back(mv.term, std::move(flipped));
      break;
    }
    case MoveKind::SlotSplit: {
      const Term& a = pick(cur, mv.term, "slot_split");
      if (mv.slot >= a.sym.slots.size()) fail("slot_split: slot out of range");
      if (mv.factor.is_zero()) fail("slot_split: zero factor");
      if (!same_sig(mv.factor.sig(), a.sym.sig())) fail("slot_split: field mismatch");
      // the two pieces must multiply back to the original slot
      Term left = a;
      left.sym.slots[mv.slot] = mv.factor;
      Term right = a;
      right.sym.slots[mv.slot] = a.sym.slots[mv.slot] / mv.factor;
      if (left.sym.slots[mv.slot] * right.sym.slots[mv.slot] != a.sym.slots[mv.slot])
        fail("slot_split: pieces do not multiply to the slot");
      replace.emplace_back(mv.term, std::move(left));
      insert.emplace_back(mv.term, std::move(right));
      break;
    }
    case MoveKind::SlotMerge: {
      const Term& a = pick(cur, mv.term, "slot_merge");
      const Term& b = pick(cur, mv.term2, "slot_merge");
      if (mv.term >= mv.term2) fail("slot_merge: term order");
      if (mv.slot >= a.sym.slots.size()) fail("slot_merge: slot out of range");
      if (a.coeff != b.coeff) fail("slot_merge: coefficients differ");
      if (!(a.sym.w == b.sym.w)) fail("slot_merge: vectors differ");
      for (size_t i = 0; i < a.sym.slots.size(); ++i)
        if (i != mv.slot && a.sym.slots[i] != b.sym.slots[i])
          fail("slot_merge: slots differ outside merge position");
      Term merged = a;
      merged.sym.slots[mv.slot] = a.sym.slots[mv.slot] * b.sym.slots[mv.slot];
      replace.emplace_back(mv.term, std::move(merged));
      keep[mv.term2] = false;
      break;
    }
    case MoveKind::RepeatKill: {
      const Term& a = pick(cur, mv.term, "repeat_kill");
      bool repeated = false;
      for (size_t x = 0; x < a.sym.slots.size() && !repeated; ++x)
        for (size_t y = x + 1; y < a.sym.slots.size(); ++y)
          if (a.sym.slots[x] == a.sym.slots[y]) {
            repeated = true;
            break;
          }
      if (!repeated) fail("repeat_kill: no repeated field slot");
      keep[mv.term] = false;
      break;
    }
    case MoveKind::FrobKill: {
      const Term& a = pick(cur, mv.term, "frob_kill");
      Term rooted = a;
      for (size_t i = 0; i < a.sym.w.slots.size(); ++i) {
        auto root = a.sym.w.slots[i].pth_root();
        if (!root) fail("frob_kill: slot is not a p-th power");
        // recheck by squaring back through the Frobenius
        if (root->frobenius() != a.sym.w.slots[i]) fail("frob_kill: root check failed");
        rooted.sym.w.slots[i] = std::move(*root);
      }
      replace.emplace_back(mv.term, std::move(rooted));
      break;
    }
    case MoveKind::SlotKill: {
      const Term& a = pick(cur, mv.term, "slot_kill");
      size_t nonzero = 0, where = 0;
      for (size_t i = 0; i < a.sym.w.slots.size(); ++i)
        if (!a.sym.w.slots[i].is_zero()) {
          ++nonzero;
          where = i;
        }
      if (nonzero != 1) fail("slot_kill: vector must have exactly one nonzero slot");
      bool matches = false;
      for (const auto& slot : a.sym.slots)
        if (slot == a.sym.w.slots[where]) matches = true;
      if (!matches) fail("slot_kill: vector entry matches no field slot");
      keep[mv.term] = false;
      break;
    }
    case MoveKind::ScalarFold: {
      const Term& a = pick(cur, mv.term, "scalar_fold");
      Term folded = a;
      folded.coeff = 1;
      // independent scalar evaluation: repeated addition of the reduced
      // multiplier (small by construction: c mod p^m)
      int64_t order = fp_ipow(a.sym.sig()->p, a.sym.m());
      int64_t c = fp_norm(a.coeff, order);
      WittVector acc = witt_zero(a.sym.sig(), a.sym.m());
      for (int64_t q = 0; q < c; ++q) acc = witt_add(acc, a.sym.w);
      folded.sym.w = std::move(acc);
      replace.emplace_back(mv.term, std::move(folded));
      break;
    }
    case MoveKind::ZeroKill: {
      const Term& a = pick(cur, mv.term, "zero_kill");
      for (const auto& s : a.sym.w.slots)
        if (!s.is_zero()) fail("zero_kill: vector is not zero");
      keep[mv.term] = false;
      break;
    }
  }
  return assemble(cur, keep, replace, insert);
}

}  // namespace

VerifyResult verify_certificate(const Certificate& cert) {
  try {
    validate_symbolsum(cert.start);
  } catch (const ContractError& e) {
    return {false, 0, std::string("start sum invalid: ") + e.what()};
  }
  SymbolSum cur = cert.start;
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const CertStep& step = cert.steps[i];
    SymbolSum expected;
    try {
      expected = expected_after(cur, step.move);
      validate_symbolsum(expected);
    } catch (const CheckFail& f) {
      return {false, i, f.reason};
    } catch (const ContractError& e) {
      return {false, i, std::string("step produces invalid sum: ") + e.what()};
    }
    if (!(expected == step.after)) {
      std::ostringstream os;
      os << move_name(step.move.kind)
         << ": recorded result differs from recomputed result";
      return {false, i, os.str()};
    }
    cur = std::move(expected);
  }
  if (!(cur == cert.end))
    return {false, cert.steps.size(), "final sum does not match recorded end"};
  return {true, 0, ""};
}

}  // namespace wittsym
