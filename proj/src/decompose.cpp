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

#include "wittsym/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wittsym/errors.hpp"
#include "wittsym/fp.hpp"
#include "wittsym/io.hpp"
#include "wittsym/moves.hpp"
#include "wittsym/pdep.hpp"
#include "wittsym/witt.hpp"

namespace wittsym {
namespace {

// Shared state for a rewrite in progress. All helpers below apply moves
// through the builder; every composite documents its net term-count effect
// so callers can track positions without tagging terms.
struct Ctx {
  CertBuilder& b;
  int64_t p;
  int M;       // working Witt length
  int64_t pM;  // p^M, the torsion modulus
};

Ctx make_ctx(CertBuilder& b) {
  const Symbol& s = b.term(0).sym;
  return Ctx{b, s.sig()->p, s.m(), fp_ipow(s.sig()->p, s.m())};
}

int64_t imod(int64_t a, int64_t m) { return ((a % m) + m) % m; }

const FieldElem& slot_of(const Ctx& c, size_t t, size_t slot) {
  return c.b.term(t).sym.slots.at(slot);
}

// Single-move wrappers.

Move at(MoveKind k, size_t t) {
  Move m;
  m.kind = k;
  m.term = t;
  return m;
}

void slot_split(Ctx& c, size_t t, size_t slot, FieldElem a) {
  Move m = at(MoveKind::SlotSplit, t);
  m.slot = slot;
  m.factor = std::move(a);
  c.b.apply(std::move(m));
}

void slot_kill(Ctx& c, size_t t) { c.b.apply(at(MoveKind::SlotKill, t)); }

void repeat_kill(Ctx& c, size_t t) { c.b.apply(at(MoveKind::RepeatKill, t)); }

void coeff_merge(Ctx& c, size_t t, size_t t2) {
  Move m = at(MoveKind::CoeffMerge, t);
  m.term2 = t2;
  c.b.apply(std::move(m));
}

void witt_split(Ctx& c, size_t t, WittVector w) {
  Move m = at(MoveKind::WittSplit, t);
  m.wsplit = std::move(w);
  c.b.apply(std::move(m));
}

void witt_merge(Ctx& c, size_t t, size_t t2) {
  Move m = at(MoveKind::WittMerge, t);
  m.term2 = t2;
  c.b.apply(std::move(m));
}

void scalar_fold(Ctx& c, size_t t) { c.b.apply(at(MoveKind::ScalarFold, t)); }

void zero_kill(Ctx& c, size_t t) { c.b.apply(at(MoveKind::ZeroKill, t)); }

void frob_kill(Ctx& c, size_t t) { c.b.apply(at(MoveKind::FrobKill, t)); }

void negate_term(Ctx& c, size_t t) { c.b.apply(at(MoveKind::Negate, t)); }

// Composites. Each one is a certified derived identity built from the
// primitive moves; the verifier never sees them as units, only their steps.

// Term t, coefficient divisible by p^M: fold to the zero vector and erase.
// Net: -1 term.
void kill_pm_torsion(Ctx& c, size_t t) {
  assert(imod(c.b.term(t).coeff, c.pM) == 0);
  scalar_fold(c, t);
  zero_kill(c, t);
}

// Term t with slot value chunk^e, e >= 1: split into e equal copies and
// re-merge, ending with (coeff * e, ... chunk ...). Net: 0 terms.
void chunk_split_fold(Ctx& c, size_t t, size_t slot, const FieldElem& chunk,
                      int64_t e) {
  assert(e >= 1);
  assert(slot_of(c, t, slot) == chunk.pow(e));
  if (e == 1) return;
  for (int64_t i = 0; i + 1 < e; ++i) slot_split(c, t + i, slot, chunk);
  for (int64_t i = 1; i < e; ++i) coeff_merge(c, t, t + 1);
}

// Term t with slot value chunk^{p^M}: a p^M-th power in one slot makes the
// whole term p^M-torsion, so it vanishes. Net: -1 term.
void vanish_pure_torsion_slot(Ctx& c, size_t t, size_t slot,
                              const FieldElem& chunk) {
  assert(slot_of(c, t, slot) == chunk.pow(c.pM));
  chunk_split_fold(c, t, slot, chunk, c.pM);
  kill_pm_torsion(c, t);
}

// Term t whose slot value is u^e for u the value at m3slot (any integer e):
// reduce the exponent mod p^M, discard the p^M-torsion part, and erase the
// term through the repeated-slot relation. Net: -1 term.
void kill_ue_slot(Ctx& c, size_t t, size_t slot, size_t m3slot, int64_t e) {
  assert(slot != m3slot);
  const FieldElem u = slot_of(c, t, m3slot);
  assert(slot_of(c, t, slot) == u.pow(e));
  const int64_t r = imod(e, c.pM);
  if (r == 0) {
    vanish_pure_torsion_slot(c, t, slot, u.pow(e / c.pM));
    return;
  }
  if (e != r) {
    slot_split(c, t, slot, u.pow(r));
    vanish_pure_torsion_slot(c, t + 1, slot, u.pow((e - r) / c.pM));
  }
  chunk_split_fold(c, t, slot, u, r);
  repeat_kill(c, t);
}

// Term t:  ... a ... b ...  ->  ... b ... a^{-1} ...  at slots i, j, with
// coefficient and Witt vector preserved. Net: 0 terms.
void swap_slots_inplace(Ctx& c, size_t t, size_t i, size_t j) {
  assert(i != j);
  const FieldElem a = slot_of(c, t, i);
  const FieldElem b = slot_of(c, t, j);
  const FieldElem ab = a * b;
  slot_split(c, t, i, ab);        // side: (b^{-1}, b)
  kill_ue_slot(c, t + 1, i, j, -1);
  slot_split(c, t, j, ab);        // main: (ab, ab), carrier: (ab, a^{-1})
  repeat_kill(c, t);
  slot_split(c, t, i, b);         // side: (a, a^{-1})
  kill_ue_slot(c, t + 1, i, j, -1);
}

// Term t: multiply slot dst by (value at src)^e, everything else unchanged.
// Net: 0 terms.
void absorb_slot(Ctx& c, size_t t, size_t dst, size_t src, int64_t e) {
  assert(dst != src);
  if (e == 0) return;
  const FieldElem target = slot_of(c, t, dst) * slot_of(c, t, src).pow(e);
  slot_split(c, t, dst, target);  // side slot dst = (value at src)^{-e}
  kill_ue_slot(c, t + 1, dst, src, -e);
}

// Term t with slot value keep * chunk^{p^M}: drop the torsion factor.
// Net: 0 terms.
void torsion_trim(Ctx& c, size_t t, size_t slot, const FieldElem& keep,
                  const FieldElem& chunk) {
  if (slot_of(c, t, slot) == keep) return;
  assert(slot_of(c, t, slot) == keep * chunk.pow(c.pM));
  slot_split(c, t, slot, keep);
  vanish_pure_torsion_slot(c, t + 1, slot, chunk);
}

// Term t with slots s1 = a, s2 = b: raise a to delta and b to the inverse
// exponent delta' (delta * delta' = 1 mod p^M), coefficient preserved. This
// is the exponent-scaling identity behind the first-slot rewrite. Net: 0.
void scale_pair_inplace(Ctx& c, size_t t, size_t s1, size_t s2, int64_t delta) {
  assert(delta >= 1 && delta < c.pM && std::gcd(delta, c.p) == 1);
  if (delta == 1) return;
  const FieldElem a = slot_of(c, t, s1);
  const FieldElem b = slot_of(c, t, s2);
  const int64_t dp = fp_inv(delta, c.pM);
  const int64_t k = (delta * dp - 1) / c.pM;
  assert(k >= 1);
  swap_slots_inplace(c, t, s1, s2);     // s1 = b, s2 = a^{-1}
  absorb_slot(c, t, s1, s2, -delta);    // s1 = b a^{delta}
  absorb_slot(c, t, s2, s1, dp);        // s2 = b^{dp} a^{k p^M}
  torsion_trim(c, t, s2, b.pow(dp), a.pow(k));
  absorb_slot(c, t, s1, s2, -delta);    // s1 = a^{delta} b^{-k p^M}
  torsion_trim(c, t, s1, a.pow(delta), b.pow(-k));
  assert(slot_of(c, t, s1) == a.pow(delta));
  assert(slot_of(c, t, s2) == b.pow(dp));
}

// Term t with n >= 2 slots holding b_0..b_{n-1}: rewrite slot 0 to the exact
// product prod b_k^{d_k}. d entries lie in [0, p^M) with at least one entry
// coprime to p; the lowest such entry's slot is brought to the front first.
// The other slots end up holding byproduct powers of their bases; the Witt
// vector and coefficient are untouched. Net: 0 terms.
void rewrite_first_slot_inplace(Ctx& c, size_t t, std::vector<int64_t> d) {
  const size_t n = c.b.term(t).sym.slots.size();
  assert(n >= 2 && d.size() == n);
  std::vector<FieldElem> base = c.b.term(t).sym.slots;
  std::vector<int64_t> exp(n, 1);
  size_t lead = n;
  for (size_t i = 0; i < n; ++i) {
    assert(d[i] >= 0 && d[i] < c.pM);
    if (lead == n && d[i] % c.p != 0) lead = i;
  }
  assert(lead < n);
  if (lead != 0) {
    swap_slots_inplace(c, t, 0, lead);
    std::swap(base[0], base[lead]);
    std::swap(d[0], d[lead]);
    exp[lead] = -1;
  }
  const int64_t delta = d[0];
  scale_pair_inplace(c, t, 0, 1, delta);
  if (delta != 1) exp[1] *= fp_inv(delta, c.pM);
  FieldElem acc = base[0].pow(delta);
  for (size_t k = 1; k < n; ++k) {
    if (d[k] == 0) continue;
    assert(imod(exp[k], c.p) != 0);
    const int64_t ek = (d[k] * fp_inv(imod(exp[k], c.pM), c.pM)) % c.pM;
    assert(ek != 0);
    absorb_slot(c, t, 0, k, ek);  // slot 0 gains base[k]^{exp[k] * ek}
    acc = acc * base[k].pow(d[k]);
    const int64_t s = (exp[k] * ek - d[k]) / c.pM;
    if (s != 0) torsion_trim(c, t, 0, acc, base[k].pow(s));
  }
  assert(slot_of(c, t, 0) == acc);
}

// Term t:  (coeff, w (x) .. b ..)  ->  (coeff * delta', w (x) .. b^delta ..)
// for coprime delta, delta' its inverse mod p^M. Unlike the public rewrite
// this keeps the Witt vector intact and lets the coefficient carry the
// inverse factor, which the single-slot kill downstream tolerates. Net: 0.
void rewrite_single_slot_pow(Ctx& c, size_t t, size_t slot, int64_t delta) {
  assert(delta >= 1 && delta < c.pM && std::gcd(delta, c.p) == 1);
  if (delta == 1) return;
  const FieldElem b = slot_of(c, t, slot);
  const int64_t dp = fp_inv(delta, c.pM);
  const int64_t s = (delta * dp - 1) / c.pM;
  assert(s >= 1);
  slot_split(c, t, slot, b.pow(delta * dp));
  vanish_pure_torsion_slot(c, t + 1, slot, b.pow(-s));
  chunk_split_fold(c, t, slot, b.pow(delta), dp);
}

// Term t with slot value u^p: merge p copies so the Witt vector picks up a
// factor p, evaluate, and take the slotwise root. After this the vector is
// V(trunc(coeff * w, M-1)), the coefficient is 1 and the slot holds u.
// Returns false (net -1 term, no survivor) when the folded vector is zero,
// true otherwise (net 0). The certificate idiom behind the p-copies trick.
bool p_copies_fold(Ctx& c, size_t t, size_t slot) {
  auto u = slot_of(c, t, slot).pth_root();
  assert(u.has_value());
  chunk_split_fold(c, t, slot, *u, c.p);
  scalar_fold(c, t);
  if (c.b.term(t).sym.w.is_zero()) {
    zero_kill(c, t);
    return false;
  }
  frob_kill(c, t);
  return true;
}

// Term t with slot value v: replace it by v^{-1}, negating the vector and
// folding the coefficient to 1. Returns false when the folded vector is zero
// (term erased, net -1), true otherwise (net 0).
bool flip_inverse_slot(Ctx& c, size_t t, size_t slot) {
  const FieldElem v = slot_of(c, t, slot);
  slot_split(c, t, slot, v.pow(1 - c.pM));  // side slot = v^{p^M}
  vanish_pure_torsion_slot(c, t + 1, slot, v);
  chunk_split_fold(c, t, slot, v.inv(), c.pM - 1);
  scalar_fold(c, t);
  if (c.b.term(t).sym.w.is_zero()) {
    zero_kill(c, t);
    return false;
  }
  return true;
}

// One witness index with its value and assembled piece residue.
struct Piece {
  ExpIndex d;
  FieldElem z;
  FieldElem mu;  // z^p * prod bases^d
};

// Splits term pos into head + one single-slot piece per witness entry and
// cancels the lambda part:
//   [head, P_{d_1}, ..., P_{d_J}]   (indices ascending)
// where P_d = (mu_d, 0, ..., 0) tensored with the term's field slots and the
// head is the input minus all pieces minus (F - 1)(lambda, 0, ..., 0). The
// witness identity makes the head's first Witt slot exactly zero.
std::vector<Piece> peel_witness_pieces(Ctx& c, size_t pos, const ASWitness& wit,
                                       const std::vector<FieldElem>& bases) {
  const SigPtr sig = c.b.term(pos).sym.sig();
  assert(c.b.term(pos).sym.w.slots[0] == as_residue(wit, bases));
  std::vector<Piece> pieces;
  for (const auto& [d, z] : wit.z) {
    FieldElem mu = z.frobenius();
    for (size_t i = 0; i < bases.size(); ++i)
      if (d[i] != 0) mu = mu * bases[i].pow(d[i]);
    pieces.push_back(Piece{d, z, std::move(mu)});
  }
  const bool has_lambda = !wit.lambda.is_zero();
  WittVector lam = witt_single(sig, c.M, 0, wit.lambda);
  if (has_lambda) witt_split(c, pos, witt_sub(witt_frobenius(lam), lam));
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
    witt_split(c, pos, witt_single(sig, c.M, 0, it->mu));
  if (has_lambda) {
    // The lambda term dies in four moves: peel -(lambda,0,..), reduce the
    // Frobenius image, cancel, erase.
    const size_t q = pos + pieces.size() + 1;
    witt_split(c, q, witt_neg(lam));
    frob_kill(c, q);
    witt_merge(c, q, q + 1);
    zero_kill(c, q);
  }
  assert(c.b.term(pos).sym.w.slots[0].is_zero());
  return pieces;
}

// Erases the head at pos if its vector is fully zero. Returns true when the
// head remains as an output.
bool resolve_head(Ctx& c, size_t pos) {
  if (c.b.term(pos).sym.w.is_zero()) {
    zero_kill(c, pos);
    return false;
  }
  return true;
}

// The single-symbol peel: decomposes term pos (coefficient 1) against a
// witness for its residue over its own field slots. On return the surviving
// outputs sit contiguously at [pos, pos + count), each with coefficient 1
// and first Witt slot zero; terms right of the input shift accordingly.
size_t theorem3_inplace(Ctx& c, size_t pos, const ASWitness& wit) {
  assert(c.b.term(pos).coeff == 1);
  const std::vector<FieldElem> bases = c.b.term(pos).sym.slots;
  const size_t n = bases.size();
  std::vector<Piece> pieces = peel_witness_pieces(c, pos, wit, bases);
  size_t count = resolve_head(c, pos) ? 1 : 0;
  size_t cur = pos + count;
  for (const Piece& pc : pieces) {
    // Tail at cur: (c', (mu,0,..) (x) slots). Rewrite slot 0 to the exact
    // monomial prod bases^d, then strip mu off it; what remains is z^{-p},
    // which the p-copies fold and the inversion flip turn into the output
    // -(V trunc)(x) z (x) byproducts.
    if (n >= 2) {
      rewrite_first_slot_inplace(c, cur,
                                 std::vector<int64_t>(pc.d.begin(), pc.d.end()));
    } else {
      rewrite_single_slot_pow(c, cur, 0, pc.d[0]);
    }
    slot_split(c, cur, 0, pc.mu);
    slot_kill(c, cur);
    bool alive = p_copies_fold(c, cur, 0);
    assert(alive);
    alive = flip_inverse_slot(c, cur, 0);
    assert(alive);
    assert(slot_of(c, cur, 0) == pc.z);
    assert(c.b.term(cur).sym.w.slots[0].is_zero());
    assert(c.b.term(cur).coeff == 1);
    ++cur;
    ++count;
  }
  return count;
}

// The telescoping rewrite, operating on a builder that holds exactly
// [(1, omega (x) betas), (-1, tau (x) deltas)]. Emits the 2n+1 lines in
// order at positions 0..2n; the carrier drifts right and finally merges
// with the negated second term.
void telescope_inplace(Ctx& c, const std::vector<FieldElem>& gammas) {
  assert(c.b.size() == 2);
  const std::vector<FieldElem> beta = c.b.term(0).sym.slots;
  const std::vector<FieldElem> delta = c.b.term(1).sym.slots;
  const size_t n = beta.size();
  size_t car = 0;
  for (size_t l = 0; l + 1 < n; ++l) slot_split(c, car++, l, beta[l] * gammas[l].inv());
  slot_split(c, car++, n - 1, delta[n - 1].inv());
  slot_split(c, car++, n - 1, beta[n - 1]);
  for (size_t i = n - 1; i-- > 0;) slot_split(c, car++, i, gammas[i] * delta[i].inv());
  assert(car == 2 * n && c.b.size() == 2 * n + 2);
  assert(c.b.term(car).sym.slots == delta);
  negate_term(c, car + 1);
  witt_merge(c, car, car + 1);
}

int64_t count_bound_or_throw(size_t count, int64_t bound, const char* what) {
  if (static_cast<int64_t>(count) > bound)
    throw std::logic_error(std::string(what) + ": output count exceeds the bound");
  return bound;
}

Decomposition collect_outputs(CertBuilder& b, int64_t bound) {
  Decomposition r;
  r.bound = bound;
  for (size_t i = 0; i < b.size(); ++i) {
    const Term& t = b.term(i);
    assert(t.coeff == 1);
    r.outputs.push_back(unlift_symbol(t.sym));
  }
  r.cert = b.finish();
  return r;
}

std::string render_dependence(const IndexMap& dep) {
  std::string out;
  for (const auto& [d, x] : dep) {
    out += "x " + io::render_index(d) + " = " + io::render_elem(x) + "\n";
  }
  return out;
}

}  // namespace

FirstSlotRewrite rewrite_first_slot(const Symbol& s, const std::vector<int64_t>& d) {
  validate_symbol(s);
  const size_t n = static_cast<size_t>(s.n());
  if (d.size() != n) throw ContractError("exponent list length must match slot count");
  const int64_t pM = fp_ipow(s.sig()->p, s.m());
  bool coprime = false;
  for (int64_t e : d) {
    if (e < 0 || e >= pM) throw ContractError("exponent out of range [0, p^m)");
    if (e % s.sig()->p != 0) coprime = true;
  }
  if (!coprime) throw ContractError("no exponent coprime to p");
  SymbolSum start;
  start.terms.push_back(Term{1, s});
  CertBuilder b(std::move(start));
  Ctx c = make_ctx(b);
  if (n >= 2) {
    rewrite_first_slot_inplace(c, 0, d);
  } else if (d[0] != 1) {
    // Single slot: no workspace slot exists, so the inverse-exponent factor
    // moves into the Witt vector instead of a second slot.
    const int64_t delta = d[0];
    const int64_t dp = fp_inv(delta, pM);
    const FieldElem base = s.slots[0];
    slot_split(c, 0, 0, base.pow(delta * dp));
    vanish_pure_torsion_slot(c, 1, 0, base.pow(-(delta * dp - 1) / pM));
    chunk_split_fold(c, 0, 0, base.pow(delta), dp);
    scalar_fold(c, 0);
  }
  FirstSlotRewrite r;
  assert(b.size() == 1 && b.term(0).coeff == 1);
  r.out = b.term(0).sym;
  FieldElem target = FieldElem::one(s.sig());
  for (size_t i = 0; i < n; ++i) target = target * s.slots[i].pow(d[i]);
  if (r.out.slots[0] != target)
    throw std::logic_error("first-slot rewrite missed its target");
  r.gammas.assign(r.out.slots.begin() + 1, r.out.slots.end());
  r.cert = b.finish();
  return r;
}

SlotExpansion expand_slot(const Symbol& s, size_t i,
                          const std::vector<FieldElem>& factors) {
  validate_symbol(s);
  if (i >= static_cast<size_t>(s.n())) throw ContractError("slot index out of range");
  if (factors.empty()) throw ContractError("factor list must be nonempty");
  FieldElem prod = FieldElem::one(s.sig());
  for (const FieldElem& f : factors) {
    require_same_sig(f.sig(), s.sig());
    if (f.is_zero()) throw ContractError("factors must be nonzero");
    prod = prod * f;
  }
  if (prod != s.slots[i])
    throw ContractError("factors do not multiply to the slot value");
  SymbolSum start;
  start.terms.push_back(Term{1, s});
  CertBuilder b(std::move(start));
  Ctx c = make_ctx(b);
  for (size_t k = 0; k + 1 < factors.size(); ++k) slot_split(c, k, i, factors[k]);
  assert(b.size() == factors.size());
  assert(b.term(factors.size() - 1).sym.slots[i] == factors.back());
  SlotExpansion r;
  r.sum = b.current();
  r.cert = b.finish();
  return r;
}

SlotSwap antisymmetry_swap(const Symbol& s, size_t i, size_t j) {
  validate_symbol(s);
  const size_t n = static_cast<size_t>(s.n());
  if (i >= n || j >= n) throw ContractError("slot index out of range");
  if (i == j) throw ContractError("swap needs two distinct slots");
  SymbolSum start;
  start.terms.push_back(Term{1, s});
  CertBuilder b(std::move(start));
  Ctx c = make_ctx(b);
  swap_slots_inplace(c, 0, i, j);
  assert(b.size() == 1 && b.term(0).coeff == 1);
  SlotSwap r;
  r.out = b.term(0).sym;
  r.cert = b.finish();
  return r;
}

Decomposition theorem3(const Symbol& s, const ASWitness& wit) {
  validate_symbol(s);
  if (s.m() < 2) throw ContractError("decomposition requires vector length >= 2");
  if (!check_as_witness(s.w.slots[0], s.slots, wit))
    throw InvalidWitness("witness does not split the residue");
  SymbolSum start;
  start.terms.push_back(Term{1, s});
  CertBuilder b(std::move(start));
  Ctx c = make_ctx(b);
  const size_t count = theorem3_inplace(c, 0, wit);
  assert(count == b.size());
  const int64_t bound = count_bound_or_throw(count, fp_ipow(s.sig()->p, s.n()),
                                             "single-symbol peel");
  return collect_outputs(b, bound);
}

std::optional<ASWitness> PlantedProvider::witness_for(
    int level, const FieldElem&, const std::vector<FieldElem>&) {
  auto it = wit_.levels.find(level);
  if (it == wit_.levels.end()) return std::nullopt;
  return it->second;
}

std::optional<ASWitness> ChainedProvider::witness_for(
    int level, const FieldElem& alpha, const std::vector<FieldElem>& slot_bases) {
  for (WitnessProvider* p : providers_) {
    if (auto w = p->witness_for(level, alpha, slot_bases)) return w;
  }
  return std::nullopt;
}

Decomposition theorem4(const std::vector<std::pair<WittVector, FieldElem>>& pairs,
                       WitnessProvider& provider) {
  if (pairs.empty()) throw ContractError("need at least one pair");
  const int r = static_cast<int>(pairs.size());
  const SigPtr sig = pairs[0].first.sig;
  const int m = pairs[0].first.m();
  if (m < 2) throw ContractError("decomposition requires vector length >= 2");
  std::vector<FieldElem> betas;
  for (const auto& [w, beta] : pairs) {
    require_same_sig(w.sig, sig);
    require_same_sig(beta.sig(), sig);
    if (w.m() != m) throw ContractError("mixed vector lengths");
    if (beta.is_zero()) throw ContractError("slot element must be nonzero");
    betas.push_back(beta);
  }
  if (r >= 2) {
    std::vector<FieldElem> head(betas.begin(), betas.end() - 1);
    PDepResult dep = p_independence(head);
    if (!dep.independent)
      throw DependentSlots("slot elements 1..r-1 are p-dependent",
                           render_dependence(dep.dependence));
  }
  SymbolSum start;
  for (const auto& [w, beta] : pairs)
    start.terms.push_back(Term{1, Symbol{w, {beta}}});
  CertBuilder b(std::move(start));
  Ctx c = make_ctx(b);
  const int64_t pM = c.pM;
  size_t total = 0;
  // Peel levels r, r-1, .., 1. Before level j runs, the term at j-1 holds
  // the level's accumulated vector tensored with beta_j; pieces split from
  // level j merge into the terms at 0..j-2, which is what makes the
  // recursion on the residual class a flat loop here.
  for (int j = r; j >= 1; --j) {
    const size_t wpos = static_cast<size_t>(j - 1);
    assert(b.term(wpos).coeff == 1 && b.term(wpos).sym.slots[0] == betas[wpos]);
    const FieldElem alpha = b.term(wpos).sym.w.slots[0];
    const std::vector<FieldElem> bases(betas.begin(), betas.begin() + j);
    std::optional<ASWitness> wito = provider.witness_for(j, alpha, bases);
    if (!wito)
      throw ProviderFailure("no witness offered for level " + std::to_string(j),
                            j, io::render_elem(alpha));
    const ASWitness wit = std::move(*wito);
    const std::string at = "level " + std::to_string(j) + ": ";
    try {
      if (!check_as_witness(alpha, bases, wit))
        throw InvalidWitness("witness does not split the level residue");
    } catch (const InvalidWitness& e) {
      throw InvalidWitness(at + e.what());
    }
    for (const auto& [d, z] : wit.z)
      if (d.back() == 0)
        throw InvalidWitness(at + "witness index does not involve the level slot");
    std::vector<Piece> pieces = peel_witness_pieces(c, wpos, wit, bases);
    size_t cur = wpos + (resolve_head(c, wpos) ? 1 : 0);
    for (const Piece& pc : pieces) {
      // Tail at cur: (1, (mu,0,..) (x) beta_j) with
      // mu = z^p * prod_{t<j} beta_t^{i_t} * beta_j^k. Scaling by k's
      // inverse exposes mu in the slot; the rest of the slot splits into
      // the z part (one output) and per-beta_t parts that fold down to
      // multiples of (mu,0,..) and merge into the lower-level terms.
      const int64_t k = pc.d.back();
      int64_t kinv = 1;
      if (k >= 2) {
        rewrite_single_slot_pow(c, cur, 0, k);
        kinv = fp_inv(k, pM);
      }
      slot_split(c, cur, 0, pc.mu);
      slot_kill(c, cur);
      bool has_lower = false;
      for (size_t t = 0; t + 1 < pc.d.size(); ++t)
        if (pc.d[t] != 0) has_lower = true;
      if (has_lower) slot_split(c, cur, 0, pc.z.frobenius().inv());
      bool alive = p_copies_fold(c, cur, 0);
      assert(alive);
      alive = flip_inverse_slot(c, cur, 0);
      assert(alive);
      assert(slot_of(c, cur, 0) == pc.z);
      if (has_lower) {
        size_t q = cur + 1;  // (kinv, (mu,0,..) (x) prod beta_t^{-i_t})
        std::vector<size_t> active;
        for (size_t t = 0; t + 1 < pc.d.size(); ++t)
          if (pc.d[t] != 0) active.push_back(t);
        for (size_t idx = 0; idx < active.size(); ++idx) {
          const size_t t = active[idx];
          const int64_t it = pc.d[t];
          if (idx + 1 < active.size())
            slot_split(c, q, 0, betas[t].pow(-it));
          assert(slot_of(c, q, 0) == betas[t].pow(-it));
          const int64_t e2 = pM - it;
          slot_split(c, q, 0, betas[t].pow(e2));
          vanish_pure_torsion_slot(c, q + 1, 0, betas[t].inv());
          chunk_split_fold(c, q, 0, betas[t], e2);
          scalar_fold(c, q);  // (1, ((-kinv*i_t) mod p^M) (mu,0,..) (x) beta_t)
          assert(imod(kinv * e2, pM) != 0);
          witt_merge(c, t, q);
        }
      }
      ++cur;
    }
    total += cur - wpos;
  }
  assert(total == b.size());
  const int64_t bound = count_bound_or_throw(
      total, fp_ipow(sig->p, r) + r - 1, "pair-list peel");
  return collect_outputs(b, bound);
}

std::vector<std::vector<FieldElem>> telescope_line_slots(
    const std::vector<FieldElem>& betas, const std::vector<FieldElem>& gammas,
    const std::vector<FieldElem>& deltas) {
  const size_t n = betas.size();
  if (deltas.size() != n || gammas.size() + 1 != n)
    throw ContractError("slot list lengths do not match");
  std::vector<std::vector<FieldElem>> lines;
  std::vector<FieldElem> carrier = betas;
  auto emit = [&](size_t slot, const FieldElem& kept, const FieldElem& next) {
    std::vector<FieldElem> line = carrier;
    line[slot] = kept;
    lines.push_back(std::move(line));
    carrier[slot] = next;
  };
  for (size_t l = 0; l + 1 < n; ++l)
    emit(l, betas[l] * gammas[l].inv(), gammas[l]);
  emit(n - 1, deltas[n - 1].inv(), betas[n - 1] * deltas[n - 1]);
  emit(n - 1, betas[n - 1], deltas[n - 1]);
  for (size_t i = n - 1; i-- > 0;)
    emit(i, gammas[i] * deltas[i].inv(), deltas[i]);
  lines.push_back(carrier);  // == deltas
  return lines;
}

namespace {

void validate_telescope_inputs(const Symbol& s1, const Symbol& s2,
                               const std::vector<FieldElem>& gammas) {
  validate_symbol(s1);
  validate_symbol(s2);
  require_same_sig(s1.sig(), s2.sig());
  if (s1.sig()->p != 2) throw ContractError("telescoping requires p = 2");
  if (s1.m() != s2.m()) throw ContractError("mixed vector lengths");
  if (s1.n() != s2.n()) throw ContractError("mixed slot counts");
  if (gammas.size() + 1 != static_cast<size_t>(s1.n()))
    throw ContractError("need n - 1 intermediate slot elements");
  for (const FieldElem& g : gammas) {
    require_same_sig(g.sig(), s1.sig());
    if (g.is_zero()) throw ContractError("intermediate slot element must be nonzero");
  }
}

}  // namespace

Telescope telescope(const Symbol& s1, const Symbol& s2,
                    const std::vector<FieldElem>& gammas) {
  validate_telescope_inputs(s1, s2, gammas);
  SymbolSum start;
  start.terms.push_back(Term{1, s1});
  start.terms.push_back(Term{-1, s2});
  CertBuilder b(std::move(start));
  Ctx c = make_ctx(b);
  telescope_inplace(c, gammas);
  const size_t n = static_cast<size_t>(s1.n());
  assert(b.size() == 2 * n + 1);
  const auto expected = telescope_line_slots(s1.slots, gammas, s2.slots);
  Telescope r;
  for (size_t i = 0; i < b.size(); ++i) {
    assert(b.term(i).coeff == 1);
    assert(b.term(i).sym.slots == expected[i]);
    r.lines.push_back(b.term(i).sym);
  }
  r.cert = b.finish();
  return r;
}

Decomposition theorem5(const Symbol& s1, const Symbol& s2, const ChainWitness& wit) {
  validate_telescope_inputs(s1, s2, wit.gammas);
  if (s1.m() < 2) throw ContractError("decomposition requires vector length >= 2");
  const size_t n = static_cast<size_t>(s1.n());
  if (wit.lines.size() != 2 * n + 1)
    throw ContractError("need one witness per telescope line");
  const auto line_slots = telescope_line_slots(s1.slots, wit.gammas, s2.slots);
  const FieldElem res_top = s1.w.slots[0];
  const FieldElem res_last = s1.w.slots[0] - s2.w.slots[0];
  for (size_t l = 0; l < wit.lines.size(); ++l) {
    const FieldElem& res = (l + 1 == wit.lines.size()) ? res_last : res_top;
    const std::string at = "line " + std::to_string(l + 1) + ": ";
    try {
      if (!check_as_witness(res, line_slots[l], wit.lines[l]))
        throw InvalidWitness("witness does not split the line residue");
    } catch (const InvalidWitness& e) {
      throw InvalidWitness(at + e.what());
    }
  }
  SymbolSum start;
  start.terms.push_back(Term{1, s1});
  start.terms.push_back(Term{-1, s2});
  CertBuilder b(std::move(start));
  Ctx c = make_ctx(b);
  telescope_inplace(c, wit.gammas);
  size_t pos = 0;
  for (size_t l = 0; l < wit.lines.size(); ++l)
    pos += theorem3_inplace(c, pos, wit.lines[l]);
  assert(pos == b.size());
  const int64_t bound = count_bound_or_throw(
      pos, static_cast<int64_t>(2 * n + 1) * fp_ipow(2, static_cast<int>(n)),
      "telescoped peel");
  return collect_outputs(b, bound);
}

}  // namespace wittsym
