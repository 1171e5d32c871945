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

#include "wittsym/multipoly.hpp"

#include <algorithm>
#include <cassert>

#include "wittsym/fp.hpp"

namespace wittsym {

MultiPoly MultiPoly::constant(SigPtr sig, int64_t c) {
  MultiPoly r(sig);
  r.add_term(Monomial(sig->nvars(), 0), c);
  return r;
}

MultiPoly MultiPoly::variable(SigPtr sig, size_t index) {
  if (index >= sig->nvars()) throw ContractError("variable index out of range");
  Monomial m(sig->nvars(), 0);
  m[index] = 1;
  MultiPoly r(sig);
  r.add_term(m, 1);
  return r;
}

MultiPoly MultiPoly::monomial(SigPtr sig, Monomial exps, int64_t c) {
  if (exps.size() != sig->nvars()) throw ContractError("monomial arity mismatch");
  MultiPoly r(sig);
  r.add_term(exps, c);
  return r;
}

void MultiPoly::add_term(const Monomial& m, int64_t c) {
  assert(m.size() == sig_->nvars());
  c = fp_norm(c, p());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = fp_add(it->second, c, p());
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (uint32_t e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

int64_t MultiPoly::constant_value() const {
  Monomial unit(sig_->nvars(), 0);
  auto it = terms_.find(unit);
  return it == terms_.end() ? 0 : it->second;
}

int64_t MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // grlex max has maximal total degree
  uint64_t d = 0;
  for (uint32_t e : terms_.rbegin()->first) d += e;
  return static_cast<int64_t>(d);
}

const Monomial& MultiPoly::leading_monomial() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

int64_t MultiPoly::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_sig(sig_, o.sig_);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  require_same_sig(sig_, o.sig_);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::neg() const {
  MultiPoly r(sig_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, fp_neg(c, p()));
  return r;
}

MultiPoly MultiPoly::scale(int64_t c) const {
  c = fp_norm(c, p());
  MultiPoly r(sig_);
  if (c == 0) return r;
  for (const auto& [m, co] : terms_) r.add_term(m, fp_mul(co, c, p()));
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_sig(sig_, o.sig_);
  MultiPoly r(sig_);
  const size_t nv = sig_->nvars();
  Monomial prod(nv);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (size_t i = 0; i < nv; ++i) prod[i] = ma[i] + mb[i];
      r.add_term(prod, fp_mul(ca, cb, p()));
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(uint64_t e) const {
  MultiPoly base = *this;
  MultiPoly r = constant(sig_, 1);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MultiPoly MultiPoly::frobenius() const {
  MultiPoly r(sig_);
  const uint32_t pp = static_cast<uint32_t>(p());
  for (const auto& [m, c] : terms_) {
    Monomial mp = m;
    for (auto& e : mp) e *= pp;
    r.terms_.emplace(mp, c);  // c^p == c in F_p
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::pth_root() const {
  MultiPoly r(sig_);
  const uint32_t pp = static_cast<uint32_t>(p());
  for (const auto& [m, c] : terms_) {
    Monomial mr = m;
    for (auto& e : mr) {
      if (e % pp != 0) return std::nullopt;
      e /= pp;
    }
    r.terms_.emplace(mr, c);
  }
  return r;
}

int64_t MultiPoly::degree_in(size_t var) const {
  int64_t d = -1;
  for (const auto& [m, c] : terms_) {
    (void)c;
    d = std::max(d, static_cast<int64_t>(m[var]));
  }
  return terms_.empty() ? 0 : (d < 0 ? 0 : d);
}

MultiPoly MultiPoly::coeff_of(size_t var, uint32_t e) const {
  MultiPoly r(sig_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != e) continue;
    Monomial rest = m;
    rest[var] = 0;
    r.terms_.emplace(rest, c);
  }
  return r;
}

std::optional<size_t> MultiPoly::main_variable() const {
  std::optional<size_t> best;
  for (const auto& [m, c] : terms_) {
    (void)c;
    for (size_t i = m.size(); i-- > 0;) {
      if (m[i] != 0) {
        if (!best || i > *best) best = i;
        break;
      }
    }
  }
  return best;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& dividend, const MultiPoly& divisor) {
  require_same_sig(dividend.sig(), divisor.sig());
  if (divisor.is_zero()) throw ContractError("division by zero polynomial");
  const int64_t p = dividend.p();
  MultiPoly q(dividend.sig());
  MultiPoly r = dividend;
  const Monomial& dlm = divisor.leading_monomial();
  const int64_t dlc_inv = fp_inv(divisor.leading_coeff(), p);
  const size_t nv = dlm.size();
  Monomial shift(nv);
  while (!r.is_zero()) {
    const Monomial& rlm = r.leading_monomial();
    for (size_t i = 0; i < nv; ++i) {
      if (rlm[i] < dlm[i]) return std::nullopt;
      shift[i] = rlm[i] - dlm[i];
    }
    int64_t c = fp_mul(r.leading_coeff(), dlc_inv, p);
    MultiPoly t = MultiPoly::monomial(dividend.sig(), shift, c);
    q = q + t;
    r = r - t * divisor;
  }
  return q;
}

namespace {

MultiPoly make_monic(const MultiPoly& a) {
  if (a.is_zero()) return a;
  return a.scale(fp_inv(a.leading_coeff(), a.p()));
}

// Content of a with respect to var: gcd of the coefficient polynomials of the
// powers of var. Recurses into poly_gcd on polynomials free of var.
MultiPoly content_wrt(const MultiPoly& a, size_t var) {
  MultiPoly g = MultiPoly::zero(a.sig());
  int64_t d = a.degree_in(var);
  for (int64_t e = d; e >= 0; --e) {
    MultiPoly c = a.coeff_of(var, static_cast<uint32_t>(e));
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in the variable var; deg_var(b) >= 1.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, size_t var) {
  const int64_t db = b.degree_in(var);
  const MultiPoly lcb = b.coeff_of(var, static_cast<uint32_t>(db));
  MultiPoly r = a;
  while (!r.is_zero()) {
    int64_t dr = r.degree_in(var);
    if (dr < db) break;
    MultiPoly lcr = r.coeff_of(var, static_cast<uint32_t>(dr));
    if (lcr.is_zero()) break;  // cannot happen; defensive
    Monomial shift(r.sig()->nvars(), 0);
    shift[var] = static_cast<uint32_t>(dr - db);
    MultiPoly xs = MultiPoly::monomial(r.sig(), shift, 1);
    r = r * lcb - lcr * xs * b;
  }
  return r;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  require_same_sig(a.sig(), b.sig());
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.sig(), 1);

  auto mva = a.main_variable();
  auto mvb = b.main_variable();
  size_t var = std::max(*mva, *mvb);

  // Gauss: gcd = gcd(contents) * gcd(primitive parts), primitive-remainder
  // sequence in var for the latter.
  MultiPoly ca = content_wrt(a, var);
  MultiPoly cb = content_wrt(b, var);
  MultiPoly pa = *divide_exact(a, ca);
  MultiPoly pb = *divide_exact(b, cb);
  MultiPoly cg = poly_gcd(ca, cb);

  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  MultiPoly g(a.sig());
  for (;;) {
    if (pb.is_zero()) {
      g = pa;
      break;
    }
    if (pb.degree_in(var) == 0) {
      // nonzero, var-free, and both sides primitive in var: gcd of parts is 1
      g = MultiPoly::constant(a.sig(), 1);
      break;
    }
    MultiPoly r = prem(pa, pb, var);
    pa = pb;
    if (r.is_zero()) {
      pb = r;
    } else {
      MultiPoly cr = content_wrt(r, var);
      pb = *divide_exact(r, cr);
    }
  }
  return make_monic(cg * g);
}

}  // namespace wittsym
