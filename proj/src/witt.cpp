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

#include "wittsym/witt.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <map>
#include <mutex>
#include <string>

#include "wittsym/fp.hpp"

namespace wittsym {

namespace {

using boost::multiprecision::cpp_int;

// Integer polynomials over the 2m table variables, used only while deriving
// the universal laws; coefficients can exceed any fixed-width type before the
// divisions by p^i happen.
using ZPoly = std::map<Monomial, cpp_int, GrlexLess>;

void zadd(ZPoly& dst, const Monomial& m, const cpp_int& c) {
  if (c == 0) return;
  auto [it, inserted] = dst.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) dst.erase(it);
  }
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  for (const auto& [m, c] : b) zadd(r, m, c);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  for (const auto& [m, c] : b) zadd(r, m, -c);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, size_t nv) {
  ZPoly r;
  Monomial prod(nv);
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      for (size_t i = 0; i < nv; ++i) prod[i] = ma[i] + mb[i];
      zadd(r, prod, ca * cb);
    }
  return r;
}

ZPoly zpow(const ZPoly& a, uint64_t e, size_t nv) {
  ZPoly base = a;
  ZPoly r;
  r.emplace(Monomial(nv, 0), 1);
  while (e) {
    if (e & 1) r = zmul(r, base, nv);
    base = zmul(base, base, nv);
    e >>= 1;
  }
  return r;
}

ZPoly zscale(const ZPoly& a, const cpp_int& c) {
  ZPoly r;
  if (c == 0) return r;
  for (const auto& [m, co] : a) r.emplace(m, co * c);
  return r;
}

// Ghost component i over variables var_base + 0..i:
//   sum_{j <= i} p^j * X_{base+j}^{p^(i-j)}
ZPoly ghost(int64_t p, int i, size_t var_base, size_t nv) {
  ZPoly g;
  cpp_int pj = 1;
  for (int j = 0; j <= i; ++j) {
    Monomial m(nv, 0);
    m[var_base + static_cast<size_t>(j)] =
        static_cast<uint32_t>(fp_ipow(p, i - j));
    zadd(g, m, pj);
    pj *= p;
  }
  return g;
}

ZPoly zdiv_exact(const ZPoly& a, const cpp_int& d) {
  ZPoly r;
  for (const auto& [m, c] : a) {
    assert(c % d == 0 && "ghost recursion coefficient not divisible");
    r.emplace(m, c / d);
  }
  return r;
}

MultiPoly reduce_mod_p(const ZPoly& a, const SigPtr& sig) {
  MultiPoly r(sig);
  for (const auto& [m, c] : a) {
    cpp_int red = c % sig->p;
    if (red < 0) red += sig->p;
    r.add_term(m, static_cast<int64_t>(red));
  }
  return r;
}

std::shared_ptr<const WittTable> build_table(int64_t p, int m) {
  const size_t nv = 2 * static_cast<size_t>(m);
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 0; i < m; ++i) names.push_back("y" + std::to_string(i));
  SigPtr tsig = make_signature(p, names);

  auto table = std::make_shared<WittTable>();
  table->p = p;
  table->m = m;
  table->table_sig = tsig;

  // p^i * S_i = W_i(x) + W_i(y) - sum_{j<i} p^j * S_j^{p^(i-j)}
  std::vector<ZPoly> s(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    ZPoly t = zadd(ghost(p, i, 0, nv), ghost(p, i, static_cast<size_t>(m), nv));
    cpp_int pj = 1;
    for (int j = 0; j < i; ++j) {
      t = zsub(t, zscale(zpow(s[static_cast<size_t>(j)],
                              static_cast<uint64_t>(fp_ipow(p, i - j)), nv),
                         pj));
      pj *= p;
    }
    s[static_cast<size_t>(i)] = zdiv_exact(t, pj);  // pj == p^i here
    table->sum.push_back(reduce_mod_p(s[static_cast<size_t>(i)], tsig));
  }

  // p^i * N_i = -W_i(x) - sum_{j<i} p^j * N_j^{p^(i-j)}
  std::vector<ZPoly> neg(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    ZPoly t = zscale(ghost(p, i, 0, nv), -1);
    cpp_int pj = 1;
    for (int j = 0; j < i; ++j) {
      t = zsub(t, zscale(zpow(neg[static_cast<size_t>(j)],
                              static_cast<uint64_t>(fp_ipow(p, i - j)), nv),
                         pj));
      pj *= p;
    }
    neg[static_cast<size_t>(i)] = zdiv_exact(t, pj);
    table->neg.push_back(reduce_mod_p(neg[static_cast<size_t>(i)], tsig));
  }

  return table;
}

std::mutex table_mutex;
std::map<std::pair<int64_t, int>, std::shared_ptr<const WittTable>> table_cache;

// Evaluate a table polynomial at field-element arguments.
FieldElem eval_table_poly(const MultiPoly& poly, const std::vector<FieldElem>& args,
                          const SigPtr& sig) {
  FieldElem acc = FieldElem::zero(sig);
  for (const auto& [mono, coeff] : poly.terms()) {
    FieldElem term = FieldElem::constant(sig, coeff);
    bool zero = false;
    for (size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      if (args[v].is_zero()) {
        zero = true;
        break;
      }
      term = term * args[v].pow(mono[v]);
    }
    if (!zero) acc = acc + term;
  }
  return acc;
}

void require_witt_pair(const WittVector& a, const WittVector& b) {
  require_same_sig(a.sig, b.sig);
  if (a.m() != b.m()) throw ContractError("vector length mismatch");
}

}  // namespace

std::shared_ptr<const WittTable> witt_table(int64_t p, int m) {
  if (!fp_is_prime(p)) throw ContractError("characteristic must be prime");
  if (m < 1) throw ContractError("vector length must be positive");
  std::lock_guard<std::mutex> lock(table_mutex);
  auto key = std::make_pair(p, m);
  auto it = table_cache.find(key);
  if (it != table_cache.end()) return it->second;
  auto t = build_table(p, m);
  table_cache.emplace(key, t);
  return t;
}

bool WittVector::is_zero() const {
  for (const auto& s : slots)
    if (!s.is_zero()) return false;
  return true;
}

WittVector witt_zero(SigPtr sig, int m) {
  if (m < 1) throw ContractError("vector length must be positive");
  WittVector w;
  w.slots.assign(static_cast<size_t>(m), FieldElem::zero(sig));
  w.sig = std::move(sig);
  return w;
}

WittVector witt_single(SigPtr sig, int m, int pos, const FieldElem& value) {
  if (pos < 0 || pos >= m) throw ContractError("slot position out of range");
  WittVector w = witt_zero(std::move(sig), m);
  w.slots[static_cast<size_t>(pos)] = value;
  return w;
}

WittVector witt_add(const WittVector& a, const WittVector& b) {
  require_witt_pair(a, b);
  auto table = witt_table(a.sig->p, a.m());
  std::vector<FieldElem> args;
  args.reserve(2 * a.slots.size());
  args.insert(args.end(), a.slots.begin(), a.slots.end());
  args.insert(args.end(), b.slots.begin(), b.slots.end());
  WittVector r;
  r.sig = a.sig;
  r.slots.reserve(a.slots.size());
  for (int i = 0; i < a.m(); ++i)
    r.slots.push_back(eval_table_poly(table->sum[static_cast<size_t>(i)], args, a.sig));
  return r;
}

WittVector witt_neg(const WittVector& a) {
  if (a.sig->p != 2) {
    // odd characteristic: the negation law collapses to slotwise negation
    WittVector r;
    r.sig = a.sig;
    r.slots.reserve(a.slots.size());
    for (const auto& s : a.slots) r.slots.push_back(s.neg());
    return r;
  }
  auto table = witt_table(a.sig->p, a.m());
  std::vector<FieldElem> args;
  args.reserve(2 * a.slots.size());
  args.insert(args.end(), a.slots.begin(), a.slots.end());
  for (size_t i = 0; i < a.slots.size(); ++i) args.push_back(FieldElem::zero(a.sig));
  WittVector r;
  r.sig = a.sig;
  r.slots.reserve(a.slots.size());
  for (int i = 0; i < a.m(); ++i)
    r.slots.push_back(eval_table_poly(table->neg[static_cast<size_t>(i)], args, a.sig));
  return r;
}

WittVector witt_sub(const WittVector& a, const WittVector& b) {
  return witt_add(a, witt_neg(b));
}

WittVector witt_scalar(int64_t c, const WittVector& a) {
  int64_t order = fp_ipow(a.sig->p, a.m());
  uint64_t k = static_cast<uint64_t>(fp_norm(c, order));
  WittVector acc = witt_zero(a.sig, a.m());
  WittVector base = a;
  while (k) {
    if (k & 1) acc = witt_add(acc, base);
    k >>= 1;
    if (k) base = witt_add(base, base);
  }
  return acc;
}

WittVector witt_frobenius(const WittVector& a) {
  WittVector r;
  r.sig = a.sig;
  r.slots.reserve(a.slots.size());
  for (const auto& s : a.slots) r.slots.push_back(s.frobenius());
  return r;
}

std::optional<WittVector> witt_pth_root(const WittVector& a) {
  WittVector r;
  r.sig = a.sig;
  r.slots.reserve(a.slots.size());
  for (const auto& s : a.slots) {
    auto root = s.pth_root();
    if (!root) return std::nullopt;
    r.slots.push_back(std::move(*root));
  }
  return r;
}

WittVector witt_shift(const WittVector& a, int l) {
  if (l < 0) throw ContractError("shift count must be nonnegative");
  WittVector r = witt_zero(a.sig, a.m() + l);
  for (size_t i = 0; i < a.slots.size(); ++i)
    r.slots[static_cast<size_t>(l) + i] = a.slots[i];
  return r;
}

WittVector witt_truncate(const WittVector& a, int keep) {
  if (keep < 1 || keep > a.m()) throw ContractError("truncation length out of range");
  WittVector r;
  r.sig = a.sig;
  r.slots.assign(a.slots.begin(), a.slots.begin() + keep);
  return r;
}

}  // namespace wittsym
