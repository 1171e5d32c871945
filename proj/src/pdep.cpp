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

#include "wittsym/pdep.hpp"

#include <algorithm>
#include <cassert>

#include "wittsym/fp.hpp"

namespace wittsym {

std::map<Monomial, FieldElem, GrlexLess> fp_coordinates(const FieldElem& a) {
  const SigPtr& sig = a.sig();
  const int64_t p = a.p();
  const size_t k = sig->nvars();

  // a = N / den^p with N = num * den^(p-1); split N by exponent residues:
  // each residue class r contributes t^r times an exact p-th power.
  MultiPoly n = a.num() * a.den().pow(static_cast<uint64_t>(p - 1));
  std::map<Monomial, MultiPoly, GrlexLess> roots;
  for (const auto& [m, c] : n.terms()) {
    Monomial r(k), s(k);
    for (size_t i = 0; i < k; ++i) {
      r[i] = m[i] % static_cast<uint32_t>(p);
      s[i] = m[i] / static_cast<uint32_t>(p);
    }
    auto [it, inserted] = roots.try_emplace(r, MultiPoly(sig));
    // c^(1/p) = c on prime-field coefficients
    it->second.add_term(s, c);
  }

  std::map<Monomial, FieldElem, GrlexLess> out;
  for (auto& [r, root] : roots) {
    if (root.is_zero()) continue;
    out.emplace(r, FieldElem(std::move(root), a.den()));
  }
  return out;
}

namespace {

using Row = std::map<Monomial, FieldElem, GrlexLess>;

void row_axpy(Row& dst, const FieldElem& factor, const Row& src) {
  for (const auto& [col, val] : src) {
    auto it = dst.find(col);
    if (it == dst.end()) {
      FieldElem v = factor * val;
      if (!v.is_zero()) dst.emplace(col, std::move(v));
    } else {
      it->second = it->second + factor * val;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

std::vector<ExpIndex> all_indices(int64_t p, size_t n) {
  std::vector<ExpIndex> out;
  ExpIndex d(n, 0);
  for (;;) {
    out.push_back(d);
    size_t i = 0;
    while (i < n && d[i] == p - 1) d[i++] = 0;
    if (i == n) break;
    ++d[i];
  }
  std::sort(out.begin(), out.end(), IndexGrlexLess{});
  return out;
}

FieldElem product_power(const std::vector<FieldElem>& elems, const ExpIndex& d) {
  FieldElem r = FieldElem::one(elems.at(0).sig());
  for (size_t i = 0; i < elems.size(); ++i)
    if (d[i] != 0) r = r * elems[i].pow(d[i]);
  return r;
}

}  // namespace

PDepResult p_independence(const std::vector<FieldElem>& elems) {
  if (elems.empty()) throw ContractError("p_independence: empty element list");
  const SigPtr& sig = elems[0].sig();
  const int64_t p = elems[0].p();
  for (const auto& e : elems) {
    require_same_sig(sig, e.sig());
    if (e.is_zero()) throw ContractError("p_independence: zero element");
  }

  // Row per product b^d; a vanishing row during incremental elimination is
  // an F-linear relation among the rows, equivalently (taking p-th powers
  // coordinatewise) a relation sum x_d^p b^d = 0.
  struct Pivot {
    Monomial col;
    Row row;
    IndexMap combo;  // row as combination of original product rows
  };
  std::vector<Pivot> pivots;

  for (const ExpIndex& d : all_indices(p, elems.size())) {
    FieldElem prod = product_power(elems, d);
    Row row = fp_coordinates(prod);
    IndexMap combo;
    combo.emplace(d, FieldElem::one(sig));
    for (;;) {
      if (row.empty()) {
        // dependence: combo gives sum x_d^p b^d = 0
        PDepResult res;
        res.independent = false;
        for (auto& [idx, val] : combo)
          if (!val.is_zero()) res.dependence.emplace(idx, val);
#ifndef NDEBUG
        FieldElem check = FieldElem::zero(sig);
        for (const auto& [idx, val] : res.dependence)
          check = check + val.pow(p) * product_power(elems, idx);
        assert(check.is_zero());
#endif
        return res;
      }
      const Monomial& lead = row.begin()->first;
      const Pivot* hit = nullptr;
      for (const auto& pv : pivots)
        if (pv.col == lead) {
          hit = &pv;
          break;
        }
      if (!hit) break;
      FieldElem factor = (row.begin()->second / hit->row.begin()->second).neg();
      row_axpy(row, factor, hit->row);
      for (const auto& [idx, val] : hit->combo) {
        auto it = combo.find(idx);
        if (it == combo.end())
          combo.emplace(idx, factor * val);
        else
          it->second = it->second + factor * val;
      }
      assert(row.find(lead) == row.end());
    }
    pivots.push_back(Pivot{row.begin()->first, std::move(row), std::move(combo)});
  }
  return PDepResult{true, {}};
}

IndexMap universal_representation(const std::vector<FieldElem>& betas,
                                  const IndexMap& dependence,
                                  const FieldElem& gamma) {
  if (dependence.empty()) throw ContractError("universal_representation: empty dependence");
  const SigPtr& sig = betas.at(0).sig();
  const int64_t p = betas[0].p();
  const size_t n = betas.size();
  for (const auto& [d, x] : dependence) {
    if (d.size() != n) throw ContractError("universal_representation: index arity mismatch");
    if (x.is_zero()) throw ContractError("universal_representation: zero dependence entry");
  }

  IndexMap out;
  if (gamma.is_zero()) return out;

  // Shift the relation so the constant index carries a nonzero entry: divide
  // by b^{d*} (d* the graded-lex least support index) and fold the negative
  // exponents into the p-th power parts.
  const ExpIndex& dstar = dependence.begin()->first;
  IndexMap shifted;
  for (const auto& [d, x] : dependence) {
    ExpIndex e(n);
    FieldElem adj = x;
    for (size_t i = 0; i < n; ++i) {
      e[i] = (d[i] - dstar[i] + static_cast<int>(p)) % static_cast<int>(p);
      if (d[i] < dstar[i]) adj = adj * betas[i].inv();
    }
    shifted.emplace(std::move(e), std::move(adj));
  }

  const FieldElem& x0 = shifted.at(ExpIndex(n, 0));
  // From sum_e x'_e^p b^e = 0 with x'_0 != 0:
  //   sum_{e != 0} (-gamma x'_e / x'_0)^p b^e = gamma^p.
  for (const auto& [e, xe] : shifted) {
    bool zero_index = true;
    for (int v : e)
      if (v != 0) zero_index = false;
    if (zero_index) continue;
    FieldElem y = (gamma * xe / x0).neg();
    if (!y.is_zero()) out.emplace(e, std::move(y));
  }

#ifndef NDEBUG
  FieldElem check = FieldElem::zero(sig);
  for (const auto& [e, y] : out) {
    FieldElem prod = FieldElem::one(sig);
    for (size_t i = 0; i < n; ++i)
      if (e[i] != 0) prod = prod * betas[i].pow(e[i]);
    check = check + y.pow(p) * prod;
  }
  assert(check == gamma.pow(p));
#endif
  return out;
}

}  // namespace wittsym
