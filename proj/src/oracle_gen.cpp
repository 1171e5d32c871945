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

#include "wittsym/oracle.hpp"

#include <cassert>
#include <set>
#include <string>

#include "wittsym/errors.hpp"
#include "wittsym/fp.hpp"
#include "wittsym/prng.hpp"

namespace wittsym {

namespace {

int64_t imod(int64_t a, int64_t m) { return ((a % m) + m) % m; }

SigPtr gen_signature(int64_t p, int k) {
  std::vector<std::string> vars;
  vars.reserve(k);
  for (int i = 1; i <= k; ++i) vars.push_back("t" + std::to_string(i));
  return make_signature(p, std::move(vars));
}

// Random polynomial with at most max_terms monomials of total degree <= deg,
// coefficients in [1, p). Terms can collide and cancel, so nonzero results
// are enforced by redrawing.
FieldElem rand_poly(const SigPtr& sig, SplitMix64& rng, int deg, int max_terms,
                    bool allow_zero) {
  size_t k = sig->vars.size();
  for (int attempt = 0; attempt < 64; ++attempt) {
    size_t terms = rng.below(max_terms + 1);
    if (terms == 0 && !allow_zero) terms = 1;
    MultiPoly poly = MultiPoly::zero(sig);
    for (size_t t = 0; t < terms; ++t) {
      Monomial exps(k, 0);
      int total;
      do {
        total = 0;
        for (size_t i = 0; i < k; ++i) {
          exps[i] = static_cast<uint32_t>(rng.below(deg + 1));
          total += static_cast<int>(exps[i]);
        }
      } while (total > deg);
      int64_t coeff = 1 + static_cast<int64_t>(rng.below(sig->p - 1));
      poly = poly + MultiPoly::monomial(sig, exps, coeff);
    }
    if (allow_zero || !poly.is_zero()) return FieldElem(std::move(poly));
  }
  // Cancellation 64 times in a row does not happen; keep the contract anyway.
  return FieldElem(MultiPoly::constant(sig, 1));
}

FieldElem rand_nonzero(const SigPtr& sig, SplitMix64& rng, int deg) {
  return rand_poly(sig, rng, deg, 2, false);
}

// Distinct nonzero exponent indices in [0,p)^n, drawn digitwise. `count` is
// clipped to the number available.
std::set<ExpIndex, IndexGrlexLess> draw_indices(SplitMix64& rng, int64_t p,
                                                size_t n, size_t count,
                                                bool last_nonzero) {
  unsigned long long avail = 1;
  for (size_t i = 0; i + 1 < n; ++i) avail *= static_cast<unsigned long long>(p);
  avail = last_nonzero ? avail * (p - 1) : avail * p - 1;
  if (count > avail) count = avail;

  std::set<ExpIndex, IndexGrlexLess> out;
  while (out.size() < count) {
    ExpIndex d(n, 0);
    for (size_t i = 0; i + 1 < n; ++i)
      d[i] = static_cast<int>(rng.below(p));
    d[n - 1] = last_nonzero ? 1 + static_cast<int>(rng.below(p - 1))
                            : static_cast<int>(rng.below(p));
    bool zero = true;
    for (int e : d) zero = zero && e == 0;
    if (!zero) out.insert(std::move(d));
  }
  return out;
}

void require(bool ok, const char* msg) {
  if (!ok) throw ContractError(msg);
}

}  // namespace

T3Instance gen_t3(int64_t p, int m, int n, int k, uint64_t seed, int deg) {
  require(fp_is_prime(p), "gen_t3: p must be prime");
  require(m >= 2, "gen_t3: m must be at least 2");
  require(n >= 1 && k >= 1 && deg >= 0, "gen_t3: bad dimensions");
  SigPtr sig = gen_signature(p, k);
  SplitMix64 rng(seed);

  // Slot entries: const-shifted variables are p-independent (distinct leading
  // monomials), verified anyway; past k variables independence is impossible
  // and random nonzero entries are used.
  std::vector<FieldElem> betas;
  for (int i = 0; i < n; ++i) {
    if (i < k) {
      FieldElem b = FieldElem::variable(sig, i) +
                    FieldElem::constant(sig, static_cast<int64_t>(rng.below(p)));
      betas.push_back(std::move(b));
    } else {
      betas.push_back(rand_nonzero(sig, rng, std::max(deg, 1)));
    }
  }
  if (n <= k && !p_independence(betas).independent) {
    betas.clear();
    for (int i = 0; i < n; ++i) betas.push_back(FieldElem::variable(sig, i));
    assert(p_independence(betas).independent);
  }

  ASWitness wit;
  wit.lambda = rand_poly(sig, rng, deg, 2, true);
  size_t count = rng.below(4);
  for (const ExpIndex& d : draw_indices(rng, p, n, count, false))
    wit.z.emplace(d, rand_nonzero(sig, rng, deg));

  std::vector<FieldElem> slots;
  slots.push_back(as_residue(wit, betas));
  for (int i = 1; i < m; ++i) slots.push_back(rand_poly(sig, rng, deg, 2, true));

  T3Instance inst{Symbol{WittVector{sig, std::move(slots)}, std::move(betas)},
                  std::move(wit)};
  assert(check_as_witness(inst.s.w.slots[0], inst.s.slots, inst.wit));
  return inst;
}

T4Instance gen_t4(int64_t p, int m, int r, int k, uint64_t seed) {
  require(fp_is_prime(p), "gen_t4: p must be prime");
  require(m >= 2, "gen_t4: m must be at least 2");
  require(r >= 1 && k >= 1, "gen_t4: bad dimensions");
  require(r - 1 <= k, "gen_t4: needs a variable per independent slot base");
  SigPtr sig = gen_signature(p, k);
  SplitMix64 rng(seed);
  int64_t pM = fp_ipow(p, m);
  const int deg = 1;  // searched levels must sit inside degree 1, support 3

  std::vector<FieldElem> betas;
  for (int t = 0; t < r; ++t) {
    if (t < k) {
      betas.push_back(
          FieldElem::variable(sig, t) +
          FieldElem::constant(sig, static_cast<int64_t>(rng.below(p))));
    } else {
      betas.push_back(rand_nonzero(sig, rng, 2));
    }
  }
  if (r >= 2) {
    std::vector<FieldElem> lower(betas.begin(), betas.end() - 1);
    assert(p_independence(lower).independent);
  }

  // Plant a witness for every level; the emitted instance carries only the
  // top one, the rest stay reachable by bounded search.
  std::map<int, ASWitness> wits;
  std::map<int, FieldElem> alpha;
  for (int j = r; j >= 1; --j) {
    ASWitness wit;
    wit.lambda = rand_poly(sig, rng, deg, 2, true);
    size_t count = rng.below(3);
    for (const ExpIndex& d : draw_indices(rng, p, j, count, true))
      wit.z.emplace(d, rand_nonzero(sig, rng, deg));
    std::vector<FieldElem> bases(betas.begin(), betas.begin() + j);
    alpha.emplace(j, as_residue(wit, bases));
    wits.emplace(j, std::move(wit));
  }

  // First Witt slots of the lower levels absorb the carries the peeling of
  // the levels above will merge into them: a level-j index d with entry
  // i_t != 0 at position t sends (c mod p) * mu_d there, c the cofactor
  // produced when the slot power beta_t^{i_t} is completed to beta_t^{p^m}.
  std::vector<FieldElem> gain(r + 1, FieldElem::zero(sig));
  for (int j = r; j >= 2; --j) {
    for (const auto& [d, z] : wits.at(j).z) {
      int64_t kk = d.back();
      int64_t kinv = fp_inv(kk, pM);
      FieldElem mu = z.frobenius();
      for (int t = 0; t < j; ++t) mu = mu * betas[t].pow(d[t]);
      for (int t = 1; t < j; ++t) {
        int64_t it = d[t - 1];
        if (it == 0) continue;
        int64_t c = fp_mul(kinv, pM - it, pM);
        int64_t cm = imod(c, p);
        assert(cm != 0);
        gain[t] = gain[t] + FieldElem::constant(sig, cm) * mu;
      }
    }
  }

  std::vector<std::pair<WittVector, FieldElem>> pairs;
  for (int j = 1; j <= r; ++j) {
    std::vector<FieldElem> slots;
    slots.push_back(alpha.at(j) - gain[j]);
    for (int i = 1; i < m; ++i)
      slots.push_back(rand_poly(sig, rng, deg, 2, true));
    pairs.emplace_back(WittVector{sig, std::move(slots)}, betas[j - 1]);
  }

  // Top level sees no carries, so its planted witness must already verify.
  {
    std::vector<FieldElem> bases(betas.begin(), betas.begin() + r);
    assert(check_as_witness(pairs.back().first.slots[0], bases, wits.at(r)));
  }

  T4Witness top;
  top.levels.emplace(r, wits.at(r));
  return T4Instance{std::move(pairs), std::move(top)};
}

T5Instance gen_t5(int m, int n, int k, uint64_t seed) {
  require(m >= 2, "gen_t5: m must be at least 2");
  require(n >= 1 && k >= 1, "gen_t5: bad dimensions");
  const int64_t p = 2;
  SigPtr sig = gen_signature(p, k);
  SplitMix64 rng(seed);
  const int deg = 1;

  auto sq = [](const FieldElem& x) { return x * x; };

  // Free choices. Every line of the telescoped difference will be witnessed
  // by zstar-derived data; the closing line by (lambar, zbar).
  std::vector<FieldElem> u, v;
  for (int i = 0; i + 1 < n; ++i) {
    u.push_back(rand_nonzero(sig, rng, deg));
    v.push_back(rand_nonzero(sig, rng, deg));
  }
  FieldElem w = rand_nonzero(sig, rng, deg);
  FieldElem wp = rand_nonzero(sig, rng, deg);
  FieldElem zstar = rand_nonzero(sig, rng, deg);
  FieldElem lamstar = rand_poly(sig, rng, deg, 2, true);
  FieldElem lambar = rand_poly(sig, rng, deg, 2, true);
  FieldElem zbar = rand_poly(sig, rng, deg, 2, true);

  std::vector<FieldElem> betas, gammas, deltas;
  for (int i = 0; i + 1 < n; ++i) {
    FieldElem b = rand_nonzero(sig, rng, deg);
    gammas.push_back(b * sq(u[i]));
    deltas.push_back(b * sq(v[i]));
    betas.push_back(std::move(b));
  }
  betas.push_back(sq(zstar * w.inv()));
  deltas.push_back(sq(zstar * wp.inv()));

  std::vector<FieldElem> ws, ts;
  ws.push_back(sq(lamstar) + lamstar + sq(zstar));
  ts.push_back(ws[0] + sq(lambar) + lambar + sq(zbar) * deltas.back());
  for (int i = 1; i < m; ++i) {
    ws.push_back(rand_poly(sig, rng, deg, 2, true));
    ts.push_back(rand_poly(sig, rng, deg, 2, true));
  }

  auto unit_index = [&](int i) {
    ExpIndex d(n, 0);
    d[i] = 1;
    return d;
  };
  auto line_wit = [&](const FieldElem& lambda, int pos, const FieldElem& z) {
    ASWitness wit;
    wit.lambda = lambda;
    if (!z.is_zero()) wit.z.emplace(unit_index(pos), z);
    return wit;
  };

  std::vector<ASWitness> lines;
  for (int i = 0; i + 1 < n; ++i)
    lines.push_back(line_wit(lamstar, i, zstar * u[i]));
  lines.push_back(line_wit(lamstar, n - 1, sq(zstar) * wp.inv()));
  lines.push_back(line_wit(lamstar, n - 1, w));
  for (int i = n - 2; i >= 0; --i)
    lines.push_back(line_wit(lamstar, i, zstar * v[i] * u[i].inv()));
  lines.push_back(line_wit(lambar, n - 1, zbar));

  T5Instance inst{Symbol{WittVector{sig, std::move(ws)}, betas},
                  Symbol{WittVector{sig, std::move(ts)}, deltas},
                  ChainWitness{gammas, std::move(lines)}};

  // Planted data must witness every telescoping line.
  std::vector<std::vector<FieldElem>> lslots =
      telescope_line_slots(betas, gammas, deltas);
  assert(lslots.size() == inst.wit.lines.size());
  const FieldElem& w0 = inst.s1.w.slots[0];
  FieldElem dw0 = w0 - inst.s2.w.slots[0];
  for (size_t l = 0; l < lslots.size(); ++l) {
    const FieldElem& res = l + 1 < lslots.size() ? w0 : dw0;
    bool ok = check_as_witness(res, lslots[l], inst.wit.lines[l]);
    assert(ok);
    (void)ok;
  }
  return inst;
}

}  // namespace wittsym
