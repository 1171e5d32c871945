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

#include <algorithm>
#include <atomic>
#include <cassert>
#include <climits>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wittsym/errors.hpp"
#include "wittsym/fp.hpp"

namespace wittsym {

namespace {

constexpr unsigned long long kSatMax =
    std::numeric_limits<unsigned long long>::max();

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSatMax / b) return kSatMax;
  return a * b;
}

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
  if (a > kSatMax - b) return kSatMax;
  return a + b;
}

// Exponent vectors of ambient monomials with total degree <= max_degree,
// sorted grlex-descending. Candidate coefficient vectors are aligned to this
// list, so its order fixes the candidate order.
std::vector<Monomial> monomial_list(const SigPtr& sig, int max_degree) {
  size_t k = sig->vars.size();
  std::vector<Monomial> out;
  Monomial cur(k, 0);
  // Odometer over exponents in [0, max_degree], over-degree states skipped.
  while (true) {
    int total = 0;
    for (uint32_t e : cur) total += static_cast<int>(e);
    if (total <= max_degree) out.push_back(cur);
    size_t pos = k;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (cur[pos] < static_cast<uint32_t>(max_degree)) {
        ++cur[pos];
        for (size_t q = pos + 1; q < k; ++q) cur[q] = 0;
        done = false;
        break;
      }
      cur[pos] = 0;
    }
    if (done) break;
  }
  GrlexLess less;
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return less(b, a); });
  return out;
}

// Number of candidates: subsets of at most max_support monomials, each with
// a coefficient in [1, p). Saturating.
unsigned long long candidate_count(unsigned long long nmono, int max_support,
                                   int64_t p) {
  unsigned long long total = 0;
  unsigned long long binom = 1;  // C(nmono, j)
  unsigned long long pw = 1;     // (p-1)^j
  int jmax = std::min<unsigned long long>(
      static_cast<unsigned long long>(std::max(max_support, 0)), nmono);
  for (int j = 0; j <= jmax; ++j) {
    total = sat_add(total, sat_mul(binom, pw));
    if (total == kSatMax || binom == kSatMax) return kSatMax;
    unsigned __int128 next =
        static_cast<unsigned __int128>(binom) * (nmono - j);
    next /= static_cast<unsigned long long>(j + 1);
    binom = next > kSatMax ? kSatMax : static_cast<unsigned long long>(next);
    pw = sat_mul(pw, static_cast<unsigned long long>(p - 1));
  }
  return total;
}

struct Candidate {
  std::vector<int64_t> vec;  // coefficients over the grlex-descending list
  int deg = -1;              // -1 for the zero polynomial
  FieldElem val;
};

// All candidate polynomials in canonical order: by total degree, then by
// coefficient vector compared entrywise over the grlex-descending monomial
// list. The zero polynomial is first.
std::vector<Candidate> materialize_candidates(const SigPtr& sig,
                                              const std::vector<Monomial>& monos,
                                              int max_support) {
  int64_t p = sig->p;
  std::vector<Candidate> out;
  std::vector<int64_t> vec(monos.size(), 0);
  std::vector<size_t> chosen;

  // DFS over which monomials carry a nonzero coefficient.
  auto emit = [&]() {
    Candidate c;
    c.vec = vec;
    MultiPoly poly = MultiPoly::zero(sig);
    for (size_t i : chosen) {
      poly = poly + MultiPoly::monomial(sig, monos[i], vec[i]);
      int d = 0;
      for (uint32_t e : monos[i]) d += static_cast<int>(e);
      c.deg = std::max(c.deg, d);
    }
    c.val = FieldElem(std::move(poly));
    out.push_back(std::move(c));
  };
  auto walk = [&](auto&& self, size_t start) -> void {
    emit();
    if (chosen.size() == static_cast<size_t>(max_support)) return;
    for (size_t i = start; i < monos.size(); ++i) {
      chosen.push_back(i);
      for (int64_t coeff = 1; coeff < p; ++coeff) {
        vec[i] = coeff;
        self(self, i + 1);
      }
      vec[i] = 0;
      chosen.pop_back();
    }
  };
  if (max_support > 0) {
    walk(walk, 0);
  } else {
    emit();
  }

  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.vec < b.vec;
  });
  return out;
}

// Nonzero exponent indices in [0,p)^n, index-grlex sorted; optionally only
// those whose last entry is nonzero.
std::vector<ExpIndex> index_list(int64_t p, size_t n, bool last_nonzero) {
  std::vector<ExpIndex> out;
  if (n == 0) return out;
  ExpIndex cur(n, 0);
  while (true) {
    bool zero = true;
    for (int e : cur) zero = zero && e == 0;
    if (!zero && (!last_nonzero || cur.back() != 0)) out.push_back(cur);
    size_t pos = n;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (cur[pos] + 1 < p) {
        ++cur[pos];
        for (size_t q = pos + 1; q < n; ++q) cur[q] = 0;
        done = false;
        break;
      }
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end(), IndexGrlexLess{});
  return out;
}

struct SearchPlan {
  std::vector<Candidate> cands;
  std::vector<FieldElem> frob;       // cands[i].val^p
  std::vector<ExpIndex> idx;         // unknown z indices, index-grlex order
  std::vector<FieldElem> beta_pows;  // betas^d per index
  unsigned long long space = 0;
};

SearchPlan plan_search(const FieldElem& alpha,
                       const std::vector<FieldElem>& betas,
                       const SearchBounds& bounds, bool require_last_nonzero,
                       unsigned long long cap) {
  const SigPtr& sig = alpha.sig();
  for (const FieldElem& b : betas) {
    if (!same_sig(sig, b.sig()))
      throw ContractError("search: mixed ambient fields");
    if (b.is_zero()) throw ContractError("search: zero slot base");
  }
  if (bounds.max_degree < 0 || bounds.max_support < 0)
    throw ContractError("search: negative bounds");

  std::vector<Monomial> monos = monomial_list(sig, bounds.max_degree);
  unsigned long long csize =
      candidate_count(monos.size(), bounds.max_support, sig->p);
  std::vector<ExpIndex> idx =
      index_list(sig->p, betas.size(), require_last_nonzero);

  unsigned long long space = csize;
  for (size_t i = 0; i < idx.size(); ++i) space = sat_mul(space, csize);
  if (space > cap)
    throw SearchCapExceeded("search space " + std::to_string(space) +
                                " exceeds cap " + std::to_string(cap),
                            space, cap);

  SearchPlan plan;
  plan.space = space;
  plan.cands = materialize_candidates(sig, monos, bounds.max_support);
  assert(plan.cands.size() == csize);
  plan.frob.reserve(plan.cands.size());
  for (const Candidate& c : plan.cands) plan.frob.push_back(c.val.frobenius());
  plan.beta_pows.reserve(idx.size());
  for (const ExpIndex& d : idx) {
    FieldElem prod = FieldElem::one(sig);
    for (size_t i = 0; i < d.size(); ++i)
      prod = prod * betas[i].pow(d[i]);
    plan.beta_pows.push_back(std::move(prod));
  }
  plan.idx = std::move(idx);
  return plan;
}

// Scans all digit assignments for one fixed lambda, canonical order. Returns
// the first matching witness; adds the number of assignments evaluated to
// `tested`. `abort_check` is polled between blocks so a parallel caller can
// cut scans for lambdas that can no longer win.
std::optional<ASWitness> scan_lambda(const SearchPlan& plan,
                                     const FieldElem& alpha, size_t lam,
                                     unsigned long long& tested,
                                     const std::function<bool()>& abort_check) {
  const SigPtr& sig = alpha.sig();
  size_t nz = plan.idx.size();
  size_t csize = plan.cands.size();
  FieldElem target =
      alpha - (plan.frob[lam] - plan.cands[lam].val);

  std::vector<size_t> digits(nz, 0);
  // partial[j] = sum over the first j digits of frob[digit] * beta_pows[j].
  std::vector<FieldElem> partial(nz + 1, FieldElem::zero(sig));
  size_t dirty = 0;  // partials valid up to this digit position
  unsigned long long since_poll = 0;
  while (true) {
    for (size_t j = dirty; j < nz; ++j) {
      if (digits[j] == 0)
        partial[j + 1] = partial[j];
      else
        partial[j + 1] =
            partial[j] + plan.frob[digits[j]] * plan.beta_pows[j];
    }
    dirty = nz;
    ++tested;
    if (partial[nz] == target) {
      ASWitness wit;
      wit.lambda = plan.cands[lam].val;
      for (size_t j = 0; j < nz; ++j)
        if (digits[j] != 0) wit.z.emplace(plan.idx[j], plan.cands[digits[j]].val);
      return wit;
    }
    // Odometer: last digit fastest.
    size_t pos = nz;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (digits[pos] + 1 < csize) {
        ++digits[pos];
        dirty = pos;
        done = false;
        break;
      }
      digits[pos] = 0;
    }
    if (done) return std::nullopt;
    if (++since_poll >= 1024) {
      since_poll = 0;
      if (abort_check && abort_check()) return std::nullopt;
    }
  }
}

SearchOutcome run_serial(const SearchPlan& plan, const FieldElem& alpha) {
  SearchOutcome out;
  out.space = plan.space;
  for (size_t lam = 0; lam < plan.cands.size(); ++lam) {
    auto hit = scan_lambda(plan, alpha, lam, out.tested, nullptr);
    if (hit) {
      out.witness = std::move(hit);
      return out;
    }
  }
  return out;
}

SearchOutcome run_parallel(const SearchPlan& plan, const FieldElem& alpha) {
#ifdef _OPENMP
  size_t csize = plan.cands.size();
  std::atomic<size_t> best{csize};
  std::atomic<unsigned long long> tested{0};
  std::vector<std::optional<ASWitness>> hits(csize);

  // Lambdas partition the space; each scan is sequential inside, so the
  // first hit per lambda is canonical and the smallest hitting lambda gives
  // the same witness the serial scan finds.
  long long total = static_cast<long long>(csize);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long lam = 0; lam < total; ++lam) {
    size_t l = static_cast<size_t>(lam);
    if (l > best.load(std::memory_order_acquire)) continue;
    unsigned long long local = 0;
    auto abort_check = [&]() {
      return best.load(std::memory_order_acquire) < l;
    };
    auto hit = scan_lambda(plan, alpha, l, local, abort_check);
    tested.fetch_add(local, std::memory_order_relaxed);
    if (hit) {
      hits[l] = std::move(hit);
      size_t cur = best.load(std::memory_order_acquire);
      while (l < cur &&
             !best.compare_exchange_weak(cur, l, std::memory_order_acq_rel)) {
      }
    }
  }

  SearchOutcome out;
  out.space = plan.space;
  out.tested = tested.load();
  size_t win = best.load();
  if (win < csize) out.witness = std::move(hits[win]);
  return out;
#else
  return run_serial(plan, alpha);
#endif
}

}  // namespace

unsigned long long search_cap_from_env() {
  const char* raw = std::getenv("WITT_SYMBOL_CAP");
  if (!raw || !*raw) return kDefaultSearchCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return kDefaultSearchCap;
  return v;
}

SearchOutcome search_as_witness_serial(const FieldElem& alpha,
                                       const std::vector<FieldElem>& betas,
                                       const SearchBounds& bounds,
                                       bool require_last_nonzero,
                                       unsigned long long cap) {
  SearchPlan plan =
      plan_search(alpha, betas, bounds, require_last_nonzero, cap);
  return run_serial(plan, alpha);
}

SearchOutcome search_as_witness(const FieldElem& alpha,
                                const std::vector<FieldElem>& betas,
                                const SearchBounds& bounds,
                                bool require_last_nonzero,
                                unsigned long long cap) {
  SearchPlan plan =
      plan_search(alpha, betas, bounds, require_last_nonzero, cap);
#ifdef _OPENMP
  if (omp_get_max_threads() > 1) return run_parallel(plan, alpha);
#endif
  return run_serial(plan, alpha);
}

std::optional<ASWitness> SearchProvider::witness_for(
    int level, const FieldElem& alpha,
    const std::vector<FieldElem>& slot_bases) {
  (void)level;
  SearchOutcome out = search_as_witness(alpha, slot_bases, bounds_,
                                        /*require_last_nonzero=*/true, cap_);
  return out.witness;
}

}  // namespace wittsym
