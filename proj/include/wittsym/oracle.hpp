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

#ifndef WITTSYM_ORACLE_HPP
#define WITTSYM_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wittsym/decompose.hpp"
#include "wittsym/symbol.hpp"
#include "wittsym/witnesses.hpp"

namespace wittsym {

// Bounds for brute-force witness search. Candidate values for the unknowns
// (lambda and each z_d) are the polynomials over F_p in the ambient variables
// with total degree <= max_degree and at most max_support monomials, zero
// included. Coefficients range over [1, p).
struct SearchBounds {
  int max_degree = 1;
  int max_support = 3;
};

// Result of a bounded search. `space` is the full enumeration space size
// (candidates per unknown, multiplied over all unknowns), computed before any
// evaluation; `tested` counts assignments actually evaluated, which depends
// on where the first hit lies (and, for the parallel scan, on scheduling).
struct SearchOutcome {
  std::optional<ASWitness> witness;
  unsigned long long space = 0;
  unsigned long long tested = 0;
};

inline constexpr unsigned long long kDefaultSearchCap = 1ull << 22;

// Cap override from the WITT_SYMBOL_CAP environment variable, falling back
// to kDefaultSearchCap when unset or unparsable.
unsigned long long search_cap_from_env();

// Exhaustive search for lambda, z with
//   alpha = lambda^p - lambda + sum_d z_d^p * betas^d,
// d over nonzero indices in [0,p)^n (restricted to indices with nonzero last
// entry when require_last_nonzero is set). Candidates are scanned in a fixed
// canonical order: by total degree, then coefficient vectors compared over
// the grlex-descending monomial list; assignments lambda-major, then one
// digit per index in index-grlex order, last digit fastest. The returned
// witness is the canonically first one, so results are reproducible across
// runs and thread counts. Absence of a witness within bounds proves nothing
// beyond the scanned space. Throws SearchCapExceeded when the space exceeds
// `cap`, ContractError on zero slot bases or mismatched fields.
SearchOutcome search_as_witness(const FieldElem& alpha,
                                const std::vector<FieldElem>& betas,
                                const SearchBounds& bounds,
                                bool require_last_nonzero = false,
                                unsigned long long cap = kDefaultSearchCap);

// Single-threaded reference scan with identical contract and results; the
// parallel kernel is checked against it.
SearchOutcome search_as_witness_serial(const FieldElem& alpha,
                                       const std::vector<FieldElem>& betas,
                                       const SearchBounds& bounds,
                                       bool require_last_nonzero = false,
                                       unsigned long long cap = kDefaultSearchCap);

// Witness provider backed by bounded search. Levels in the multi-pair
// decomposition need indices with nonzero last entry, so the search runs
// with that restriction.
class SearchProvider : public WitnessProvider {
 public:
  explicit SearchProvider(SearchBounds bounds,
                          unsigned long long cap = kDefaultSearchCap)
      : bounds_(bounds), cap_(cap) {}
  std::optional<ASWitness> witness_for(
      int level, const FieldElem& alpha,
      const std::vector<FieldElem>& slot_bases) override;

 private:
  SearchBounds bounds_;
  unsigned long long cap_;
};

// Planted instances. Generation is deterministic per (parameters, seed) and
// every planted witness verifies against the instance it ships with.

struct T3Instance {
  Symbol s;
  ASWitness wit;
};

struct T4Instance {
  std::vector<std::pair<WittVector, FieldElem>> pairs;
  T4Witness wit;  // top level only; lower levels are left to search
};

struct T5Instance {
  Symbol s1;
  Symbol s2;
  ChainWitness wit;
};

// Instance for the single-symbol decomposition: a symbol over W_m whose
// residue satisfies the planted witness over its slot entries. Slot entries
// are const-shifted variables when n <= k (checked p-independent), random
// nonzero polynomials otherwise. deg bounds the degree of all drawn
// polynomials.
T3Instance gen_t3(int64_t p, int m, int n, int k, uint64_t seed, int deg);

// Instance for the multi-pair decomposition: r pairs (omega_i, beta_i) with
// beta_1..beta_{r-1} const-shifted distinct variables (p-independent by
// construction; requires r - 1 <= k). Witnesses for every level are planted
// internally, with first Witt slots adjusted for the cross-level carries the
// peeling construction produces, but only the top level is returned; lower
// levels are expected to be recovered by bounded search (degree <= 1,
// support <= 3 suffices for the planted values).
T4Instance gen_t4(int64_t p, int m, int r, int k, uint64_t seed);

// Instance for the chain-style decomposition, p = 2: two symbols and a
// ChainWitness whose line witnesses are planted first, with the slot
// entries of the second symbol then chosen to make every telescoping line's
// residue split as witnessed.
T5Instance gen_t5(int m, int n, int k, uint64_t seed);

}  // namespace wittsym

#endif  // WITTSYM_ORACLE_HPP
