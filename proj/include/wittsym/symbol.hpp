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

#ifndef WITTSYM_SYMBOL_HPP
#define WITTSYM_SYMBOL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "wittsym/witt.hpp"

namespace wittsym {

// Generator w (x) s_1 (x) ... (x) s_n: a length-m vector tensored with n
// nonzero field elements.
struct Symbol {
  WittVector w;
  std::vector<FieldElem> slots;

  int m() const { return w.m(); }
  int n() const { return static_cast<int>(slots.size()); }
  const SigPtr& sig() const { return w.sig; }

  bool operator==(const Symbol& o) const { return w == o.w && slots == o.slots; }
  bool operator!=(const Symbol& o) const { return !(*this == o); }
};

// Formal integer combination of symbols, in stored form: coefficients are
// nonzero and term order is meaningful (moves address terms by index).
struct Term {
  int64_t coeff;
  Symbol sym;

  bool operator==(const Term& o) const { return coeff == o.coeff && sym == o.sym; }
  bool operator!=(const Term& o) const { return !(*this == o); }
};

struct SymbolSum {
  std::vector<Term> terms;

  bool operator==(const SymbolSum& o) const { return terms == o.terms; }
  bool operator!=(const SymbolSum& o) const { return !(*this == o); }
};

// Stored-form invariants for a single symbol: positive m and n, nonzero field
// slots, consistent ambient field. Throws ContractError on violation.
void validate_symbol(const Symbol& s);

// Stored-form invariants for a sum: every symbol valid, coefficients nonzero,
// all terms sharing one ambient field and one (m, n) shape.
void validate_symbolsum(const SymbolSum& s);

// Truncation down the coefficient tower: keeps the first l Witt slots,
// 1 <= l <= m, field slots unchanged.
Symbol project_symbol(const Symbol& s, int l);

// The l = 1 case split into its parts: (first Witt slot, field slots).
std::pair<FieldElem, std::vector<FieldElem>> residue(const Symbol& s);

// The vector-length bookkeeping of the exact sequence: lifting prepends a
// zero slot (m -> m+1); unlifting requires slot 0 to be structurally zero and
// drops it (m -> m-1, m >= 2).
Symbol lift_symbol(const Symbol& s);
Symbol unlift_symbol(const Symbol& s);

}  // namespace wittsym

#endif  // WITTSYM_SYMBOL_HPP
