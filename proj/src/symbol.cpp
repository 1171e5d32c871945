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

#include "wittsym/symbol.hpp"

namespace wittsym {

void validate_symbol(const Symbol& s) {
  if (s.m() < 1) throw ContractError("symbol vector length must be positive");
  if (s.n() < 1) throw ContractError("symbol must have at least one field slot");
  for (const auto& slot : s.w.slots) require_same_sig(s.sig(), slot.sig());
  for (const auto& slot : s.slots) {
    require_same_sig(s.sig(), slot.sig());
    if (slot.is_zero()) throw ContractError("field slot must be nonzero");
  }
}

void validate_symbolsum(const SymbolSum& s) {
  for (size_t i = 0; i < s.terms.size(); ++i) {
    const Term& t = s.terms[i];
    if (t.coeff == 0) throw ContractError("stored coefficient must be nonzero");
    validate_symbol(t.sym);
    if (i > 0) {
      const Term& first = s.terms[0];
      require_same_sig(first.sym.sig(), t.sym.sig());
      if (first.sym.m() != t.sym.m()) throw ContractError("mixed vector lengths in sum");
      if (first.sym.n() != t.sym.n()) throw ContractError("mixed slot counts in sum");
    }
  }
}

Symbol project_symbol(const Symbol& s, int l) {
  if (l < 1 || l > s.m()) throw ContractError("projection length out of range");
  Symbol r = s;
  r.w = witt_truncate(s.w, l);
  return r;
}

std::pair<FieldElem, std::vector<FieldElem>> residue(const Symbol& s) {
  return {s.w.slots.at(0), s.slots};
}

Symbol lift_symbol(const Symbol& s) {
  Symbol r = s;
  r.w = witt_shift(s.w, 1);
  return r;
}

Symbol unlift_symbol(const Symbol& s) {
  if (s.m() < 2) throw ContractError("cannot unlift a length-1 vector");
  if (!s.w.slots[0].is_zero())
    throw ContractError("unlift requires a zero leading slot");
  Symbol r = s;
  r.w.slots.erase(r.w.slots.begin());
  return r;
}

}  // namespace wittsym
