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

#ifndef WITTSYM_MOVES_HPP
#define WITTSYM_MOVES_HPP

#include <string>

#include "wittsym/symbol.hpp"

namespace wittsym {

// Elementary certified rewrite moves. Each is sound for the defining
// relations of the symbol groups, so any chain of moves preserves the class
// of the sum. Term and slot indices are 0-based positions in stored form.
//
//   witt_merge i j   terms i, j with equal coefficient and field slots:
//                    vectors add into term i, term j is erased
//   witt_split i w'  term i (c, w): becomes (c, w - w') at i and (c, w')
//                    inserted at i+1
//   coeff_merge i j  terms i, j with identical symbols: coefficients add
//                    into term i (sum must be nonzero), term j is erased
//   negate i         (c, w (x) s) -> (-c, (-w) (x) s)
//   slot_split i k a term i with field slot k holding s: slot k becomes a
//                    at i, and a copy with slot k holding s/a is inserted
//                    at i+1 (a nonzero)
//   slot_merge i j k terms i, j equal except field slot k: slot k of term i
//                    becomes the product of the two, term j is erased
//   repeat_kill i    term i has two structurally equal field slots: erased
//   frob_kill i      every vector slot of term i is a p-th power: the vector
//                    is replaced by its slotwise p-th root
//   slot_kill i      the vector of term i has exactly one nonzero slot whose
//                    value equals some field slot of the term: erased
//   scalar_fold i    (c, w (x) s) -> (1, (c*w) (x) s), c taken mod p^m
//   zero_kill i      the vector of term i is structurally zero: erased
enum class MoveKind {
  WittMerge,
  WittSplit,
  CoeffMerge,
  Negate,
  SlotSplit,
  SlotMerge,
  RepeatKill,
  FrobKill,
  SlotKill,
  ScalarFold,
  ZeroKill,
};

struct Move {
  MoveKind kind{};
  size_t term = 0;
  size_t term2 = 0;       // merges: the erased term
  size_t slot = 0;        // slot_split / slot_merge: field slot index
  WittVector wsplit;      // witt_split payload
  FieldElem factor;       // slot_split payload
};

const char* move_name(MoveKind k);

// Applies one move, validating its precondition; throws ContractError with a
// human-readable reason if the move does not apply.
SymbolSum apply_move(const SymbolSum& s, const Move& mv);

}  // namespace wittsym

#endif  // WITTSYM_MOVES_HPP
