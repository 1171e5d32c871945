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

#ifndef WITTSYM_WITT_HPP
#define WITTSYM_WITT_HPP

#include <memory>
#include <optional>
#include <vector>

#include "wittsym/fieldelem.hpp"

namespace wittsym {

// Universal addition and negation laws for length-m truncated vectors in
// characteristic p, as polynomials over F_p in variables x0..x{m-1},
// y0..y{m-1}. Generated once per (p, m) from the ghost-component recursion
// over the exact integers and cached.
struct WittTable {
  int64_t p;
  int m;
  SigPtr table_sig;             // 2m variables: x0..x{m-1}, y0..y{m-1}
  std::vector<MultiPoly> sum;   // sum[i] computes slot i of x + y
  std::vector<MultiPoly> neg;   // neg[i] computes slot i of -x (x vars only)
};

std::shared_ptr<const WittTable> witt_table(int64_t p, int m);

// Length-m vector of field elements with the ring-of-Witt-vectors additive
// structure evaluated through the tables. Slots are plain field elements;
// the length m is the truncation level.
struct WittVector {
  SigPtr sig;
  std::vector<FieldElem> slots;

  int m() const { return static_cast<int>(slots.size()); }
  bool is_zero() const;

  bool operator==(const WittVector& o) const {
    return same_sig(sig, o.sig) && slots == o.slots;
  }
  bool operator!=(const WittVector& o) const { return !(*this == o); }
};

WittVector witt_zero(SigPtr sig, int m);
// (a, 0, ..., 0) and friends
WittVector witt_single(SigPtr sig, int m, int pos, const FieldElem& value);

WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_neg(const WittVector& a);
WittVector witt_sub(const WittVector& a, const WittVector& b);
// Integer multiple c * a via double-and-add on c mod p^m.
WittVector witt_scalar(int64_t c, const WittVector& a);

// Frobenius acts slotwise in characteristic p; the root is its partial
// inverse and exists iff every slot is a p-th power.
WittVector witt_frobenius(const WittVector& a);
std::optional<WittVector> witt_pth_root(const WittVector& a);

// Verschiebung power: prepend l zero slots (lands in length m + l), and
// restriction power: keep the first `keep` slots. These are the maps of the
// exact sequence relating the truncation levels.
WittVector witt_shift(const WittVector& a, int l);
WittVector witt_truncate(const WittVector& a, int keep);

}  // namespace wittsym

#endif  // WITTSYM_WITT_HPP
