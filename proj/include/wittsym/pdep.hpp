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

#ifndef WITTSYM_PDEP_HPP
#define WITTSYM_PDEP_HPP

#include <map>
#include <vector>

#include "wittsym/fieldelem.hpp"

namespace wittsym {

// Multi-exponent over a list of field elements b_1..b_n; entry i is the
// exponent of b_i. Entries are small nonnegative ints (usually < p or < p^m).
using ExpIndex = std::vector<int>;

struct IndexGrlexLess {
  bool operator()(const ExpIndex& a, const ExpIndex& b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

// Exponent index -> field element, in the canonical (graded lex) index order.
using IndexMap = std::map<ExpIndex, FieldElem, IndexGrlexLess>;

// Coordinates of a over the p-th power subfield with respect to the monomial
// basis {t^r : r in {0..p-1}^k}:  a = sum_r x_r^p t^r, returned as the map
// r -> x_r over the nonzero coordinates. Exact; total over all inputs.
std::map<Monomial, FieldElem, GrlexLess> fp_coordinates(const FieldElem& a);

struct PDepResult {
  bool independent;
  // Empty iff independent. Otherwise a nontrivial relation
  //   sum_d x_d^p * b^d = 0,  d in {0..p-1}^n,
  // with x_d the stored values (b^d = prod_i b_i^{d_i}).
  IndexMap dependence;
};

// Decides whether the p^n products b^d, d in {0..p-1}^n, are linearly
// independent over the subfield of p-th powers; on failure returns the
// deterministic first dependence found in graded lex product order.
// All inputs must be nonzero.
PDepResult p_independence(const std::vector<FieldElem>& elems);

// Given a dependence relation among the products of betas (as produced by
// p_independence) and any gamma, returns y with
//   sum_{d != 0} y_d^p * beta^d = gamma^p,
// supported on nonzero indices only. gamma == 0 yields the empty map.
IndexMap universal_representation(const std::vector<FieldElem>& betas,
                                  const IndexMap& dependence,
                                  const FieldElem& gamma);

}  // namespace wittsym

#endif  // WITTSYM_PDEP_HPP
