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

#ifndef WITTSYM_WITNESSES_HPP
#define WITTSYM_WITNESSES_HPP

#include <map>

#include "wittsym/pdep.hpp"

namespace wittsym {

// Data certifying that a residue alpha splits as
//   alpha = lambda^p - lambda + sum_d z_d^p * b^d
// over given slot elements b_1..b_n, with d ranging over nonzero indices in
// {0..p-1}^n. Stored sparsely: only nonzero z_d appear.
struct ASWitness {
  FieldElem lambda;
  IndexMap z;
};

// Structural validity: index arity n, entries in [0, p), no all-zero index,
// no zero values, consistent ambient field. Throws InvalidWitness.
void validate_as_witness(const ASWitness& wit, size_t n, const SigPtr& sig);

// The right-hand side lambda^p - lambda + sum_d z_d^p * b^d.
FieldElem as_residue(const ASWitness& wit, const std::vector<FieldElem>& slots);

// Whether the witness identity holds for alpha over the given slots.
bool check_as_witness(const FieldElem& alpha, const std::vector<FieldElem>& slots,
                      const ASWitness& wit);

// Splitting data derived from a dependence relation: lambda = -alpha and z
// representing alpha^p over the products of the slots. Requires a dependence
// as produced by p_independence.
ASWitness witness_from_dependence(const FieldElem& alpha,
                                  const std::vector<FieldElem>& betas,
                                  const IndexMap& dependence);

// Per-level witness collection for the multi-pair decomposition; level j
// (1-based, j pairs involved) carries indices of arity j whose last entry is
// nonzero. Missing levels are filled by a provider at decomposition time.
struct T4Witness {
  std::map<int, ASWitness> levels;
};

// Witness bundle for the chain-style decomposition: the intermediate slot
// elements gamma_1..gamma_{n-1} and one splitting witness per chain line, in
// the order the telescoping construction emits lines.
struct ChainWitness {
  std::vector<FieldElem> gammas;
  std::vector<ASWitness> lines;
};

}  // namespace wittsym

#endif  // WITTSYM_WITNESSES_HPP
