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

#include "wittsym/witnesses.hpp"

namespace wittsym {

void validate_as_witness(const ASWitness& wit, size_t n, const SigPtr& sig) {
  require_same_sig(wit.lambda.sig(), sig);
  const int64_t p = sig->p;
  for (const auto& [d, z] : wit.z) {
    if (d.size() != n) throw InvalidWitness("witness index arity mismatch");
    bool all_zero = true;
    for (int e : d) {
      if (e < 0 || e >= p) throw InvalidWitness("witness index entry out of range");
      if (e != 0) all_zero = false;
    }
    if (all_zero) throw InvalidWitness("witness index must be nonzero");
    if (z.is_zero()) throw InvalidWitness("witness value must be nonzero");
    require_same_sig(z.sig(), sig);
  }
}

FieldElem as_residue(const ASWitness& wit, const std::vector<FieldElem>& slots) {
  const SigPtr& sig = wit.lambda.sig();
  const int64_t p = sig->p;
  FieldElem acc = wit.lambda.pow(p) - wit.lambda;
  for (const auto& [d, z] : wit.z) {
    FieldElem prod = z.pow(p);
    for (size_t i = 0; i < slots.size(); ++i)
      if (d[i] != 0) prod = prod * slots[i].pow(d[i]);
    acc = acc + prod;
  }
  return acc;
}

bool check_as_witness(const FieldElem& alpha, const std::vector<FieldElem>& slots,
                      const ASWitness& wit) {
  validate_as_witness(wit, slots.size(), alpha.sig());
  return as_residue(wit, slots) == alpha;
}

ASWitness witness_from_dependence(const FieldElem& alpha,
                                  const std::vector<FieldElem>& betas,
                                  const IndexMap& dependence) {
  ASWitness wit;
  wit.lambda = alpha.neg();
  wit.z = universal_representation(betas, dependence, alpha);
  // lambda^p - lambda = -alpha^p + alpha in every characteristic, and the
  // representation contributes alpha^p, so the identity closes exactly.
  return wit;
}

}  // namespace wittsym
