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

#ifndef WITTSYM_SIGNATURE_HPP
#define WITTSYM_SIGNATURE_HPP

#include <memory>
#include <string>
#include <vector>

#include "wittsym/errors.hpp"
#include "wittsym/fp.hpp"

namespace wittsym {

// Ambient rational function field F_p(t_1..t_k): the characteristic and the
// ordered variable names. Shared immutably by every element living in it.
struct Signature {
  int64_t p;
  std::vector<std::string> vars;

  size_t nvars() const { return vars.size(); }

  bool operator==(const Signature& o) const { return p == o.p && vars == o.vars; }
};

using SigPtr = std::shared_ptr<const Signature>;

inline SigPtr make_signature(int64_t p, std::vector<std::string> vars) {
  if (!fp_is_prime(p)) throw ContractError("characteristic must be prime");
  for (size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty()) throw ContractError("empty variable name");
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw ContractError("duplicate variable name: " + vars[i]);
  }
  return std::make_shared<const Signature>(Signature{p, std::move(vars)});
}

// Same field: pointer equality or structural equality (signatures from
// different sources, e.g. parsed files, must interoperate).
inline bool same_sig(const SigPtr& a, const SigPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_sig(const SigPtr& a, const SigPtr& b) {
  if (!same_sig(a, b)) throw ContractError("elements live in different ambient fields");
}

}  // namespace wittsym

#endif  // WITTSYM_SIGNATURE_HPP
