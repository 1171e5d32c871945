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

#ifndef WITTSYM_CERTIFICATE_HPP
#define WITTSYM_CERTIFICATE_HPP

#include "wittsym/moves.hpp"

namespace wittsym {

// One recorded rewrite: the move and the full sum it claims to produce.
// Recording the intermediate sums makes every certificate machine-checkable
// step by step, and lets a failed check name the exact step.
struct CertStep {
  Move move;
  SymbolSum after;
};

struct Certificate {
  SymbolSum start;
  std::vector<CertStep> steps;
  SymbolSum end;
};

// Records moves as they are applied. The decomposition routines drive all
// rewriting through a builder so that the emitted certificate is exactly the
// computation that produced the output.
class CertBuilder {
public:
  explicit CertBuilder(SymbolSum start) : cur_(start) {
    validate_symbolsum(cur_);
    cert_.start = std::move(start);
  }

  const SymbolSum& current() const { return cur_; }
  const Term& term(size_t i) const { return cur_.terms.at(i); }
  size_t size() const { return cur_.terms.size(); }

  void apply(Move mv) {
    cur_ = apply_move(cur_, mv);
    cert_.steps.push_back(CertStep{std::move(mv), cur_});
  }

  Certificate finish() {
    cert_.end = cur_;
    return cert_;
  }

private:
  Certificate cert_;
  SymbolSum cur_;
};

struct VerifyResult {
  bool valid;
  // Meaningful when invalid: the 0-based index of the offending step, or
  // steps.size() when every step checks but the recorded end sum disagrees.
  size_t failed_step;
  std::string reason;
};

// Replays a certificate with an independent implementation of the move
// semantics (separate from apply_move): each step's precondition is
// rechecked against the running sum and the recorded result is recomputed
// and compared structurally.
VerifyResult verify_certificate(const Certificate& cert);

}  // namespace wittsym

#endif  // WITTSYM_CERTIFICATE_HPP
