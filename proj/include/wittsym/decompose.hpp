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

#ifndef WITTSYM_DECOMPOSE_HPP
#define WITTSYM_DECOMPOSE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wittsym/certificate.hpp"
#include "wittsym/fieldelem.hpp"
#include "wittsym/symbol.hpp"
#include "wittsym/witnesses.hpp"

namespace wittsym {

// Result of a symbol-length decomposition: output symbols one level down
// (Witt length m-1), the certificate deriving input = sum of lifted outputs,
// and the count bound the construction guarantees. Certificates operate at
// length m throughout; outputs are the surviving end terms with their
// structurally-zero first Witt slot dropped.
struct Decomposition {
  std::vector<Symbol> outputs;
  Certificate cert;
  int64_t bound;
};

// Rewrites the first field slot of a symbol to the exact product
// prod_k beta_k^{d_k}, where beta_k are the current slot values and d has
// entries in [0, p^m) with at least one entry coprime to p. The lowest
// coprime entry's slot is swapped into position 0 first when needed; the
// other slots end up holding byproduct powers (gammas). For n >= 2 the Witt
// vector is untouched; for n = 1 it is scaled by the inverse of d_0 mod p^m.
// The certificate derives (1, input) = (1, out).
struct FirstSlotRewrite {
  Symbol out;
  std::vector<FieldElem> gammas;  // out.slots[1..], for convenience
  Certificate cert;
};

FirstSlotRewrite rewrite_first_slot(const Symbol& s, const std::vector<int64_t>& d);

// Splits field slot i into one symbol per listed factor. The factors must
// multiply to the current slot value exactly; a single-factor list yields the
// identity with an empty certificate.
struct SlotExpansion {
  SymbolSum sum;
  Certificate cert;
};

SlotExpansion expand_slot(const Symbol& s, size_t i, const std::vector<FieldElem>& factors);

// Exchanges field slots i and j at the cost of inverting the entry that
// lands in slot j:  w (x) ... a ... b ...  ->  w (x) ... b ... a^{-1} ...
// Valid for any p; i != j. The coefficient and Witt vector are preserved.
struct SlotSwap {
  Symbol out;
  Certificate cert;
};

SlotSwap antisymmetry_swap(const Symbol& s, size_t i, size_t j);

// Splits a class given by one symbol over W_m (m >= 2) into at most p^n
// symbols over W_{m-1}, given a splitting witness for its residue. Output
// count and shapes follow the peeling construction: one head with first Witt
// slot 0, and one z_d-slotted symbol per nonzero witness entry.
Decomposition theorem3(const Symbol& s, const ASWitness& wit);

// Supplies per-level splitting witnesses to theorem4. Implementations may
// look the witness up, search for it, or decline; any witness returned must
// pass check_as_witness for the given residue over the slot bases, which the
// caller rechecks.
class WitnessProvider {
public:
  virtual ~WitnessProvider() = default;
  virtual std::optional<ASWitness> witness_for(int level, const FieldElem& alpha,
                                               const std::vector<FieldElem>& slot_bases) = 0;
};

// Serves witnesses from a fixed per-level table.
class PlantedProvider : public WitnessProvider {
public:
  explicit PlantedProvider(T4Witness wit) : wit_(std::move(wit)) {}
  std::optional<ASWitness> witness_for(int level, const FieldElem& alpha,
                                       const std::vector<FieldElem>& slot_bases) override;

private:
  T4Witness wit_;
};

// Never produces a witness.
class FailProvider : public WitnessProvider {
public:
  std::optional<ASWitness> witness_for(int, const FieldElem&,
                                       const std::vector<FieldElem>&) override {
    return std::nullopt;
  }
};

// Consults providers in order and returns the first witness offered.
class ChainedProvider : public WitnessProvider {
public:
  explicit ChainedProvider(std::vector<WitnessProvider*> providers)
      : providers_(std::move(providers)) {}
  std::optional<ASWitness> witness_for(int level, const FieldElem& alpha,
                                       const std::vector<FieldElem>& slot_bases) override;

private:
  std::vector<WitnessProvider*> providers_;
};

// Decomposes a sum of r degree-two classes  sum_i (1, omega_i (x) beta_i)
// over W_m (m >= 2) into at most p^r + r - 1 symbols over W_{m-1}. Levels
// are peeled from r down to 1; the provider is asked for a witness of each
// level's running residue over slot bases (beta_1..beta_j). Requires
// beta_1..beta_{r-1} p-independent.
//
// Throws DependentSlots on the independence precheck, ProviderFailure when a
// level's witness is missing, InvalidWitness when a supplied witness fails
// its identity.
Decomposition theorem4(const std::vector<std::pair<WittVector, FieldElem>>& pairs,
                       WitnessProvider& provider);

// The telescoping rewrite for p = 2: expresses (1, S1) - (1, S2) as a sum of
// 2n + 1 single-symbol lines, consecutive lines sharing all but one slot.
// Lines 1..2n carry S1's Witt vector; the last line carries the difference.
struct Telescope {
  std::vector<Symbol> lines;
  Certificate cert;
};

Telescope telescope(const Symbol& s1, const Symbol& s2, const std::vector<FieldElem>& gammas);

// The field slots each telescope line ends up with, as a function of the
// slot lists of S1 (betas), S2 (deltas), and the intermediate gammas. Shared
// with instance generation so planted line witnesses stay aligned with the
// lines the telescope actually emits.
std::vector<std::vector<FieldElem>> telescope_line_slots(
    const std::vector<FieldElem>& betas, const std::vector<FieldElem>& gammas,
    const std::vector<FieldElem>& deltas);

// Splits the difference of two symbols over W_m (p = 2, m >= 2) into at most
// (2n+1) * 2^n symbols over W_{m-1}: telescope into 2n + 1 lines, then a
// theorem3 peel per line using the matching line witness.
Decomposition theorem5(const Symbol& s1, const Symbol& s2, const ChainWitness& wit);

}  // namespace wittsym

#endif  // WITTSYM_DECOMPOSE_HPP
