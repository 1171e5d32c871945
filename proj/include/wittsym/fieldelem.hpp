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

#ifndef WITTSYM_FIELDELEM_HPP
#define WITTSYM_FIELDELEM_HPP

#include <optional>

#include "wittsym/multipoly.hpp"

namespace wittsym {

// Element of F_p(t_1..t_k) as a canonical fraction num/den:
//   gcd(num, den) = 1, den monic in grlex order, zero stored as 0/1.
// Canonical form makes structural equality (operator==) equal to semantic
// equality, which the certificate checker depends on.
class FieldElem {
public:
  FieldElem() = default;
  // Normalizes the given fraction; throws DivisionByZero if den == 0.
  FieldElem(MultiPoly num, MultiPoly den);
  explicit FieldElem(MultiPoly num);

  static FieldElem zero(SigPtr sig);
  static FieldElem one(SigPtr sig);
  static FieldElem constant(SigPtr sig, int64_t c);
  static FieldElem variable(SigPtr sig, size_t index);

  const SigPtr& sig() const { return num_.sig(); }
  int64_t p() const { return num_.p(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem neg() const;
  FieldElem inv() const;  // throws DivisionByZero on zero
  FieldElem pow(int64_t e) const;

  // x -> x^p and its partial inverse. Both preserve canonical form directly
  // (gcd and monicity are stable under the exponent-scaling Frobenius).
  FieldElem frobenius() const;
  std::optional<FieldElem> pth_root() const;
  bool is_pth_power() const;

  bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
  MultiPoly num_;
  MultiPoly den_;

  static FieldElem make_canonical_unchecked(MultiPoly num, MultiPoly den);
};

}  // namespace wittsym

#endif  // WITTSYM_FIELDELEM_HPP
