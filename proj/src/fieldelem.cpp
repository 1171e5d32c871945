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

#include "wittsym/fieldelem.hpp"

#include <cassert>

#include "wittsym/fp.hpp"

namespace wittsym {

namespace {

// num/den already coprime with den monic.
bool canonical_ready(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_one()) return true;
  if (num.is_zero()) return false;  // zero must be 0/1
  return false;
}

}  // namespace

FieldElem::FieldElem(MultiPoly num, MultiPoly den) {
  require_same_sig(num.sig(), den.sig());
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    num_ = std::move(num);
    den_ = MultiPoly::constant(num_.sig(), 1);
    return;
  }
  if (canonical_ready(num, den)) {
    num_ = std::move(num);
    den_ = std::move(den);
    return;
  }
  MultiPoly g = poly_gcd(num, den);
  if (!g.is_one()) {
    num = *divide_exact(num, g);
    den = *divide_exact(den, g);
  }
  int64_t lc = den.leading_coeff();
  if (lc != 1) {
    int64_t inv = fp_inv(lc, den.p());
    num = num.scale(inv);
    den = den.scale(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

FieldElem::FieldElem(MultiPoly num) : num_(std::move(num)) {
  den_ = MultiPoly::constant(num_.sig(), 1);
}

FieldElem FieldElem::make_canonical_unchecked(MultiPoly num, MultiPoly den) {
  FieldElem r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  assert(!r.den_.is_zero());
  assert(r.den_.leading_coeff() == 1);
  assert(!r.num_.is_zero() || r.den_.is_one());
  return r;
}

FieldElem FieldElem::zero(SigPtr sig) { return FieldElem(MultiPoly::zero(std::move(sig))); }
FieldElem FieldElem::one(SigPtr sig) { return constant(std::move(sig), 1); }
FieldElem FieldElem::constant(SigPtr sig, int64_t c) {
  return FieldElem(MultiPoly::constant(std::move(sig), c));
}
FieldElem FieldElem::variable(SigPtr sig, size_t index) {
  return FieldElem(MultiPoly::variable(std::move(sig), index));
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  if (is_poly() && o.is_poly()) return FieldElem(num_ + o.num_);
  return FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  if (is_poly() && o.is_poly()) return FieldElem(num_ - o.num_);
  return FieldElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  if (is_zero() || o.is_zero()) return zero(sig());
  return FieldElem(num_ * o.num_, den_ * o.den_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  if (o.is_zero()) throw DivisionByZero();
  if (is_zero()) return zero(sig());
  return FieldElem(num_ * o.den_, den_ * o.num_);
}

FieldElem FieldElem::neg() const {
  return make_canonical_unchecked(num_.neg(), den_);
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw DivisionByZero();
  return FieldElem(den_, num_);
}

FieldElem FieldElem::pow(int64_t e) const {
  if (e == 0) return one(sig());
  if (e < 0) return inv().pow(-e);
  // num^e / den^e stays coprime and den^e stays monic: no renormalization
  return make_canonical_unchecked(num_.pow(static_cast<uint64_t>(e)),
                                  den_.pow(static_cast<uint64_t>(e)));
}

FieldElem FieldElem::frobenius() const {
  // gcd(n,d) = 1 implies gcd(n^p, d^p) = 1; monic is preserved
  return make_canonical_unchecked(num_.frobenius(), den_.frobenius());
}

std::optional<FieldElem> FieldElem::pth_root() const {
  auto rn = num_.pth_root();
  if (!rn) return std::nullopt;
  auto rd = den_.pth_root();
  if (!rd) return std::nullopt;
  return make_canonical_unchecked(std::move(*rn), std::move(*rd));
}

bool FieldElem::is_pth_power() const {
  // Sound and complete on canonical fractions: a reduced fraction is a p-th
  // power iff numerator and denominator separately are, and a polynomial over
  // F_p is a p-th power iff every exponent is divisible by p.
  return pth_root().has_value();
}

}  // namespace wittsym
