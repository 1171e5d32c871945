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

#ifndef WITTSYM_FP_HPP
#define WITTSYM_FP_HPP

#include <cassert>
#include <cstdint>

namespace wittsym {

// Arithmetic on residues mod a small modulus q (a prime p, or p^m for
// coefficient bookkeeping). Values are kept in [0, q).

inline int64_t fp_norm(int64_t a, int64_t q) {
  assert(q > 0);
  int64_t r = a % q;
  return r < 0 ? r + q : r;
}

inline int64_t fp_add(int64_t a, int64_t b, int64_t q) { return fp_norm(a + b, q); }
inline int64_t fp_sub(int64_t a, int64_t b, int64_t q) { return fp_norm(a - b, q); }
inline int64_t fp_neg(int64_t a, int64_t q) { return fp_norm(-a, q); }
inline int64_t fp_mul(int64_t a, int64_t b, int64_t q) {
  return fp_norm(fp_norm(a, q) * fp_norm(b, q), q);
}

inline int64_t fp_pow(int64_t a, uint64_t e, int64_t q) {
  int64_t base = fp_norm(a, q), r = 1 % q;
  while (e) {
    if (e & 1) r = fp_mul(r, base, q);
    base = fp_mul(base, base, q);
    e >>= 1;
  }
  return r;
}

// Inverse of a mod q; requires gcd(a, q) == 1.
inline int64_t fp_inv(int64_t a, int64_t q) {
  int64_t t = 0, newt = 1, r = q, newr = fp_norm(a, q);
  while (newr != 0) {
    int64_t quo = r / newr;
    int64_t tmp = t - quo * newt;
    t = newt;
    newt = tmp;
    tmp = r - quo * newr;
    r = newr;
    newr = tmp;
  }
  assert(r == 1 && "fp_inv: argument not invertible");
  return fp_norm(t, q);
}

inline bool fp_is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// p^e as int64; e small enough that this cannot overflow for supported p, m.
inline int64_t fp_ipow(int64_t p, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    assert(r <= (int64_t{1} << 55) / p);
    r *= p;
  }
  return r;
}

}  // namespace wittsym

#endif  // WITTSYM_FP_HPP
