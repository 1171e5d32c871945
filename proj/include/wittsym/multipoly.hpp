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

#ifndef WITTSYM_MULTIPOLY_HPP
#define WITTSYM_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wittsym/signature.hpp"

namespace wittsym {

// Exponent vector, one entry per ambient variable.
using Monomial = std::vector<uint32_t>;

// Graded lexicographic order: compare total degree first, then exponent
// vectors lexicographically. This is the canonical order used everywhere
// (leading terms, rendering, tie-breaking in generators and searches).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    uint64_t da = 0, db = 0;
    for (uint32_t e : a) da += e;
    for (uint32_t e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

// Sparse multivariate polynomial over F_p. Invariant: stored coefficients lie
// in [1, p); the zero polynomial has an empty term map.
class MultiPoly {
public:
  using TermMap = std::map<Monomial, int64_t, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(SigPtr sig) : sig_(std::move(sig)) {}

  static MultiPoly zero(SigPtr sig) { return MultiPoly(std::move(sig)); }
  static MultiPoly constant(SigPtr sig, int64_t c);
  static MultiPoly variable(SigPtr sig, size_t index);
  static MultiPoly monomial(SigPtr sig, Monomial exps, int64_t c);

  const SigPtr& sig() const { return sig_; }
  int64_t p() const { return sig_->p; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term value (0 if absent); meaningful for any polynomial.
  int64_t constant_value() const;
  bool is_one() const { return is_constant() && constant_value() == 1; }

  int64_t total_degree() const;  // -1 for the zero polynomial
  const Monomial& leading_monomial() const;  // grlex-largest; requires nonzero
  int64_t leading_coeff() const;             // requires nonzero

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly neg() const;
  MultiPoly scale(int64_t c) const;  // multiply by the constant c mod p
  MultiPoly pow(uint64_t e) const;

  // x -> x^p: raise every exponent by the factor p (coefficients are fixed
  // points by Fermat). Exact and linear-time in the number of terms.
  MultiPoly frobenius() const;

  // Inverse of frobenius when it exists: all exponents divisible by p.
  std::optional<MultiPoly> pth_root() const;

  // Degree in one variable, and the coefficient of var^e (a polynomial in the
  // remaining variables, represented over the same signature with that
  // variable's exponent zeroed).
  int64_t degree_in(size_t var) const;
  MultiPoly coeff_of(size_t var, uint32_t e) const;

  // Largest variable index that occurs with positive exponent, or nullopt.
  std::optional<size_t> main_variable() const;

  bool operator==(const MultiPoly& o) const {
    return same_sig(sig_, o.sig_) && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Set/add a coefficient (reduced mod p; erases on zero). Building block for
  // the arithmetic routines and parsers.
  void add_term(const Monomial& m, int64_t c);

private:
  SigPtr sig_;
  TermMap terms_;
};

// Quotient if divisor divides dividend exactly, else nullopt. Valid over a
// field: leading-term elimination in grlex order terminates.
std::optional<MultiPoly> divide_exact(const MultiPoly& dividend, const MultiPoly& divisor);

// Monic (leading coefficient 1) greatest common divisor; gcd(0,0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace wittsym

#endif  // WITTSYM_MULTIPOLY_HPP
