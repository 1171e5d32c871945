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

#ifndef WITTSYM_ERRORS_HPP
#define WITTSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wittsym {

// Base for all errors raised by the library on bad input. Internal logic
// errors (broken invariants) use std::logic_error instead and indicate bugs.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input at the contract level: wrong p/m/n, zero slot, mismatched
// ambient fields, unsupported parameter combination.
class ContractError : public Error {
public:
  explicit ContractError(const std::string& msg) : Error(msg) {}
};

// Division by a zero field element.
class DivisionByZero : public ContractError {
public:
  DivisionByZero() : ContractError("division by zero field element") {}
};

// A supplied witness fails its defining identity.
class InvalidWitness : public Error {
public:
  explicit InvalidWitness(const std::string& msg) : Error(msg) {}
};

// The slot elements that a construction requires to be p-independent are not;
// carries a rendered dependence witness so callers can show their work.
class DependentSlots : public Error {
public:
  DependentSlots(const std::string& msg, std::string witness)
      : Error(msg), witness_text(std::move(witness)) {}
  std::string witness_text;
};

// No witness provider could produce a witness for some required level.
class ProviderFailure : public Error {
public:
  ProviderFailure(const std::string& msg, int level_, std::string target_)
      : Error(msg), level(level_), target(std::move(target_)) {}
  int level;           // 1-based level that failed
  std::string target;  // rendered element the witness was needed for
};

// The bounded search space exceeds the configured cap.
class SearchCapExceeded : public Error {
public:
  SearchCapExceeded(const std::string& msg, unsigned long long space_,
                    unsigned long long cap_)
      : Error(msg), space(space_), cap(cap_) {}
  unsigned long long space;
  unsigned long long cap;
};

}  // namespace wittsym

#endif  // WITTSYM_ERRORS_HPP
