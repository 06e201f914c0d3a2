// Copyright 2026 The catsheaf Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace catsheaf {

enum class ErrorKind {
  kUnknownId,
  kNotComposable,
  kDomainMismatch,
  kInvalidInput,
  kDuplicateName,
  kCapExceeded,
  kClosureViolation,
  kCompatibilityViolation,
  kNotTriviallyDiscrete,
  kDecompositionFailure,
};

const char* to_string(ErrorKind kind);

/// Raised for contract violations of the engine's operations. Axiom
/// violations of candidate data are not errors; they go into a
/// ValidationReport instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown when an exhaustive search examines more candidates than allowed.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& where, std::size_t cap)
      : Error(ErrorKind::kCapExceeded,
              where + ": candidate cap " + std::to_string(cap) + " exceeded"),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Counts candidates examined by an enumeration and throws past the cap.
class CandidateBudget {
 public:
  CandidateBudget(std::string where, std::size_t cap)
      : where_(std::move(where)), cap_(cap) {}

  void spend(std::size_t n = 1) {
    used_ += n;
    if (used_ > cap_) throw CapExceeded(where_, cap_);
  }

  std::size_t used() const noexcept { return used_; }

 private:
  std::string where_;
  std::size_t cap_;
  std::size_t used_ = 0;
};

inline constexpr std::size_t kDefaultCap = 100000;

}  // namespace catsheaf
