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

#include <optional>
#include <string>
#include <utility>

#include "catsheaf/presheaf.hpp"

namespace catsheaf {

/// Outcome of comparing Hom(U, V) with Nat(F_U, F_V) through yoneda_nat.
struct BijectionReport {
  std::string source;  // U
  std::string target;  // V
  std::size_t left_count = 0;   // |Hom_ambient(U, V)|
  std::size_t right_count = 0;  // |Nat(F_U, F_V)|
  bool injective = true;
  /// Two ambient morphisms with the same image, when not injective.
  std::optional<std::pair<std::string, std::string>> collision;
  bool surjective = true;
  /// Signature of a presheaf morphism outside the image, when not surjective.
  std::optional<std::string> unmatched;
  /// Whether the identity functor on U is an object of F(U, U), i.e. whether
  /// evaluation at the identity is available for this pair.
  bool identity_available = true;
  bool verdict = true;

  bool operator==(const BijectionReport&) const = default;
};

/// Maps every theta: U -> V through yoneda_nat and compares the image with
/// an independent enumeration of presheaf morphisms F_U => F_V.
BijectionReport check_yoneda_pair(const HomTable& table, Obj u, Obj v, std::size_t cap);

/// Functoriality of U -> F_U, theta -> yoneda_nat(theta), plus faithfulness
/// and fullness on every ordered pair of ambient objects.
ValidationReport check_embedding(const HomTable& table, std::size_t cap);

/// The functor obtained by applying chi's component at U to the identity
/// functor object of F(U, U); nullopt when that object is not materialized.
std::optional<Functor> evaluate_at_identity(const HomTable& table, const PresheafMorphism& chi,
                                            Obj u);

}  // namespace catsheaf
