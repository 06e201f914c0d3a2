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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catsheaf/presheaf.hpp"

namespace catsheaf {

/// A Cat-valued sieve on U: for every ambient object V a selection of
/// objects and morphisms of F(V, U). Whether the selection is actually a
/// subfunctor of F_U is decided by validate_sieve().
struct Sieve {
  HomTablePtr table;
  Obj apex = 0;
  std::vector<SubcategoryIndex> selection;  // by ambient object, into F(V, U)

  /// The selection at V as a category.
  FiniteCategory selected(Obj v) const;

  friend bool operator==(const Sieve& x, const Sieve& y) {
    return x.table == y.table && x.apex == y.apex && x.selection == y.selection;
  }
};

/// `V{...}` entries for every V with a non-empty selection.
std::string sieve_signature(const Sieve& s);

Sieve empty_sieve(HomTablePtr table, Obj u);
Sieve maximal_sieve(HomTablePtr table, Obj u);

/// Checks that each selection is a subcategory of F(V, U) and that every
/// F_U(theta) maps the selection at the target of theta into the selection
/// at its source: objects (condition 1) and morphisms (condition 2).
ValidationReport validate_sieve(const Sieve& s);

struct SieveGenerators {
  std::vector<std::pair<Obj, Functor>> functors;               // psi in F(V, U)
  std::vector<std::pair<Obj, NaturalTransformation>> nats;     // S in F(V, U)
};

/// The least sieve containing the generators. Throws Error(kInvalidInput)
/// for a generator that is not materialized in its F(V, U).
Sieve generate_sieve(HomTablePtr table, Obj u, const SieveGenerators& gens);

/// Every sieve on U, in backtracking order over ambient objects.
std::vector<Sieve> enumerate_sieves(HomTablePtr table, Obj u, std::size_t cap);

/// Pointwise intersection.
Sieve intersect(const Sieve& x, const Sieve& y);

/// A sieve in the ordinary sense: arrows into `apex` closed under
/// precomposition.
struct ClassicalSieve {
  CategoryPtr base;
  Obj apex = 0;
  std::vector<Mor> arrows;  // sorted

  bool operator==(const ClassicalSieve&) const = default;
};

bool is_classical_sieve(const ClassicalSieve& s);

/// Reads a sieve over an ambient of trivially discrete categories as a
/// classical sieve on the ambient carrier. Throws kNotTriviallyDiscrete
/// otherwise.
ClassicalSieve classical_bridge(const Sieve& s);

/// Sieve data over O(B): a downward-closed family of subcategories of U and
/// a submonoid of Nat(i_V, i_V) for each member, given as morphism indices
/// of the one-object category F(V, U).
struct ObSieveData {
  std::vector<Obj> family;                  // sorted
  std::map<Obj, std::vector<Mor>> monoids;  // sorted per member

  bool operator==(const ObSieveData&) const = default;
};

/// Throws Error(kClosureViolation) for a family that is not downward closed
/// or a choice that is not a submonoid, and Error(kCompatibilityViolation)
/// naming (V', V, element) when restricting a chosen transformation of V to
/// V' leaves the choice at V'.
Sieve sieve_from_ob_data(HomTablePtr table, Obj u, const ObSieveData& data);

/// Inverse of sieve_from_ob_data() on valid sieves over O(B). Throws
/// Error(kDecompositionFailure) if the extracted data breaks an invariant.
ObSieveData decompose_ob_sieve(const Sieve& s);

/// Compares the two readings of the compatibility condition for every pair
/// V' ⊆ V in the family: the one forced by the subfunctor condition,
/// restrict(M_V) ⊆ M_V', and the reverse inclusion M_V' ⊆ restrict(M_V).
struct CompatibilityReport {
  bool restriction_closed = true;  // restrict(M_V) ⊆ M_V'
  bool reverse_inclusion = true;   // M_V' ⊆ restrict(M_V)
  std::vector<std::string> restriction_failures;
  std::vector<std::string> reverse_failures;
};

CompatibilityReport compare_compatibility_directions(const HomTable& table, Obj u,
                                                     const ObSieveData& data);

}  // namespace catsheaf
