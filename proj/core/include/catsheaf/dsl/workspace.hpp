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

// Workspace files: named categories, functors, transformations, ambients,
// sieves and the checks to run on them.
//
//   category Arrow { objects: a, b; morphisms: f: a -> b; }
//   functor I : A -> Arrow { objects: a > a; }
//   nat S : incl(Z1, Z2) => incl(Z1, Z2) { components: s0 > s; }
//   ambient OB = ob(Arrow);
//   sieve R on Arrow in OB { select A { functors: incl(A, Arrow); } }
//   check embedding(OB);
//
// Identities are implicit (`id_<object>`), as are composites with an
// identity and composites forced by a one-element hom-set.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catsheaf/ambient.hpp"
#include "catsheaf/error.hpp"

namespace catsheaf::dsl {

struct SourceSpan {
  std::string file;
  int line = 0;
  int column = 0;
  int end_line = 0;
  int end_column = 0;
};

std::string to_string(const SourceSpan& span);

/// Stable diagnostic codes.
///   E100 lexical          E200 syntax
///   E301 unknown name     E302 duplicate definition  E303 not an ambient object
///   E401 composition not total   E402 category axiom violated
///   E403 functor law violated    E404 naturality violated
///   E405 ambient closure         E406 endpoint mismatch
///   E407 unmapped entry          E408 cap exceeded
struct Diagnostic {
  std::string code;
  std::string law;
  std::string message;
  SourceSpan span;
};

std::string to_string(const Diagnostic& d);

/// `NAME`, `incl(V, U)` or `id(C)`.
struct FunctorExpr {
  enum class Kind { kNamed, kInclusion, kIdentity };
  Kind kind = Kind::kNamed;
  std::vector<std::string> args;

  bool operator==(const FunctorExpr&) const = default;
};

std::string to_string(const FunctorExpr& e);

struct CategoryDef {
  std::string name;
  CategoryPtr category;
  SourceSpan span;
};

struct FunctorDef {
  std::string name;
  std::string dom;
  std::string cod;
  Functor functor;
  SourceSpan span;
};

struct NatDef {
  std::string name;
  FunctorExpr source;
  FunctorExpr target;
  NaturalTransformation nat;
  SourceSpan span;
};

struct AmbientDef {
  enum class Kind { kOb, kOtilde, kExplicit };
  std::string name;
  Kind kind = Kind::kOb;
  std::string base;                     // ob / otilde
  std::optional<std::size_t> cap;       // otilde
  std::vector<std::string> categories;  // explicit
  bool all_functors = false;            // explicit
  std::vector<std::string> functors;    // explicit
  AmbientPtr built;
  SourceSpan span;
};

struct SelectDef {
  std::string object;
  std::vector<FunctorExpr> functors;
  std::vector<std::string> nats;
  SourceSpan span;
};

struct SieveDef {
  std::string name;
  std::string apex;
  std::string ambient;
  std::vector<SelectDef> selects;
  SourceSpan span;
};

struct CheckDef {
  std::string kind;  // yoneda, embedding, sieve, enumerate-sieves, decompose
  std::vector<std::string> args;
  SourceSpan span;
};

struct Workspace {
  std::string file;
  std::vector<CategoryDef> categories;
  std::vector<FunctorDef> functors;
  std::vector<NatDef> nats;
  std::vector<AmbientDef> ambients;
  std::vector<SieveDef> sieves;
  std::vector<CheckDef> checks;

  const CategoryDef* find_category(std::string_view name) const;
  const FunctorDef* find_functor(std::string_view name) const;
  const NatDef* find_nat(std::string_view name) const;
  const AmbientDef* find_ambient(std::string_view name) const;
  const SieveDef* find_sieve(std::string_view name) const;

  /// Resolves a functor expression against the workspace. Throws Error on
  /// unknown names or when an inclusion does not exist.
  Functor resolve(const FunctorExpr& e) const;

  /// The ambient object whose decoded category equals the named workspace
  /// category, or, for explicit ambients, the listed object of that name.
  std::optional<Obj> ambient_object(const AmbientDef& ambient, std::string_view category) const;
};

/// Equality of the parsed data, ignoring spans and file names.
bool same_data(const Workspace& x, const Workspace& y);

struct ParseResult {
  std::optional<Workspace> workspace;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return workspace.has_value() && diagnostics.empty(); }
};

/// Parses and resolves a workspace. Never returns a partial workspace:
/// either `workspace` is set and there are no diagnostics, or the
/// diagnostics explain every rejected item.
ParseResult parse_workspace(std::string_view text, std::string file = "<input>",
                            std::size_t cap = kDefaultCap);

/// Canonical source text. Categories are written with every non-identity
/// composite spelled out, so parsing the output reproduces the same data.
std::string serialize_workspace(const Workspace& ws);

}  // namespace catsheaf::dsl
