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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catsheaf/functor.hpp"

namespace catsheaf {

/// A category whose objects are finite categories and whose morphisms are
/// functors between them. The carrier is an ordinary FiniteCategory; the
/// decode tables give the category and functor behind each id.
struct AmbientCategory {
  CategoryPtr carrier;
  std::vector<CategoryPtr> objects;  // by carrier object index
  std::vector<Functor> morphisms;    // by carrier morphism index
  /// Set for O(B)-style ambients whose only morphisms are inclusions.
  bool inclusion_only = false;

  const FiniteCategory& category(Obj v) const { return *objects.at(v); }
  const Functor& functor(Mor theta) const { return morphisms.at(theta); }
  std::size_t size() const { return objects.size(); }

  /// The ambient object whose decoded category equals `cat`, if any.
  std::optional<Obj> find_object(const FiniteCategory& cat) const;
  /// The ambient morphism V -> W decoding to `f`, if any.
  std::optional<Mor> find_morphism(Obj v, Obj w, const Functor& f) const;
};

using AmbientPtr = std::shared_ptr<const AmbientCategory>;

/// Checks that decoding respects sources, targets, identities and
/// composition, and that the carrier is a category.
ValidationReport validate_ambient(const AmbientCategory& ambient);

enum class AmbientMode { kInclusionsOnly, kAllFunctors, kExplicitList };

struct AmbientSpec {
  FiniteCategory base;
  AmbientMode mode = AmbientMode::kInclusionsOnly;
  /// Keeps only the subcategories it accepts; unset keeps all of them.
  std::function<bool(const FiniteCategory&)> object_filter;
  std::size_t cap = kDefaultCap;
};

/// O(B): subcategories of the base with one inclusion V -> W whenever V is a
/// subcategory of W.
AmbientCategory build_ob(const AmbientSpec& spec);

/// Õ(B): subcategories of the base with every functor between them.
AmbientCategory build_otilde(const AmbientSpec& spec);

struct NamedCategory {
  std::string name;
  CategoryPtr category;
};

struct NamedFunctor {
  std::string name;
  std::string source;  // NamedCategory name
  std::string target;
  Functor functor;
};

/// An ambient with exactly the declared data. Identity functors missing
/// from `functors` are added as `id_<name>`. Throws
/// Error(kClosureViolation) naming the first pair whose composite is not
/// declared.
AmbientCategory build_explicit(const std::vector<NamedCategory>& categories,
                               const std::vector<NamedFunctor>& functors);

/// Explicit ambient over the listed categories with every functor between
/// them as a morphism.
AmbientCategory build_explicit_all_functors(const std::vector<NamedCategory>& categories,
                                            std::size_t cap);

}  // namespace catsheaf
