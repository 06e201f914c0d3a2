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
#include <string>
#include <vector>

#include "catsheaf/category.hpp"

namespace catsheaf {

/// A functor between finite categories, stored as index maps. The maps are
/// not required to satisfy the functor laws; validate_functor() checks them.
struct Functor {
  CategoryPtr dom;
  CategoryPtr cod;
  std::vector<Obj> object_map;    // dom object -> cod object
  std::vector<Mor> morphism_map;  // dom morphism -> cod morphism

  Obj operator()(Obj a) const { return object_map.at(a); }
  Mor on_morphism(Mor f) const { return morphism_map.at(f); }

  friend bool operator==(const Functor& x, const Functor& y);
};

/// Extensional equality of categories, with a pointer fast path.
bool same_category(const CategoryPtr& x, const CategoryPtr& y);

/// Builds a functor from name pairs. Identity images are derived from the
/// object map when omitted. Throws on unknown names or unmapped entries.
Functor make_functor(CategoryPtr dom, CategoryPtr cod,
                     const std::vector<std::pair<std::string, std::string>>& objects,
                     const std::vector<std::pair<std::string, std::string>>& morphisms);

Functor identity_functor(CategoryPtr cat);

/// Inclusion of `sub` into `sup`, matching objects and morphisms by name.
/// Throws kInvalidInput when `sub` is not a subcategory of `sup`.
Functor inclusion_functor(CategoryPtr sub, CategoryPtr sup);

ValidationReport validate_functor(const Functor& f);

/// psi after theta. Throws kDomainMismatch unless theta.cod == psi.dom.
Functor compose_functors(const Functor& psi, const Functor& theta);

/// Canonical name `F[a>x,b>y|f>g]`; identity morphisms are omitted since
/// the object map determines them.
std::string functor_signature(const Functor& f);

struct NaturalTransformation {
  Functor source;
  Functor target;
  std::vector<Mor> components;  // dom object -> cod morphism

  bool operator==(const NaturalTransformation&) const = default;
};

/// Canonical name `N[<source>;<target>;a>m,b>n]`.
std::string nat_signature(const NaturalTransformation& s);

NaturalTransformation identity_nat(const Functor& f);

/// Throws kDomainMismatch when the functors are not parallel.
ValidationReport validate_nat(const NaturalTransformation& s);

/// Componentwise `second(a) . first(a)`. Requires first.target == second.source.
NaturalTransformation vcompose_nats(const NaturalTransformation& second,
                                    const NaturalTransformation& first);

/// S theta : psi1 theta => psi2 theta, with components S(theta(a)).
NaturalTransformation whisker_right(const NaturalTransformation& s, const Functor& theta);

/// theta S : theta psi1 => theta psi2, with components theta(S(a)).
NaturalTransformation whisker_left(const Functor& theta, const NaturalTransformation& s);

/// All functors C -> D in (object map, morphism map) order. Object maps are
/// searched first; non-identity morphisms are then assigned over a greedy
/// generating set and the remaining images are forced by composition.
/// `cap` bounds the number of candidate assignments examined.
std::vector<Functor> enumerate_functors(const CategoryPtr& c, const CategoryPtr& d,
                                        std::size_t cap);

/// All natural transformations theta1 => theta2 in lexicographic component
/// order. `cap` bounds the search nodes visited.
std::vector<NaturalTransformation> enumerate_nats(const Functor& theta1, const Functor& theta2,
                                                  std::size_t cap);

/// Nat(i, i) under vertical composition. `table[x][y]` is the index of
/// elements[x] . elements[y]; `unit` indexes the identity transformation.
struct NatMonoid {
  std::vector<NaturalTransformation> elements;
  std::vector<std::vector<std::size_t>> table;
  std::size_t unit = 0;
};

NatMonoid endo_nat_monoid(const Functor& i, std::size_t cap = kDefaultCap);

}  // namespace catsheaf
