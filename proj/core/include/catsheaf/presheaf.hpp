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

#include <memory>
#include <vector>

#include "catsheaf/ambient.hpp"
#include "catsheaf/functor_category.hpp"

namespace catsheaf {

/// A contravariant Cat-valued functor on an ambient category: a morphism
/// theta: V -> W goes to a functor R(W) -> R(V).
struct CatPresheaf {
  AmbientPtr ambient;
  std::vector<CategoryPtr> on_objects;  // by ambient object
  std::vector<Functor> on_morphisms;    // by ambient morphism
};

using PresheafPtr = std::shared_ptr<const CatPresheaf>;

bool operator==(const CatPresheaf& x, const CatPresheaf& y);

ValidationReport validate_presheaf(const CatPresheaf& r);

/// The presheaf with the same category at every object and identity actions.
CatPresheaf constant_presheaf(AmbientPtr ambient, CategoryPtr value);

/// Every hom-category F(V, U) of an ambient, with the precomposition and
/// postcomposition functors between them. In inclusion-only ambients the
/// homs are built with hom_in_ob(); otherwise with build_functor_category().
class HomTable {
 public:
  HomTable(AmbientPtr ambient, std::size_t cap);

  const AmbientCategory& ambient() const { return *ambient_; }
  const AmbientPtr& ambient_ptr() const { return ambient_; }

  /// F(V, U).
  const FunctorCategory& hom(Obj v, Obj u) const { return homs_.at(v).at(u); }

  /// F_U(theta) for theta: V -> W, the functor F(W, U) -> F(V, U) sending
  /// psi to psi theta and S to S theta.
  Functor precompose(Obj u, Mor theta) const;

  /// The covariant action for theta: V -> W, the functor F(U, V) -> F(U, W)
  /// sending psi to theta psi and S to theta S.
  Functor postcompose(Obj u, Mor theta) const;

  /// F_U as a presheaf; shared so presheaf morphisms can refer to it.
  const PresheafPtr& presheaf(Obj u) const { return presheaves_.at(u); }

 private:
  AmbientPtr ambient_;
  std::vector<std::vector<FunctorCategory>> homs_;  // [v][u]
  std::vector<PresheafPtr> presheaves_;
};

using HomTablePtr = std::shared_ptr<const HomTable>;

/// F_U. Equivalent to `table.presheaf(u)` but returned by value.
CatPresheaf hom_presheaf(const HomTable& table, Obj u);

/// F̄_U(theta) for theta: V -> W.
Functor covariant_hom_action(const HomTable& table, Obj u, Mor theta);

/// A morphism of Cat-valued presheaves: one functor per ambient object.
struct PresheafMorphism {
  PresheafPtr source;
  PresheafPtr target;
  std::vector<Functor> components;  // components[W]: source(W) -> target(W)

  friend bool operator==(const PresheafMorphism& x, const PresheafMorphism& y);
};

/// `P[<component signature>;...]`, one entry per ambient object.
std::string presheaf_morphism_signature(const PresheafMorphism& chi);

ValidationReport validate_presheaf_morphism(const PresheafMorphism& chi);

PresheafMorphism identity_presheaf_morphism(const PresheafPtr& r);

/// Componentwise second . first.
PresheafMorphism compose_presheaf_morphisms(const PresheafMorphism& second,
                                            const PresheafMorphism& first);

/// F̄(theta): F_U => F_V for theta: U -> V, with components F̄_W(theta).
PresheafMorphism yoneda_nat(const HomTable& table, Mor theta);

/// Every presheaf morphism r1 => r2, found by choosing a functor per ambient
/// object and pruning on naturality squares. `cap` bounds the candidates
/// examined, including the per-object functor enumerations.
std::vector<PresheafMorphism> enumerate_presheaf_morphisms(const PresheafPtr& r1,
                                                           const PresheafPtr& r2,
                                                           std::size_t cap);

}  // namespace catsheaf
