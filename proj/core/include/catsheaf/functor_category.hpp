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
#include <vector>

#include "catsheaf/functor.hpp"

namespace catsheaf {

/// A materialized functor category. Carrier objects are named by
/// functor_signature() and morphisms by nat_signature(), so rebuilding from
/// the same inputs gives identical data.
struct FunctorCategory {
  CategoryPtr carrier;
  std::vector<Functor> objects;                 // by carrier object index
  std::vector<NaturalTransformation> morphisms;  // by carrier morphism index

  std::optional<Obj> find(const Functor& f) const;
  std::optional<Mor> find(const NaturalTransformation& s) const;

  const Functor& decode(Obj a) const { return objects.at(a); }
  const NaturalTransformation& decode_morphism(Mor m) const { return morphisms.at(m); }
};

/// Packs functors and the transformations between them into a category with
/// vertical composition. Every transformation must run between listed
/// functors, and the list must be closed under vertical composition.
FunctorCategory materialize_functor_category(std::vector<Functor> functors,
                                             std::vector<NaturalTransformation> nats);

/// F(C, D): all functors C -> D and all natural transformations between them.
FunctorCategory build_functor_category(const CategoryPtr& c, const CategoryPtr& d,
                                       std::size_t cap);

/// The inclusion-only hom: empty when V is not a subcategory of U, otherwise
/// the one-object category on i: V -> U with morphisms Nat(i, i).
FunctorCategory hom_in_ob(const CategoryPtr& v, const CategoryPtr& u, std::size_t cap);

}  // namespace catsheaf
