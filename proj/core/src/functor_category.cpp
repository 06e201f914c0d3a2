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

#include "catsheaf/functor_category.hpp"

#include <map>

namespace catsheaf {

std::optional<Obj> FunctorCategory::find(const Functor& f) const {
  if (!objects.empty() &&
      (!same_category(f.dom, objects.front().dom) || !same_category(f.cod, objects.front().cod))) {
    return std::nullopt;
  }
  return carrier->find_object(functor_signature(f));
}

std::optional<Mor> FunctorCategory::find(const NaturalTransformation& s) const {
  if (!objects.empty() && (!same_category(s.source.dom, objects.front().dom) ||
                           !same_category(s.source.cod, objects.front().cod))) {
    return std::nullopt;
  }
  return carrier->find_morphism(nat_signature(s));
}

FunctorCategory materialize_functor_category(std::vector<Functor> functors,
                                             std::vector<NaturalTransformation> nats) {
  std::map<std::string, Functor> by_name;
  for (auto& f : functors) by_name.emplace(functor_signature(f), std::move(f));
  std::map<std::string, NaturalTransformation> nat_by_name;
  for (auto& s : nats) nat_by_name.emplace(nat_signature(s), std::move(s));

  std::vector<std::string> objects;
  std::map<std::string, std::string> identities;
  for (const auto& [name, f] : by_name) {
    objects.push_back(name);
    identities[name] = nat_signature(identity_nat(f));
  }
  std::vector<MorphismDecl> morphisms;
  for (const auto& [name, s] : nat_by_name) {
    morphisms.push_back({name, functor_signature(s.source), functor_signature(s.target)});
  }
  std::vector<CompositionEntry> composition;
  for (const auto& [second_name, second] : nat_by_name) {
    for (const auto& [first_name, first] : nat_by_name) {
      if (!(first.target == second.source)) continue;
      composition.push_back({second_name, first_name, nat_signature(vcompose_nats(second, first))});
    }
  }

  FunctorCategory fc;
  fc.carrier = share(FiniteCategory::from_tables(std::move(objects), std::move(morphisms),
                                                 identities, composition));
  for (auto& [name, f] : by_name) fc.objects.push_back(std::move(f));
  for (auto& [name, s] : nat_by_name) fc.morphisms.push_back(std::move(s));
  return fc;
}

FunctorCategory build_functor_category(const CategoryPtr& c, const CategoryPtr& d,
                                       std::size_t cap) {
  std::vector<Functor> functors = enumerate_functors(c, d, cap);
  std::vector<NaturalTransformation> nats;
  for (const auto& f : functors) {
    for (const auto& g : functors) {
      for (auto& s : enumerate_nats(f, g, cap)) nats.push_back(std::move(s));
      if (nats.size() > cap) throw CapExceeded("build_functor_category", cap);
    }
  }
  return materialize_functor_category(std::move(functors), std::move(nats));
}

FunctorCategory hom_in_ob(const CategoryPtr& v, const CategoryPtr& u, std::size_t cap) {
  if (!is_subcategory(*v, *u)) {
    return FunctorCategory{share(FiniteCategory{}), {}, {}};
  }
  Functor i = inclusion_functor(v, u);
  std::vector<NaturalTransformation> nats = enumerate_nats(i, i, cap);
  return materialize_functor_category({std::move(i)}, std::move(nats));
}

}  // namespace catsheaf
