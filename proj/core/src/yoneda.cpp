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

#include "catsheaf/yoneda.hpp"

namespace catsheaf {

std::optional<Functor> evaluate_at_identity(const HomTable& table, const PresheafMorphism& chi,
                                            Obj u) {
  const FunctorCategory& endo = table.hom(u, u);
  auto id = endo.find(identity_functor(table.ambient().objects[u]));
  if (!id) return std::nullopt;
  Obj image = chi.components.at(u).object_map.at(*id);
  // The component at U lands in F(U, V) where chi.target is F_V.
  for (Obj v = 0; v < static_cast<Obj>(table.ambient().size()); ++v) {
    if (table.presheaf(v) == chi.target) return table.hom(u, v).decode(image);
  }
  throw Error(ErrorKind::kDomainMismatch, "evaluate_at_identity: target is not a hom presheaf");
}

BijectionReport check_yoneda_pair(const HomTable& table, Obj u, Obj v, std::size_t cap) {
  const FiniteCategory& c = *table.ambient().carrier;
  BijectionReport report;
  report.source = c.object_name(u);
  report.target = c.object_name(v);

  std::vector<Mor> thetas = c.hom(u, v);
  std::vector<PresheafMorphism> images;
  for (Mor theta : thetas) images.push_back(yoneda_nat(table, theta));
  report.left_count = thetas.size();

  for (std::size_t i = 0; i < images.size() && report.injective; ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] == images[j]) {
        report.injective = false;
        report.collision = {c.morphism_name(thetas[i]), c.morphism_name(thetas[j])};
        break;
      }
    }
  }

  std::vector<PresheafMorphism> all =
      enumerate_presheaf_morphisms(table.presheaf(u), table.presheaf(v), cap);
  report.right_count = all.size();
  for (const auto& chi : all) {
    bool hit = false;
    for (const auto& img : images) hit = hit || img == chi;
    if (!hit) {
      report.surjective = false;
      report.unmatched = presheaf_morphism_signature(chi);
      break;
    }
  }

  report.identity_available =
      table.hom(u, u).find(identity_functor(table.ambient().objects[u])).has_value();
  report.verdict =
      report.injective && report.surjective && report.left_count == report.right_count;
  return report;
}

ValidationReport check_embedding(const HomTable& table, std::size_t cap) {
  ValidationReport report;
  const FiniteCategory& c = *table.ambient().carrier;
  const auto nmor = static_cast<Mor>(c.morphism_count());
  const auto nobj = static_cast<Obj>(c.object_count());

  std::vector<PresheafMorphism> image;
  for (Mor theta = 0; theta < nmor; ++theta) {
    image.push_back(yoneda_nat(table, theta));
    ValidationReport nr = validate_presheaf_morphism(image.back());
    if (!nr.valid()) report.merge(nr, "embedding.natural." + c.morphism_name(theta));
  }

  for (Obj u = 0; u < nobj; ++u) {
    if (!(validate_presheaf(*table.presheaf(u)).valid())) {
      report.add("embedding.presheaf", {c.object_name(u)}, "F_U is not a presheaf");
    }
    if (!(image[c.identity(u)] == identity_presheaf_morphism(table.presheaf(u)))) {
      report.add("embedding.functor.identity", {c.object_name(u)},
                 "identity does not go to the identity presheaf morphism");
    }
  }
  for (Mor phi = 0; phi < nmor; ++phi) {
    for (Mor theta = 0; theta < nmor; ++theta) {
      if (c.target(theta) != c.source(phi)) continue;
      if (!(image[c.composite(phi, theta)] ==
            compose_presheaf_morphisms(image[phi], image[theta]))) {
        report.add("embedding.functor.composition", {c.morphism_name(phi), c.morphism_name(theta)},
                   "composite does not go to the composite presheaf morphism");
      }
    }
  }

  for (Obj u = 0; u < nobj; ++u) {
    for (Obj v = 0; v < nobj; ++v) {
      BijectionReport pair = check_yoneda_pair(table, u, v, cap);
      if (!pair.injective) {
        report.add("embedding.faithful", {pair.source, pair.target, pair.collision->first,
                                          pair.collision->second},
                   "two morphisms give the same presheaf morphism");
      }
      if (!pair.surjective || pair.left_count != pair.right_count) {
        report.add("embedding.full", {pair.source, pair.target},
                   "presheaf morphism outside the image: " + pair.unmatched.value_or("(count)"));
      }
    }
  }
  return report;
}

}  // namespace catsheaf
