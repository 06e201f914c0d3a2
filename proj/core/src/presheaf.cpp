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

#include "catsheaf/presheaf.hpp"

#include <algorithm>

namespace catsheaf {

bool operator==(const CatPresheaf& x, const CatPresheaf& y) {
  if (x.ambient != y.ambient) return false;
  if (x.on_objects.size() != y.on_objects.size()) return false;
  for (std::size_t i = 0; i < x.on_objects.size(); ++i) {
    if (!same_category(x.on_objects[i], y.on_objects[i])) return false;
  }
  return x.on_morphisms == y.on_morphisms;
}

ValidationReport validate_presheaf(const CatPresheaf& r) {
  ValidationReport report;
  const FiniteCategory& c = *r.ambient->carrier;
  const auto nmor = static_cast<Mor>(c.morphism_count());
  if (r.on_objects.size() != c.object_count() || r.on_morphisms.size() != c.morphism_count()) {
    report.add("presheaf.total", {}, "action does not cover the ambient");
    return report;
  }
  bool typed = true;
  for (Mor theta = 0; theta < nmor; ++theta) {
    const Functor& f = r.on_morphisms[theta];
    const auto& name = c.morphism_name(theta);
    if (!same_category(f.dom, r.on_objects[c.target(theta)]) ||
        !same_category(f.cod, r.on_objects[c.source(theta)])) {
      report.add("presheaf.contravariance", {name},
                 "R(theta) must run R(target) -> R(source)");
      typed = false;
      continue;
    }
    ValidationReport fr = validate_functor(f);
    if (!fr.valid()) {
      report.merge(fr, "presheaf.action." + name);
      typed = false;
    }
  }
  if (!typed) return report;

  for (Obj v = 0; v < static_cast<Obj>(c.object_count()); ++v) {
    if (!(r.on_morphisms[c.identity(v)] == identity_functor(r.on_objects[v]))) {
      report.add("presheaf.identity", {c.object_name(v)}, "R(id) is not the identity functor");
    }
  }
  for (Mor phi = 0; phi < nmor; ++phi) {
    for (Mor theta = 0; theta < nmor; ++theta) {
      if (c.target(theta) != c.source(phi)) continue;
      const Functor& lhs = r.on_morphisms[c.composite(phi, theta)];
      Functor rhs = compose_functors(r.on_morphisms[theta], r.on_morphisms[phi]);
      if (!(lhs == rhs)) {
        report.add("presheaf.composition", {c.morphism_name(phi), c.morphism_name(theta)},
                   "R(phi . theta) != R(theta) . R(phi)");
      }
    }
  }
  return report;
}

CatPresheaf constant_presheaf(AmbientPtr ambient, CategoryPtr value) {
  CatPresheaf r{ambient, {}, {}};
  r.on_objects.assign(ambient->size(), value);
  r.on_morphisms.assign(ambient->carrier->morphism_count(), identity_functor(value));
  return r;
}

HomTable::HomTable(AmbientPtr ambient, std::size_t cap) : ambient_(std::move(ambient)) {
  const auto n = static_cast<Obj>(ambient_->size());
  homs_.resize(n);
  for (Obj v = 0; v < n; ++v) {
    for (Obj u = 0; u < n; ++u) {
      homs_[v].push_back(ambient_->inclusion_only
                             ? hom_in_ob(ambient_->objects[v], ambient_->objects[u], cap)
                             : build_functor_category(ambient_->objects[v],
                                                      ambient_->objects[u], cap));
    }
  }
  for (Obj u = 0; u < n; ++u) {
    CatPresheaf r{ambient_, {}, {}};
    for (Obj v = 0; v < n; ++v) r.on_objects.push_back(homs_[v][u].carrier);
    for (Mor theta = 0; theta < static_cast<Mor>(ambient_->carrier->morphism_count()); ++theta) {
      r.on_morphisms.push_back(precompose(u, theta));
    }
    presheaves_.push_back(std::make_shared<const CatPresheaf>(std::move(r)));
  }
}

namespace {

template <typename MapObject, typename MapMorphism>
Functor induced_functor(const FunctorCategory& from, const FunctorCategory& to,
                        MapObject&& on_object, MapMorphism&& on_morphism) {
  Functor f{from.carrier, to.carrier, {}, {}};
  for (const auto& psi : from.objects) {
    auto idx = to.find(on_object(psi));
    if (!idx) {
      throw Error(ErrorKind::kClosureViolation,
                  "induced functor: image of " + functor_signature(psi) + " is not materialized");
    }
    f.object_map.push_back(*idx);
  }
  for (const auto& s : from.morphisms) {
    auto idx = to.find(on_morphism(s));
    if (!idx) {
      throw Error(ErrorKind::kClosureViolation,
                  "induced functor: image of " + nat_signature(s) + " is not materialized");
    }
    f.morphism_map.push_back(*idx);
  }
  return f;
}

}  // namespace

Functor HomTable::precompose(Obj u, Mor theta) const {
  const FiniteCategory& c = *ambient_->carrier;
  const Functor& t = ambient_->functor(theta);
  return induced_functor(
      hom(c.target(theta), u), hom(c.source(theta), u),
      [&](const Functor& psi) { return compose_functors(psi, t); },
      [&](const NaturalTransformation& s) { return whisker_right(s, t); });
}

Functor HomTable::postcompose(Obj u, Mor theta) const {
  const FiniteCategory& c = *ambient_->carrier;
  const Functor& t = ambient_->functor(theta);
  return induced_functor(
      hom(u, c.source(theta)), hom(u, c.target(theta)),
      [&](const Functor& psi) { return compose_functors(t, psi); },
      [&](const NaturalTransformation& s) { return whisker_left(t, s); });
}

CatPresheaf hom_presheaf(const HomTable& table, Obj u) { return *table.presheaf(u); }

Functor covariant_hom_action(const HomTable& table, Obj u, Mor theta) {
  return table.postcompose(u, theta);
}

namespace {

bool same_presheaf(const PresheafPtr& x, const PresheafPtr& y) {
  return x == y || (x && y && *x == *y);
}

// Object and morphism halves of the square chi(W') . R1(phi) = R2(phi) . chi(W)
// for phi: W' -> W.
struct SquareResult {
  bool objects = true;
  bool morphisms = true;
};

SquareResult check_square(const Functor& chi_src, const Functor& chi_tgt, const Functor& r1_phi,
                          const Functor& r2_phi) {
  SquareResult res;
  for (std::size_t x = 0; x < r1_phi.object_map.size(); ++x) {
    if (chi_src.object_map[r1_phi.object_map[x]] != r2_phi.object_map[chi_tgt.object_map[x]]) {
      res.objects = false;
      break;
    }
  }
  for (std::size_t m = 0; m < r1_phi.morphism_map.size(); ++m) {
    if (chi_src.morphism_map[r1_phi.morphism_map[m]] !=
        r2_phi.morphism_map[chi_tgt.morphism_map[m]]) {
      res.morphisms = false;
      break;
    }
  }
  return res;
}

}  // namespace

bool operator==(const PresheafMorphism& x, const PresheafMorphism& y) {
  return x.components == y.components && same_presheaf(x.source, y.source) &&
         same_presheaf(x.target, y.target);
}

std::string presheaf_morphism_signature(const PresheafMorphism& chi) {
  std::string s = "P[";
  for (std::size_t w = 0; w < chi.components.size(); ++w) {
    if (w) s += ';';
    s += functor_signature(chi.components[w]);
  }
  s += ']';
  return s;
}

ValidationReport validate_presheaf_morphism(const PresheafMorphism& chi) {
  if (chi.source->ambient != chi.target->ambient) {
    throw Error(ErrorKind::kDomainMismatch, "presheaf morphism: ambients differ");
  }
  ValidationReport report;
  const FiniteCategory& c = *chi.source->ambient->carrier;
  if (chi.components.size() != c.object_count()) {
    report.add("presheaf_morphism.total", {}, "components do not cover the ambient");
    return report;
  }
  bool typed = true;
  for (Obj w = 0; w < static_cast<Obj>(c.object_count()); ++w) {
    const Functor& f = chi.components[w];
    if (!same_category(f.dom, chi.source->on_objects[w]) ||
        !same_category(f.cod, chi.target->on_objects[w])) {
      report.add("presheaf_morphism.component", {c.object_name(w)},
                 "component does not run R1(W) -> R2(W)");
      typed = false;
      continue;
    }
    ValidationReport fr = validate_functor(f);
    if (!fr.valid()) {
      report.merge(fr, "presheaf_morphism.component." + c.object_name(w));
      typed = false;
    }
  }
  if (!typed) return report;
  for (Mor phi = 0; phi < static_cast<Mor>(c.morphism_count()); ++phi) {
    Obj w_src = c.source(phi);
    Obj w_tgt = c.target(phi);
    SquareResult sq = check_square(chi.components[w_src], chi.components[w_tgt],
                                   chi.source->on_morphisms[phi], chi.target->on_morphisms[phi]);
    if (!sq.objects) {
      report.add("presheaf_morphism.square.objects", {c.morphism_name(phi)},
                 "object-level naturality square does not commute");
    }
    if (!sq.morphisms) {
      report.add("presheaf_morphism.square.morphisms", {c.morphism_name(phi)},
                 "morphism-level naturality square does not commute");
    }
  }
  return report;
}

PresheafMorphism identity_presheaf_morphism(const PresheafPtr& r) {
  PresheafMorphism chi{r, r, {}};
  for (const auto& cat : r->on_objects) chi.components.push_back(identity_functor(cat));
  return chi;
}

PresheafMorphism compose_presheaf_morphisms(const PresheafMorphism& second,
                                            const PresheafMorphism& first) {
  if (!same_presheaf(first.target, second.source)) {
    throw Error(ErrorKind::kDomainMismatch, "compose_presheaf_morphisms: presheaves differ");
  }
  PresheafMorphism chi{first.source, second.target, {}};
  for (std::size_t w = 0; w < first.components.size(); ++w) {
    chi.components.push_back(compose_functors(second.components[w], first.components[w]));
  }
  return chi;
}

PresheafMorphism yoneda_nat(const HomTable& table, Mor theta) {
  const FiniteCategory& c = *table.ambient().carrier;
  PresheafMorphism chi{table.presheaf(c.source(theta)), table.presheaf(c.target(theta)), {}};
  for (Obj w = 0; w < static_cast<Obj>(c.object_count()); ++w) {
    chi.components.push_back(table.postcompose(w, theta));
  }
  return chi;
}

std::vector<PresheafMorphism> enumerate_presheaf_morphisms(const PresheafPtr& r1,
                                                           const PresheafPtr& r2,
                                                           std::size_t cap) {
  if (r1->ambient != r2->ambient) {
    throw Error(ErrorKind::kDomainMismatch, "enumerate_presheaf_morphisms: ambients differ");
  }
  CandidateBudget budget("enumerate_presheaf_morphisms", cap);
  const FiniteCategory& c = *r1->ambient->carrier;
  const auto n = static_cast<Obj>(c.object_count());

  std::vector<std::vector<Functor>> choices;
  for (Obj w = 0; w < n; ++w) {
    choices.push_back(enumerate_functors(r1->on_objects[w], r2->on_objects[w], cap));
    budget.spend(choices.back().size() + 1);
    if (choices.back().empty()) return {};
  }

  std::vector<std::vector<Mor>> checks(n);
  for (Mor phi = 0; phi < static_cast<Mor>(c.morphism_count()); ++phi) {
    checks[std::max(c.source(phi), c.target(phi))].push_back(phi);
  }

  std::vector<PresheafMorphism> out;
  std::vector<const Functor*> picked(n, nullptr);
  auto search = [&](auto&& self, Obj w) -> void {
    if (w == n) {
      PresheafMorphism chi{r1, r2, {}};
      for (const Functor* f : picked) chi.components.push_back(*f);
      out.push_back(std::move(chi));
      return;
    }
    for (const Functor& f : choices[w]) {
      budget.spend();
      picked[w] = &f;
      bool ok = true;
      for (Mor phi : checks[w]) {
        SquareResult sq = check_square(*picked[c.source(phi)], *picked[c.target(phi)],
                                       r1->on_morphisms[phi], r2->on_morphisms[phi]);
        if (!sq.objects || !sq.morphisms) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, w + 1);
    }
    picked[w] = nullptr;
  };
  search(search, 0);
  return out;
}

}  // namespace catsheaf
