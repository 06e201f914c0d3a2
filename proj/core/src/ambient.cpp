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

#include "catsheaf/ambient.hpp"

#include <map>

namespace catsheaf {

std::optional<Obj> AmbientCategory::find_object(const FiniteCategory& cat) const {
  for (Obj v = 0; v < static_cast<Obj>(objects.size()); ++v) {
    if (*objects[v] == cat) return v;
  }
  return std::nullopt;
}

std::optional<Mor> AmbientCategory::find_morphism(Obj v, Obj w, const Functor& f) const {
  for (Mor m : carrier->hom(v, w)) {
    if (morphisms[m] == f) return m;
  }
  return std::nullopt;
}

ValidationReport validate_ambient(const AmbientCategory& ambient) {
  ValidationReport report = validate_category(*ambient.carrier);
  if (!report.valid()) return report;
  const FiniteCategory& c = *ambient.carrier;
  for (Mor m = 0; m < static_cast<Mor>(c.morphism_count()); ++m) {
    const Functor& f = ambient.functor(m);
    const auto& name = c.morphism_name(m);
    if (!same_category(f.dom, ambient.objects[c.source(m)]) ||
        !same_category(f.cod, ambient.objects[c.target(m)])) {
      report.add("ambient.decode.typed", {name}, "decoded functor has the wrong endpoints");
      continue;
    }
    ValidationReport fr = validate_functor(f);
    if (!fr.valid()) report.merge(fr, "ambient.decode." + name);
  }
  if (!report.valid()) return report;
  for (Obj v = 0; v < static_cast<Obj>(c.object_count()); ++v) {
    if (!(ambient.functor(c.identity(v)) == identity_functor(ambient.objects[v]))) {
      report.add("ambient.decode.identity", {c.object_name(v)},
                 "identity does not decode to the identity functor");
    }
  }
  for (Mor g = 0; g < static_cast<Mor>(c.morphism_count()); ++g) {
    for (Mor f = 0; f < static_cast<Mor>(c.morphism_count()); ++f) {
      if (c.target(f) != c.source(g)) continue;
      if (!(ambient.functor(c.composite(g, f)) ==
            compose_functors(ambient.functor(g), ambient.functor(f)))) {
        report.add("ambient.decode.composition", {c.morphism_name(g), c.morphism_name(f)},
                   "decoded composite differs from the functor composite");
      }
    }
  }
  return report;
}

namespace {

std::vector<CategoryPtr> filtered_subcategories(const AmbientSpec& spec) {
  std::vector<CategoryPtr> out;
  for (auto& sub : enumerate_subcategories(spec.base, spec.cap)) {
    if (spec.object_filter && !spec.object_filter(sub)) continue;
    out.push_back(share(std::move(sub)));
  }
  return out;
}

std::string inclusion_name(const std::string& v, const std::string& w) {
  return "incl(" + v + "," + w + ")";
}

// Builds carrier and decode tables from named objects and named functors.
// Composition is looked up extensionally among the declared functors.
AmbientCategory assemble(std::vector<std::string> object_names, std::vector<CategoryPtr> objects,
                         std::vector<std::pair<std::string, Functor>> functors,
                         bool inclusion_only) {
  std::map<std::string, CategoryPtr> obj_by_name;
  std::map<std::string, Obj> pos;
  for (std::size_t i = 0; i < object_names.size(); ++i) {
    if (!obj_by_name.emplace(object_names[i], objects[i]).second) {
      throw Error(ErrorKind::kDuplicateName, "duplicate ambient object '" + object_names[i] + "'");
    }
    pos[object_names[i]] = static_cast<Obj>(i);
  }
  auto name_of = [&](const CategoryPtr& c) -> const std::string& {
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (objects[i] == c) return object_names[i];
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (*objects[i] == *c) return object_names[i];
    }
    throw Error(ErrorKind::kUnknownId, "functor endpoint is not an ambient object");
  };

  std::map<std::string, Functor> fun_by_name;
  std::vector<MorphismDecl> decls;
  for (auto& [name, f] : functors) {
    decls.push_back({name, name_of(f.dom), name_of(f.cod)});
    if (!fun_by_name.emplace(name, std::move(f)).second) {
      throw Error(ErrorKind::kDuplicateName, "duplicate ambient morphism '" + name + "'");
    }
  }

  std::map<std::string, std::string> identities;
  for (const auto& [oname, cat] : obj_by_name) {
    Functor id = identity_functor(cat);
    for (const auto& [fname, f] : fun_by_name) {
      if (f == id) {
        identities[oname] = fname;
        break;
      }
    }
    if (!identities.count(oname)) {
      throw Error(ErrorKind::kClosureViolation, "no identity declared on '" + oname + "'");
    }
  }

  std::vector<CompositionEntry> composition;
  for (const auto& [gname, g] : fun_by_name) {
    for (const auto& [fname, f] : fun_by_name) {
      if (!same_category(f.cod, g.dom)) continue;
      if (name_of(f.cod) != name_of(g.dom)) continue;
      Functor gf = compose_functors(g, f);
      const std::string& src = name_of(f.dom);
      const std::string& tgt = name_of(g.cod);
      const std::string* found = nullptr;
      for (const auto& [hname, h] : fun_by_name) {
        if (h == gf && name_of(h.dom) == src && name_of(h.cod) == tgt) {
          found = &hname;
          break;
        }
      }
      if (found == nullptr) {
        throw Error(ErrorKind::kClosureViolation,
                    "composite " + gname + " . " + fname + " is not a declared morphism");
      }
      composition.push_back({gname, fname, *found});
    }
  }

  AmbientCategory amb;
  amb.inclusion_only = inclusion_only;
  amb.carrier = share(FiniteCategory::from_tables(object_names, std::move(decls), identities,
                                                  composition));
  for (const auto& oname : amb.carrier->objects()) amb.objects.push_back(obj_by_name.at(oname));
  for (const auto& mname : amb.carrier->morphisms()) amb.morphisms.push_back(fun_by_name.at(mname));
  return amb;
}

}  // namespace

AmbientCategory build_ob(const AmbientSpec& spec) {
  std::vector<CategoryPtr> subs = filtered_subcategories(spec);
  std::vector<std::string> names;
  for (const auto& s : subs) names.push_back(subcategory_signature(*s));
  std::vector<std::pair<std::string, Functor>> incls;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < subs.size(); ++j) {
      if (is_subcategory(*subs[i], *subs[j])) {
        incls.emplace_back(inclusion_name(names[i], names[j]), inclusion_functor(subs[i], subs[j]));
      }
    }
  }
  return assemble(std::move(names), std::move(subs), std::move(incls), true);
}

AmbientCategory build_otilde(const AmbientSpec& spec) {
  std::vector<CategoryPtr> subs = filtered_subcategories(spec);
  std::vector<std::string> names;
  for (const auto& s : subs) names.push_back(subcategory_signature(*s));
  CandidateBudget budget("build_otilde", spec.cap);
  std::vector<std::pair<std::string, Functor>> funs;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < subs.size(); ++j) {
      for (auto& f : enumerate_functors(subs[i], subs[j], spec.cap)) {
        budget.spend();
        std::string name = "fun(" + names[i] + "," + names[j] + "," + functor_signature(f) + ")";
        funs.emplace_back(std::move(name), std::move(f));
      }
    }
  }
  return assemble(std::move(names), std::move(subs), std::move(funs), false);
}

AmbientCategory build_explicit(const std::vector<NamedCategory>& categories,
                               const std::vector<NamedFunctor>& functors) {
  std::vector<std::string> names;
  std::vector<CategoryPtr> objs;
  for (const auto& c : categories) {
    names.push_back(c.name);
    objs.push_back(c.category);
  }
  std::vector<std::pair<std::string, Functor>> funs;
  for (const auto& f : functors) {
    auto matches = [&](const std::string& cname, const CategoryPtr& cat) {
      for (const auto& c : categories) {
        if (c.name == cname) return same_category(c.category, cat);
      }
      return false;
    };
    if (!matches(f.source, f.functor.dom) || !matches(f.target, f.functor.cod)) {
      throw Error(ErrorKind::kUnknownId,
                  "functor '" + f.name + "' does not run between listed categories");
    }
    Functor rebased = f.functor;
    for (const auto& c : categories) {
      if (c.name == f.source) rebased.dom = c.category;
      if (c.name == f.target) rebased.cod = c.category;
    }
    funs.emplace_back(f.name, std::move(rebased));
  }
  for (const auto& c : categories) {
    Functor id = identity_functor(c.category);
    bool declared = false;
    for (const auto& [n, f] : funs) declared = declared || f == id;
    if (!declared) funs.emplace_back(identity_name(c.name), std::move(id));
  }
  return assemble(std::move(names), std::move(objs), std::move(funs), false);
}

AmbientCategory build_explicit_all_functors(const std::vector<NamedCategory>& categories,
                                            std::size_t cap) {
  std::vector<NamedFunctor> funs;
  CandidateBudget budget("build_explicit_all_functors", cap);
  for (const auto& c : categories) {
    for (const auto& d : categories) {
      for (auto& f : enumerate_functors(c.category, d.category, cap)) {
        budget.spend();
        std::string name = "fun(" + c.name + "," + d.name + "," + functor_signature(f) + ")";
        funs.push_back({std::move(name), c.name, d.name, std::move(f)});
      }
    }
  }
  return build_explicit(categories, funs);
}

}  // namespace catsheaf
