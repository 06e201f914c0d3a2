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

#include "catsheaf/functor.hpp"

#include <algorithm>
#include <cstdint>

namespace catsheaf {

bool same_category(const CategoryPtr& x, const CategoryPtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  return *x == *y;
}

bool operator==(const Functor& x, const Functor& y) {
  return x.object_map == y.object_map && x.morphism_map == y.morphism_map &&
         same_category(x.dom, y.dom) && same_category(x.cod, y.cod);
}

Functor make_functor(CategoryPtr dom, CategoryPtr cod,
                     const std::vector<std::pair<std::string, std::string>>& objects,
                     const std::vector<std::pair<std::string, std::string>>& morphisms) {
  Functor f{dom, cod, std::vector<Obj>(dom->object_count(), kNone),
            std::vector<Mor>(dom->morphism_count(), kNone)};
  for (const auto& [a, x] : objects) f.object_map[dom->object(a)] = cod->object(x);
  for (const auto& [m, n] : morphisms) f.morphism_map[dom->morphism(m)] = cod->morphism(n);
  for (Obj a = 0; a < static_cast<Obj>(dom->object_count()); ++a) {
    if (f.object_map[a] == kNone) {
      throw Error(ErrorKind::kInvalidInput, "object '" + dom->object_name(a) + "' is not mapped");
    }
    Mor i = dom->identity(a);
    if (i != kNone && f.morphism_map[i] == kNone) {
      f.morphism_map[i] = cod->identity(f.object_map[a]);
    }
  }
  for (Mor m = 0; m < static_cast<Mor>(dom->morphism_count()); ++m) {
    if (f.morphism_map[m] == kNone) {
      throw Error(ErrorKind::kInvalidInput,
                  "morphism '" + dom->morphism_name(m) + "' is not mapped");
    }
  }
  return f;
}

Functor identity_functor(CategoryPtr cat) {
  Functor f{cat, cat, {}, {}};
  for (Obj a = 0; a < static_cast<Obj>(cat->object_count()); ++a) f.object_map.push_back(a);
  for (Mor m = 0; m < static_cast<Mor>(cat->morphism_count()); ++m) f.morphism_map.push_back(m);
  return f;
}

Functor inclusion_functor(CategoryPtr sub, CategoryPtr sup) {
  if (!is_subcategory(*sub, *sup)) {
    throw Error(ErrorKind::kInvalidInput,
                subcategory_signature(*sub) + " is not a subcategory of " +
                    subcategory_signature(*sup));
  }
  Functor f{sub, sup, {}, {}};
  for (const auto& o : sub->objects()) f.object_map.push_back(sup->object(o));
  for (const auto& m : sub->morphisms()) f.morphism_map.push_back(sup->morphism(m));
  return f;
}

ValidationReport validate_functor(const Functor& f) {
  ValidationReport report;
  const FiniteCategory& c = *f.dom;
  const FiniteCategory& d = *f.cod;
  const auto nobj = static_cast<Obj>(c.object_count());
  const auto nmor = static_cast<Mor>(c.morphism_count());
  if (f.object_map.size() != c.object_count() || f.morphism_map.size() != c.morphism_count()) {
    report.add("functor.total", {}, "maps do not cover the domain");
    return report;
  }
  bool in_range = true;
  for (Obj a = 0; a < nobj; ++a) {
    if (f.object_map[a] < 0 || f.object_map[a] >= static_cast<Obj>(d.object_count())) {
      report.add("functor.total", {c.object_name(a)}, "object image out of range");
      in_range = false;
    }
  }
  for (Mor m = 0; m < nmor; ++m) {
    if (f.morphism_map[m] < 0 || f.morphism_map[m] >= static_cast<Mor>(d.morphism_count())) {
      report.add("functor.total", {c.morphism_name(m)}, "morphism image out of range");
      in_range = false;
    }
  }
  if (!in_range) return report;

  for (Mor m = 0; m < nmor; ++m) {
    Mor fm = f.morphism_map[m];
    if (d.source(fm) != f.object_map[c.source(m)]) {
      report.add("functor.source", {c.morphism_name(m), d.morphism_name(fm)},
                 "s(F(f)) != F(s(f))");
    }
    if (d.target(fm) != f.object_map[c.target(m)]) {
      report.add("functor.target", {c.morphism_name(m), d.morphism_name(fm)},
                 "t(F(f)) != F(t(f))");
    }
  }
  for (Obj a = 0; a < nobj; ++a) {
    if (f.morphism_map[c.identity(a)] != d.identity(f.object_map[a])) {
      report.add("functor.identity", {c.object_name(a)}, "F(id_a) != id_F(a)");
    }
  }
  for (Mor g = 0; g < nmor; ++g) {
    for (Mor h = 0; h < nmor; ++h) {
      if (c.target(h) != c.source(g)) continue;
      Mor fg = f.morphism_map[g];
      Mor fh = f.morphism_map[h];
      Mor image = f.morphism_map[c.composite(g, h)];
      if (d.target(fh) != d.source(fg) || d.composite(fg, fh) != image) {
        report.add("functor.composition", {c.morphism_name(g), c.morphism_name(h)},
                   "F(g.f) != F(g).F(f)");
      }
    }
  }
  return report;
}

Functor compose_functors(const Functor& psi, const Functor& theta) {
  if (!same_category(theta.cod, psi.dom)) {
    throw Error(ErrorKind::kDomainMismatch, "compose_functors: theta.cod != psi.dom");
  }
  Functor r{theta.dom, psi.cod, {}, {}};
  r.object_map.reserve(theta.object_map.size());
  for (Obj x : theta.object_map) r.object_map.push_back(psi.object_map.at(x));
  r.morphism_map.reserve(theta.morphism_map.size());
  for (Mor m : theta.morphism_map) r.morphism_map.push_back(psi.morphism_map.at(m));
  return r;
}

std::string functor_signature(const Functor& f) {
  std::string s = "F[";
  for (Obj a = 0; a < static_cast<Obj>(f.object_map.size()); ++a) {
    if (a) s += ',';
    s += f.dom->object_name(a) + ">" + f.cod->object_name(f.object_map[a]);
  }
  s += '|';
  bool first = true;
  for (Mor m = 0; m < static_cast<Mor>(f.morphism_map.size()); ++m) {
    if (f.dom->is_identity(m)) continue;
    if (!first) s += ',';
    first = false;
    s += f.dom->morphism_name(m) + ">" + f.cod->morphism_name(f.morphism_map[m]);
  }
  s += ']';
  return s;
}

std::string nat_signature(const NaturalTransformation& s) {
  std::string out = "N[" + functor_signature(s.source) + ";" + functor_signature(s.target) + ";";
  for (Obj a = 0; a < static_cast<Obj>(s.components.size()); ++a) {
    if (a) out += ',';
    out += s.source.dom->object_name(a) + ">" + s.source.cod->morphism_name(s.components[a]);
  }
  out += ']';
  return out;
}

NaturalTransformation identity_nat(const Functor& f) {
  NaturalTransformation s{f, f, {}};
  for (Obj x : f.object_map) s.components.push_back(f.cod->identity(x));
  return s;
}

namespace {

void require_parallel(const Functor& a, const Functor& b, const char* where) {
  if (!same_category(a.dom, b.dom) || !same_category(a.cod, b.cod)) {
    throw Error(ErrorKind::kDomainMismatch, std::string(where) + ": functors are not parallel");
  }
}

}  // namespace

ValidationReport validate_nat(const NaturalTransformation& s) {
  require_parallel(s.source, s.target, "validate_nat");
  ValidationReport report;
  const FiniteCategory& c = *s.source.dom;
  const FiniteCategory& d = *s.source.cod;
  if (s.components.size() != c.object_count()) {
    report.add("nat.total", {}, "component family does not cover the domain");
    return report;
  }
  bool typed = true;
  for (Obj a = 0; a < static_cast<Obj>(c.object_count()); ++a) {
    Mor k = s.components[a];
    if (k < 0 || k >= static_cast<Mor>(d.morphism_count()) ||
        d.source(k) != s.source(a) || d.target(k) != s.target(a)) {
      report.add("nat.component", {c.object_name(a)},
                 "component is not a morphism F(a) -> G(a)");
      typed = false;
    }
  }
  if (!typed) return report;
  for (Mor f = 0; f < static_cast<Mor>(c.morphism_count()); ++f) {
    Obj a = c.source(f);
    Obj b = c.target(f);
    Mor lhs = d.composite(s.components[b], s.source.on_morphism(f));
    Mor rhs = d.composite(s.target.on_morphism(f), s.components[a]);
    if (lhs == kNone || lhs != rhs) {
      report.add("nat.naturality", {c.morphism_name(f)},
                 "S(b) . F(f) != G(f) . S(a) for f: " + c.object_name(a) + " -> " +
                     c.object_name(b));
    }
  }
  return report;
}

NaturalTransformation vcompose_nats(const NaturalTransformation& second,
                                    const NaturalTransformation& first) {
  if (!(first.target == second.source)) {
    throw Error(ErrorKind::kDomainMismatch, "vcompose_nats: first.target != second.source");
  }
  NaturalTransformation r{first.source, second.target, {}};
  const FiniteCategory& d = *first.source.cod;
  for (std::size_t a = 0; a < first.components.size(); ++a) {
    r.components.push_back(d.compose(second.components[a], first.components[a]));
  }
  return r;
}

NaturalTransformation whisker_right(const NaturalTransformation& s, const Functor& theta) {
  if (!same_category(theta.cod, s.source.dom)) {
    throw Error(ErrorKind::kDomainMismatch, "whisker_right: theta.cod != S.dom");
  }
  NaturalTransformation r{compose_functors(s.source, theta), compose_functors(s.target, theta),
                          {}};
  for (Obj x : theta.object_map) r.components.push_back(s.components.at(x));
  return r;
}

NaturalTransformation whisker_left(const Functor& theta, const NaturalTransformation& s) {
  if (!same_category(s.source.cod, theta.dom)) {
    throw Error(ErrorKind::kDomainMismatch, "whisker_left: S.cod != theta.dom");
  }
  NaturalTransformation r{compose_functors(theta, s.source), compose_functors(theta, s.target),
                          {}};
  for (Mor k : s.components) r.components.push_back(theta.on_morphism(k));
  return r;
}

namespace {

// Non-identity morphisms chosen greedily so that, together with identities,
// they generate the whole category under composition.
std::vector<Mor> generating_set(const FiniteCategory& c) {
  const auto n = static_cast<Mor>(c.morphism_count());
  std::vector<bool> reached(n, false);
  std::vector<Mor> gens;
  for (Mor m = 0; m < n; ++m) {
    if (c.is_identity(m)) reached[m] = true;
  }
  for (Mor m = 0; m < n; ++m) {
    if (reached[m]) continue;
    gens.push_back(m);
    reached[m] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (Mor g = 0; g < n; ++g) {
        if (!reached[g]) continue;
        for (Mor f = 0; f < n; ++f) {
          if (!reached[f] || c.target(f) != c.source(g)) continue;
          Mor r = c.composite(g, f);
          if (r != kNone && !reached[r]) {
            reached[r] = true;
            changed = true;
          }
        }
      }
    }
  }
  return gens;
}

// Extends images of identities and generators to every morphism by
// composition. Returns false on an inconsistent forced image.
bool extend_by_composition(const FiniteCategory& c, const FiniteCategory& d,
                           std::vector<Mor>& image) {
  const auto n = static_cast<Mor>(c.morphism_count());
  for (bool changed = true; changed;) {
    changed = false;
    for (Mor g = 0; g < n; ++g) {
      if (image[g] == kNone) continue;
      for (Mor f = 0; f < n; ++f) {
        if (image[f] == kNone || c.target(f) != c.source(g)) continue;
        Mor forced = d.composite(image[g], image[f]);
        if (forced == kNone) return false;
        Mor& slot = image[c.composite(g, f)];
        if (slot == kNone) {
          slot = forced;
          changed = true;
        } else if (slot != forced) {
          return false;
        }
      }
    }
  }
  return std::find(image.begin(), image.end(), kNone) == image.end();
}

}  // namespace

std::vector<Functor> enumerate_functors(const CategoryPtr& c, const CategoryPtr& d,
                                        std::size_t cap) {
  CandidateBudget budget("enumerate_functors", cap);
  const auto nobj = static_cast<int>(c->object_count());
  const auto dobj = static_cast<int>(d->object_count());
  std::vector<Functor> out;
  if (nobj > 0 && dobj == 0) return out;

  const std::vector<Mor> gens = generating_set(*c);
  std::vector<Obj> omap(nobj, 0);
  for (;;) {
    budget.spend();

    std::vector<std::vector<Mor>> choices;
    bool feasible = true;
    for (Mor g : gens) {
      choices.push_back(d->hom(omap[c->source(g)], omap[c->target(g)]));
      if (choices.back().empty()) feasible = false;
    }

    if (feasible) {
      std::vector<std::size_t> pick(gens.size(), 0);
      for (;;) {
        budget.spend();
        std::vector<Mor> image(c->morphism_count(), kNone);
        for (Obj a = 0; a < nobj; ++a) image[c->identity(a)] = d->identity(omap[a]);
        for (std::size_t k = 0; k < gens.size(); ++k) image[gens[k]] = choices[k][pick[k]];
        if (extend_by_composition(*c, *d, image)) {
          out.push_back(Functor{c, d, omap, std::move(image)});
        }
        bool exhausted = true;
        for (std::size_t k = gens.size(); k-- > 0;) {
          if (++pick[k] < choices[k].size()) {
            exhausted = false;
            break;
          }
          pick[k] = 0;
        }
        if (exhausted) break;
      }
    }

    int k = nobj - 1;
    while (k >= 0 && ++omap[k] == dobj) omap[k--] = 0;
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end(), [](const Functor& x, const Functor& y) {
    if (x.object_map != y.object_map) return x.object_map < y.object_map;
    return x.morphism_map < y.morphism_map;
  });
  return out;
}

std::vector<NaturalTransformation> enumerate_nats(const Functor& theta1, const Functor& theta2,
                                                  std::size_t cap) {
  require_parallel(theta1, theta2, "enumerate_nats");
  CandidateBudget budget("enumerate_nats", cap);
  const FiniteCategory& c = *theta1.dom;
  const FiniteCategory& d = *theta1.cod;
  const auto nobj = static_cast<Obj>(c.object_count());

  std::vector<std::vector<Mor>> choices;
  for (Obj a = 0; a < nobj; ++a) choices.push_back(d.hom(theta1(a), theta2(a)));

  // Morphisms whose later endpoint is `a`; checked once `a` is assigned.
  std::vector<std::vector<Mor>> checks(nobj);
  for (Mor f = 0; f < static_cast<Mor>(c.morphism_count()); ++f) {
    checks[std::max(c.source(f), c.target(f))].push_back(f);
  }

  std::vector<NaturalTransformation> out;
  std::vector<Mor> comp(nobj, kNone);
  auto natural_at = [&](Obj a) {
    for (Mor f : checks[a]) {
      Mor lhs = d.composite(comp[c.target(f)], theta1.on_morphism(f));
      Mor rhs = d.composite(theta2.on_morphism(f), comp[c.source(f)]);
      if (lhs != rhs) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, Obj a) -> void {
    if (a == nobj) {
      out.push_back({theta1, theta2, comp});
      return;
    }
    for (Mor k : choices[a]) {
      budget.spend();
      comp[a] = k;
      if (natural_at(a)) self(self, a + 1);
    }
    comp[a] = kNone;
  };
  search(search, 0);
  return out;
}

NatMonoid endo_nat_monoid(const Functor& i, std::size_t cap) {
  NatMonoid m;
  m.elements = enumerate_nats(i, i, cap);
  auto index_of = [&](const NaturalTransformation& s) {
    auto it = std::find_if(m.elements.begin(), m.elements.end(),
                           [&](const NaturalTransformation& e) { return e.components == s.components; });
    if (it == m.elements.end()) {
      throw Error(ErrorKind::kClosureViolation, "endo_nat_monoid: product left Nat(i,i)");
    }
    return static_cast<std::size_t>(it - m.elements.begin());
  };
  m.unit = index_of(identity_nat(i));
  for (const auto& x : m.elements) {
    std::vector<std::size_t> row;
    for (const auto& y : m.elements) row.push_back(index_of(vcompose_nats(x, y)));
    m.table.push_back(std::move(row));
  }
  return m;
}

}  // namespace catsheaf
