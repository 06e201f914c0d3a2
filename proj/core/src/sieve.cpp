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

#include "catsheaf/sieve.hpp"

#include <algorithm>

namespace catsheaf {

namespace {

const FiniteCategory& hom_carrier(const Sieve& s, Obj v) {
  return *s.table->hom(v, s.apex).carrier;
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<int> to_indices(const std::vector<bool>& mask) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(mask.size()); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

// Whether F_U(theta) maps the selection at target(theta) into the one at
// source(theta). Reports the first offending object and morphism names.
struct RestrictionCheck {
  std::string bad_object;
  std::string bad_morphism;
  bool ok() const { return bad_object.empty() && bad_morphism.empty(); }
};

RestrictionCheck check_restriction(const Functor& action, const FiniteCategory& from,
                                   const SubcategoryIndex& upper, const SubcategoryIndex& lower) {
  RestrictionCheck r;
  for (Obj x : upper.objects) {
    if (!contains(lower.objects, action.object_map[x])) {
      r.bad_object = from.object_name(x);
      break;
    }
  }
  for (Mor m : upper.morphisms) {
    if (!contains(lower.morphisms, action.morphism_map[m])) {
      r.bad_morphism = from.morphism_name(m);
      break;
    }
  }
  return r;
}

}  // namespace

FiniteCategory Sieve::selected(Obj v) const {
  const SubcategoryIndex& sel = selection.at(v);
  return restrict(*table->hom(v, apex).carrier, sel.objects, sel.morphisms);
}

std::string sieve_signature(const Sieve& s) {
  std::string out = "S[";
  bool first = true;
  const FiniteCategory& amb = *s.table->ambient().carrier;
  for (Obj v = 0; v < static_cast<Obj>(s.selection.size()); ++v) {
    if (s.selection[v].objects.empty() && s.selection[v].morphisms.empty()) continue;
    if (!first) out += ';';
    first = false;
    out += amb.object_name(v) + "=" + subcategory_signature(s.selected(v));
  }
  out += ']';
  return out;
}

Sieve empty_sieve(HomTablePtr table, Obj u) {
  Sieve s{table, u, {}};
  s.selection.resize(table->ambient().size());
  return s;
}

Sieve maximal_sieve(HomTablePtr table, Obj u) {
  Sieve s{table, u, {}};
  for (Obj v = 0; v < static_cast<Obj>(table->ambient().size()); ++v) {
    const FiniteCategory& h = *table->hom(v, u).carrier;
    SubcategoryIndex all;
    for (Obj x = 0; x < static_cast<Obj>(h.object_count()); ++x) all.objects.push_back(x);
    for (Mor m = 0; m < static_cast<Mor>(h.morphism_count()); ++m) all.morphisms.push_back(m);
    s.selection.push_back(std::move(all));
  }
  return s;
}

ValidationReport validate_sieve(const Sieve& s) {
  ValidationReport report;
  const AmbientCategory& amb = s.table->ambient();
  const FiniteCategory& c = *amb.carrier;
  if (s.selection.size() != amb.size()) {
    report.add("sieve.total", {}, "selection does not cover the ambient");
    return report;
  }
  bool subcats = true;
  for (Obj v = 0; v < static_cast<Obj>(amb.size()); ++v) {
    const FiniteCategory& h = hom_carrier(s, v);
    const SubcategoryIndex& sel = s.selection[v];
    bool in_range =
        std::all_of(sel.objects.begin(), sel.objects.end(),
                    [&](Obj x) { return x >= 0 && x < static_cast<Obj>(h.object_count()); }) &&
        std::all_of(sel.morphisms.begin(), sel.morphisms.end(),
                    [&](Mor m) { return m >= 0 && m < static_cast<Mor>(h.morphism_count()); }) &&
        std::is_sorted(sel.objects.begin(), sel.objects.end()) &&
        std::is_sorted(sel.morphisms.begin(), sel.morphisms.end());
    if (!in_range || !is_subcategory(s.selected(v), h)) {
      report.add("sieve.subcategory", {c.object_name(v)},
                 "selection is not a subcategory of F(V, U)");
      subcats = false;
    }
  }
  if (!subcats) return report;

  const CatPresheaf& fu = *s.table->presheaf(s.apex);
  for (Mor theta = 0; theta < static_cast<Mor>(c.morphism_count()); ++theta) {
    Obj v = c.source(theta);
    Obj v2 = c.target(theta);
    RestrictionCheck r = check_restriction(fu.on_morphisms[theta], hom_carrier(s, v2),
                                           s.selection[v2], s.selection[v]);
    if (!r.bad_object.empty()) {
      report.add("sieve.condition1",
                 {c.morphism_name(theta), c.object_name(v2), c.object_name(v), r.bad_object},
                 "precomposition leaves the selection");
    }
    if (!r.bad_morphism.empty()) {
      report.add("sieve.condition2",
                 {c.morphism_name(theta), c.object_name(v2), c.object_name(v), r.bad_morphism},
                 "whiskering leaves the selection");
    }
  }
  return report;
}

Sieve generate_sieve(HomTablePtr table, Obj u, const SieveGenerators& gens) {
  const AmbientCategory& amb = table->ambient();
  const FiniteCategory& c = *amb.carrier;
  const auto n = static_cast<Obj>(amb.size());
  std::vector<std::vector<bool>> objs(n);
  std::vector<std::vector<bool>> mors(n);
  for (Obj v = 0; v < n; ++v) {
    objs[v].assign(table->hom(v, u).carrier->object_count(), false);
    mors[v].assign(table->hom(v, u).carrier->morphism_count(), false);
  }
  for (const auto& [v, f] : gens.functors) {
    auto x = table->hom(v, u).find(f);
    if (!x) {
      throw Error(ErrorKind::kInvalidInput,
                  "generator " + functor_signature(f) + " is not an object of F(V, U)");
    }
    objs[v][*x] = true;
  }
  for (const auto& [v, s] : gens.nats) {
    auto m = table->hom(v, u).find(s);
    if (!m) {
      throw Error(ErrorKind::kInvalidInput,
                  "generator " + nat_signature(s) + " is not a morphism of F(V, U)");
    }
    mors[v][*m] = true;
  }

  const CatPresheaf& fu = *table->presheaf(u);
  for (bool changed = true; changed;) {
    changed = false;
    auto set = [&](std::vector<bool>& mask, int i) {
      if (!mask[i]) {
        mask[i] = true;
        changed = true;
      }
    };
    for (Obj v = 0; v < n; ++v) {
      const FiniteCategory& h = *table->hom(v, u).carrier;
      for (Mor m = 0; m < static_cast<Mor>(h.morphism_count()); ++m) {
        if (!mors[v][m]) continue;
        set(objs[v], h.source(m));
        set(objs[v], h.target(m));
      }
      for (Obj x = 0; x < static_cast<Obj>(h.object_count()); ++x) {
        if (objs[v][x]) set(mors[v], h.identity(x));
      }
      for (Mor g = 0; g < static_cast<Mor>(h.morphism_count()); ++g) {
        if (!mors[v][g]) continue;
        for (Mor f = 0; f < static_cast<Mor>(h.morphism_count()); ++f) {
          if (mors[v][f] && h.target(f) == h.source(g)) set(mors[v], h.composite(g, f));
        }
      }
    }
    for (Mor theta = 0; theta < static_cast<Mor>(c.morphism_count()); ++theta) {
      Obj v = c.source(theta);
      Obj v2 = c.target(theta);
      const Functor& action = fu.on_morphisms[theta];
      for (std::size_t x = 0; x < objs[v2].size(); ++x) {
        if (objs[v2][x]) set(objs[v], action.object_map[x]);
      }
      for (std::size_t m = 0; m < mors[v2].size(); ++m) {
        if (mors[v2][m]) set(mors[v], action.morphism_map[m]);
      }
    }
  }

  Sieve s{table, u, {}};
  for (Obj v = 0; v < n; ++v) s.selection.push_back({to_indices(objs[v]), to_indices(mors[v])});
  return s;
}

std::vector<Sieve> enumerate_sieves(HomTablePtr table, Obj u, std::size_t cap) {
  CandidateBudget budget("enumerate_sieves", cap);
  const AmbientCategory& amb = table->ambient();
  const FiniteCategory& c = *amb.carrier;
  const auto n = static_cast<Obj>(amb.size());

  std::vector<std::vector<SubcategoryIndex>> choices;
  for (Obj v = 0; v < n; ++v) {
    choices.push_back(enumerate_subcategory_indices(*table->hom(v, u).carrier, cap));
    budget.spend(choices.back().size());
  }
  std::vector<std::vector<Mor>> checks(n);
  for (Mor theta = 0; theta < static_cast<Mor>(c.morphism_count()); ++theta) {
    checks[std::max(c.source(theta), c.target(theta))].push_back(theta);
  }

  const CatPresheaf& fu = *table->presheaf(u);
  std::vector<Sieve> out;
  std::vector<const SubcategoryIndex*> picked(n, nullptr);
  auto search = [&](auto&& self, Obj v) -> void {
    if (v == n) {
      Sieve s{table, u, {}};
      for (const auto* sel : picked) s.selection.push_back(*sel);
      out.push_back(std::move(s));
      return;
    }
    for (const auto& cand : choices[v]) {
      budget.spend();
      picked[v] = &cand;
      bool ok = true;
      for (Mor theta : checks[v]) {
        Obj src = c.source(theta);
        Obj tgt = c.target(theta);
        if (!check_restriction(fu.on_morphisms[theta], *table->hom(tgt, u).carrier,
                               *picked[tgt], *picked[src])
                 .ok()) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, v + 1);
    }
    picked[v] = nullptr;
  };
  search(search, 0);
  return out;
}

Sieve intersect(const Sieve& x, const Sieve& y) {
  if (x.table != y.table || x.apex != y.apex) {
    throw Error(ErrorKind::kDomainMismatch, "intersect: sieves live on different homs");
  }
  Sieve s{x.table, x.apex, {}};
  for (std::size_t v = 0; v < x.selection.size(); ++v) {
    SubcategoryIndex r;
    std::set_intersection(x.selection[v].objects.begin(), x.selection[v].objects.end(),
                          y.selection[v].objects.begin(), y.selection[v].objects.end(),
                          std::back_inserter(r.objects));
    std::set_intersection(x.selection[v].morphisms.begin(), x.selection[v].morphisms.end(),
                          y.selection[v].morphisms.begin(), y.selection[v].morphisms.end(),
                          std::back_inserter(r.morphisms));
    s.selection.push_back(std::move(r));
  }
  return s;
}

bool is_classical_sieve(const ClassicalSieve& s) {
  const FiniteCategory& c = *s.base;
  for (Mor f : s.arrows) {
    if (c.target(f) != s.apex) return false;
    for (Mor g = 0; g < static_cast<Mor>(c.morphism_count()); ++g) {
      if (c.target(g) != c.source(f)) continue;
      if (!contains(s.arrows, c.composite(f, g))) return false;
    }
  }
  return true;
}

ClassicalSieve classical_bridge(const Sieve& s) {
  const AmbientCategory& amb = s.table->ambient();
  for (const auto& cat : amb.objects) {
    for (Mor m = 0; m < static_cast<Mor>(cat->morphism_count()); ++m) {
      if (!cat->is_identity(m)) {
        throw Error(ErrorKind::kNotTriviallyDiscrete,
                    "classical_bridge: ambient object " + subcategory_signature(*cat) +
                        " has a non-identity morphism");
      }
    }
  }
  ClassicalSieve out{amb.carrier, s.apex, {}};
  const FiniteCategory& c = *amb.carrier;
  for (Mor theta = 0; theta < static_cast<Mor>(c.morphism_count()); ++theta) {
    if (c.target(theta) != s.apex) continue;
    Obj v = c.source(theta);
    auto x = s.table->hom(v, s.apex).find(amb.functor(theta));
    if (x && contains(s.selection[v].objects, *x)) out.arrows.push_back(theta);
  }
  return out;
}

namespace {

std::string describe(const HomTable& table, Obj u, Obj v, Mor m) {
  return nat_signature(table.hom(v, u).decode_morphism(m));
}

}  // namespace

Sieve sieve_from_ob_data(HomTablePtr table, Obj u, const ObSieveData& data) {
  const AmbientCategory& amb = table->ambient();
  if (!amb.inclusion_only) {
    throw Error(ErrorKind::kInvalidInput, "sieve_from_ob_data: ambient is not inclusion-only");
  }
  const FiniteCategory& c = *amb.carrier;
  auto in_family = [&](Obj v) { return contains(data.family, v); };

  for (Obj v : data.family) {
    if (table->hom(v, u).carrier->object_count() != 1) {
      throw Error(ErrorKind::kInvalidInput,
                  "family member " + c.object_name(v) + " is not a subcategory of the apex");
    }
  }
  for (Mor theta = 0; theta < static_cast<Mor>(c.morphism_count()); ++theta) {
    if (in_family(c.target(theta)) && !in_family(c.source(theta))) {
      throw Error(ErrorKind::kClosureViolation,
                  "family is not downward closed: " + c.object_name(c.source(theta)) +
                      " is missing below " + c.object_name(c.target(theta)));
    }
  }
  for (Obj v : data.family) {
    const FiniteCategory& h = *table->hom(v, u).carrier;
    auto it = data.monoids.find(v);
    std::vector<Mor> chosen = it == data.monoids.end() ? std::vector<Mor>{} : it->second;
    std::sort(chosen.begin(), chosen.end());
    if (!contains(chosen, h.identity(0))) {
      throw Error(ErrorKind::kClosureViolation,
                  "choice at " + c.object_name(v) + " does not contain the identity");
    }
    for (Mor g : chosen) {
      for (Mor f : chosen) {
        if (!contains(chosen, h.composite(g, f))) {
          throw Error(ErrorKind::kClosureViolation,
                      "choice at " + c.object_name(v) + " is not closed under composition");
        }
      }
    }
  }
  for (const auto& [v, chosen] : data.monoids) {
    if (!in_family(v)) {
      throw Error(ErrorKind::kInvalidInput,
                  "monoid given for " + c.object_name(v) + " outside the family");
    }
  }

  const CatPresheaf& fu = *table->presheaf(u);
  for (Mor theta = 0; theta < static_cast<Mor>(c.morphism_count()); ++theta) {
    Obj lower = c.source(theta);
    Obj upper = c.target(theta);
    if (!in_family(upper)) continue;
    const auto& m_upper = data.monoids.at(upper);
    const auto& m_lower = data.monoids.at(lower);
    for (Mor s : m_upper) {
      Mor restricted = fu.on_morphisms[theta].morphism_map[s];
      if (std::find(m_lower.begin(), m_lower.end(), restricted) == m_lower.end()) {
        throw Error(ErrorKind::kCompatibilityViolation,
                    "restriction of " + describe(*table, u, upper, s) + " from " +
                        c.object_name(upper) + " to " + c.object_name(lower) +
                        " is not in the choice at " + c.object_name(lower));
      }
    }
  }

  Sieve out = empty_sieve(table, u);
  for (Obj v : data.family) {
    std::vector<Mor> chosen = data.monoids.at(v);
    std::sort(chosen.begin(), chosen.end());
    out.selection[v] = {{0}, std::move(chosen)};
  }
  return out;
}

ObSieveData decompose_ob_sieve(const Sieve& s) {
  const AmbientCategory& amb = s.table->ambient();
  if (!amb.inclusion_only) {
    throw Error(ErrorKind::kInvalidInput, "decompose_ob_sieve: ambient is not inclusion-only");
  }
  ObSieveData data;
  for (Obj v = 0; v < static_cast<Obj>(s.selection.size()); ++v) {
    const SubcategoryIndex& sel = s.selection[v];
    if (sel.objects.empty()) {
      if (!sel.morphisms.empty()) {
        throw Error(ErrorKind::kDecompositionFailure,
                    "selection at " + amb.carrier->object_name(v) + " has morphisms but no object");
      }
      continue;
    }
    data.family.push_back(v);
    data.monoids[v] = sel.morphisms;
  }
  try {
    Sieve rebuilt = sieve_from_ob_data(s.table, s.apex, data);
    if (!(rebuilt == s)) {
      throw Error(ErrorKind::kDecompositionFailure, "rebuilt sieve differs from the input");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kDecompositionFailure) throw;
    throw Error(ErrorKind::kDecompositionFailure, std::string("decompose_ob_sieve: ") + e.what());
  }
  return data;
}

CompatibilityReport compare_compatibility_directions(const HomTable& table, Obj u,
                                                     const ObSieveData& data) {
  CompatibilityReport report;
  const FiniteCategory& c = *table.ambient().carrier;
  const CatPresheaf& fu = *table.presheaf(u);
  for (Mor theta = 0; theta < static_cast<Mor>(c.morphism_count()); ++theta) {
    Obj lower = c.source(theta);
    Obj upper = c.target(theta);
    if (lower == upper) continue;
    auto up = data.monoids.find(upper);
    auto lo = data.monoids.find(lower);
    if (up == data.monoids.end() || lo == data.monoids.end()) continue;
    std::vector<Mor> restricted;
    for (Mor s : up->second) restricted.push_back(fu.on_morphisms[theta].morphism_map[s]);
    std::sort(restricted.begin(), restricted.end());
    for (Mor r : restricted) {
      if (std::find(lo->second.begin(), lo->second.end(), r) == lo->second.end()) {
        report.restriction_closed = false;
        report.restriction_failures.push_back(c.object_name(lower) + " <= " +
                                              c.object_name(upper) + ": " +
                                              describe(table, u, lower, r));
      }
    }
    for (Mor m : lo->second) {
      if (!contains(restricted, m)) {
        report.reverse_inclusion = false;
        report.reverse_failures.push_back(c.object_name(lower) + " <= " + c.object_name(upper) +
                                          ": " + describe(table, u, lower, m));
      }
    }
  }
  return report;
}

}  // namespace catsheaf
