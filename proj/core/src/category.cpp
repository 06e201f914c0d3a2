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

#include "catsheaf/category.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace catsheaf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownId: return "unknown-id";
    case ErrorKind::kNotComposable: return "not-composable";
    case ErrorKind::kDomainMismatch: return "domain-mismatch";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kDuplicateName: return "duplicate-name";
    case ErrorKind::kCapExceeded: return "cap-exceeded";
    case ErrorKind::kClosureViolation: return "closure-violation";
    case ErrorKind::kCompatibilityViolation: return "compatibility-violation";
    case ErrorKind::kNotTriviallyDiscrete: return "not-trivially-discrete";
    case ErrorKind::kDecompositionFailure: return "decomposition-failure";
  }
  return "unknown";
}

void ValidationReport::merge(const ValidationReport& other, const std::string& scope) {
  for (const auto& v : other.violations) {
    violations.push_back({scope.empty() ? v.law : scope + "." + v.law, v.ids, v.detail});
  }
}

bool ValidationReport::has_law(const std::string& law) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.law == law; });
}

namespace {

template <typename T>
std::optional<int> sorted_find(const std::vector<T>& names, std::string_view name) {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - names.begin());
}

void require_unique(const std::vector<std::string>& sorted, const char* what) {
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorKind::kDuplicateName, std::string("duplicate ") + what + " '" + *dup + "'");
  }
}

}  // namespace

std::string identity_name(std::string_view object) { return "id_" + std::string(object); }

FiniteCategory FiniteCategory::from_tables(
    std::vector<std::string> objects, std::vector<MorphismDecl> morphisms,
    const std::map<std::string, std::string>& identities,
    const std::vector<CompositionEntry>& composition) {
  FiniteCategory c;
  std::sort(objects.begin(), objects.end());
  require_unique(objects, "object");
  c.objects_ = std::move(objects);

  std::sort(morphisms.begin(), morphisms.end(),
            [](const MorphismDecl& x, const MorphismDecl& y) { return x.name < y.name; });
  c.morphisms_.reserve(morphisms.size());
  for (const auto& m : morphisms) c.morphisms_.push_back(m.name);
  require_unique(c.morphisms_, "morphism");

  for (const auto& m : morphisms) {
    c.source_.push_back(c.object(m.source));
    c.target_.push_back(c.object(m.target));
  }
  c.identity_.assign(c.objects_.size(), kNone);
  for (const auto& [obj, mor] : identities) c.identity_[c.object(obj)] = c.morphism(mor);

  const std::size_t n = c.morphisms_.size();
  c.composition_.assign(n * n, kNone);
  for (const auto& e : composition) {
    Mor g = c.morphism(e.second);
    Mor f = c.morphism(e.first);
    Mor r = c.morphism(e.result);
    Mor& slot = c.composition_[static_cast<std::size_t>(g) * n + f];
    if (slot != kNone && slot != r) {
      throw Error(ErrorKind::kInvalidInput,
                  "conflicting composition entries for " + e.second + "." + e.first);
    }
    slot = r;
  }
  return c;
}

std::optional<Obj> FiniteCategory::find_object(std::string_view name) const {
  return sorted_find(objects_, name);
}

std::optional<Mor> FiniteCategory::find_morphism(std::string_view name) const {
  return sorted_find(morphisms_, name);
}

Obj FiniteCategory::object(std::string_view name) const {
  if (auto a = find_object(name)) return *a;
  throw Error(ErrorKind::kUnknownId, "unknown object '" + std::string(name) + "'");
}

Mor FiniteCategory::morphism(std::string_view name) const {
  if (auto f = find_morphism(name)) return *f;
  throw Error(ErrorKind::kUnknownId, "unknown morphism '" + std::string(name) + "'");
}

bool FiniteCategory::is_identity(Mor f) const { return identity_.at(source_.at(f)) == f; }

Mor FiniteCategory::compose(Mor g, Mor f) const {
  const auto n = static_cast<Mor>(morphisms_.size());
  if (g < 0 || g >= n || f < 0 || f >= n) {
    throw Error(ErrorKind::kUnknownId, "morphism index out of range");
  }
  if (target_[f] != source_[g]) {
    throw Error(ErrorKind::kNotComposable,
                "'" + morphisms_[g] + "' . '" + morphisms_[f] + "' is not composable");
  }
  Mor r = composite(g, f);
  if (r == kNone) {
    throw Error(ErrorKind::kInvalidInput,
                "no composition entry for '" + morphisms_[g] + "' . '" + morphisms_[f] + "'");
  }
  return r;
}

std::string FiniteCategory::compose(std::string_view g, std::string_view f) const {
  return morphisms_[compose(morphism(g), morphism(f))];
}

std::vector<Mor> FiniteCategory::hom(Obj a, Obj b) const {
  std::vector<Mor> out;
  for (Mor f = 0; f < static_cast<Mor>(morphisms_.size()); ++f) {
    if (source_[f] == a && target_[f] == b) out.push_back(f);
  }
  return out;
}

void CategoryEditor::set_composite(Mor g, Mor f, Mor result) {
  cat_.composition_.at(static_cast<std::size_t>(g) * cat_.morphisms_.size() + f) = result;
}
void CategoryEditor::set_identity(Obj a, Mor f) { cat_.identity_.at(a) = f; }
void CategoryEditor::set_source(Mor f, Obj a) { cat_.source_.at(f) = a; }
void CategoryEditor::set_target(Mor f, Obj a) { cat_.target_.at(f) = a; }

CategoryBuilder& CategoryBuilder::object(std::string name) {
  objects_.push_back(std::move(name));
  return *this;
}

CategoryBuilder& CategoryBuilder::morphism(std::string name, std::string source,
                                           std::string target) {
  morphisms_.push_back({std::move(name), std::move(source), std::move(target)});
  return *this;
}

CategoryBuilder& CategoryBuilder::compose(std::string second, std::string first,
                                          std::string result) {
  composition_.push_back({std::move(second), std::move(first), std::move(result)});
  return *this;
}

FiniteCategory CategoryBuilder::build(
    std::vector<std::pair<std::string, std::string>>* missing) const {
  std::vector<MorphismDecl> mors = morphisms_;
  std::map<std::string, std::string> ids;
  for (const auto& o : objects_) {
    ids[o] = identity_name(o);
    mors.push_back({identity_name(o), o, o});
  }
  std::vector<CompositionEntry> comp = composition_;
  for (const auto& m : mors) {
    comp.push_back({identity_name(m.target), m.name, m.name});
    comp.push_back({m.name, identity_name(m.source), m.name});
  }
  FiniteCategory cat = FiniteCategory::from_tables(objects_, std::move(mors), ids, comp);

  CategoryEditor editor(std::move(cat));
  const FiniteCategory& c = editor.get();
  const auto n = static_cast<Mor>(c.morphism_count());
  std::vector<std::pair<Mor, Mor>> holes;
  for (Mor g = 0; g < n; ++g) {
    for (Mor f = 0; f < n; ++f) {
      if (c.target(f) != c.source(g) || c.composite(g, f) != kNone) continue;
      auto candidates = c.hom(c.source(f), c.target(g));
      if (candidates.size() == 1) {
        editor.set_composite(g, f, candidates.front());
      } else {
        holes.emplace_back(g, f);
      }
    }
  }
  if (!holes.empty()) {
    if (missing == nullptr) {
      const auto& [g, f] = holes.front();
      throw Error(ErrorKind::kInvalidInput, "composition not total: no entry for '" +
                                                c.morphism_name(g) + "." + c.morphism_name(f) +
                                                "'");
    }
    for (const auto& [g, f] : holes) {
      missing->emplace_back(c.morphism_name(g), c.morphism_name(f));
    }
  }
  return std::move(editor).release();
}

ValidationReport validate_category(const FiniteCategory& cat) {
  ValidationReport report;
  const auto nobj = static_cast<Obj>(cat.object_count());
  const auto n = static_cast<Mor>(cat.morphism_count());
  const auto& on = cat.objects();
  const auto& mn = cat.morphisms();

  bool identities_ok = true;
  for (Obj a = 0; a < nobj; ++a) {
    Mor i = cat.identity(a);
    if (i == kNone) {
      report.add("identity.missing", {on[a]}, "object has no identity morphism");
      identities_ok = false;
    } else if (cat.source(i) != a || cat.target(i) != a) {
      report.add("identity.typed", {on[a], mn[i]}, "identity is not an endomorphism of its object");
      identities_ok = false;
    }
  }

  bool table_ok = true;
  for (Mor g = 0; g < n; ++g) {
    for (Mor f = 0; f < n; ++f) {
      Mor r = cat.composite(g, f);
      bool composable = cat.target(f) == cat.source(g);
      if (!composable) {
        if (r != kNone) {
          report.add("composition.spurious", {mn[g], mn[f]},
                     "entry present for a non-composable pair");
        }
        continue;
      }
      if (r == kNone) {
        report.add("composition.total", {mn[g], mn[f]}, "composition not total");
        table_ok = false;
        continue;
      }
      if (cat.source(r) != cat.source(f) || cat.target(r) != cat.target(g)) {
        report.add("composition.closure", {mn[g], mn[f], mn[r]},
                   "composite has the wrong source or target");
        table_ok = false;
      }
    }
  }

  if (identities_ok) {
    for (Mor f = 0; f < n; ++f) {
      Mor left = cat.composite(cat.identity(cat.target(f)), f);
      if (left != f) {
        report.add("identity.left", {mn[f]}, "id . f != f");
      }
      Mor right = cat.composite(f, cat.identity(cat.source(f)));
      if (right != f) {
        report.add("identity.right", {mn[f]}, "f . id != f");
      }
    }
  }

  if (table_ok) {
    for (Mor h = 0; h < n; ++h) {
      for (Mor g = 0; g < n; ++g) {
        if (cat.target(g) != cat.source(h)) continue;
        Mor hg = cat.composite(h, g);
        for (Mor f = 0; f < n; ++f) {
          if (cat.target(f) != cat.source(g)) continue;
          Mor lhs = cat.composite(h, cat.composite(g, f));
          Mor rhs = cat.composite(hg, f);
          if (lhs != rhs) {
            report.add("associativity", {mn[h], mn[g], mn[f]}, "h.(g.f) != (h.g).f");
          }
        }
      }
    }
  }
  return report;
}

FiniteCategory opposite(const FiniteCategory& cat) {
  std::vector<MorphismDecl> mors;
  std::map<std::string, std::string> ids;
  std::vector<CompositionEntry> comp;
  const auto n = static_cast<Mor>(cat.morphism_count());
  for (Mor f = 0; f < n; ++f) {
    mors.push_back({cat.morphism_name(f), cat.object_name(cat.target(f)),
                    cat.object_name(cat.source(f))});
  }
  for (Obj a = 0; a < static_cast<Obj>(cat.object_count()); ++a) {
    if (cat.identity(a) != kNone) ids[cat.object_name(a)] = cat.morphism_name(cat.identity(a));
  }
  for (Mor g = 0; g < n; ++g) {
    for (Mor f = 0; f < n; ++f) {
      Mor r = cat.composite(g, f);
      if (r == kNone) continue;
      // g . f in cat is f . g in the opposite.
      comp.push_back({cat.morphism_name(f), cat.morphism_name(g), cat.morphism_name(r)});
    }
  }
  return FiniteCategory::from_tables(cat.objects(), std::move(mors), ids, comp);
}

FiniteCategory trivially_discrete(const std::vector<std::string>& names) {
  CategoryBuilder b;
  for (const auto& n : names) b.object(n);
  return b.build();
}

FiniteCategory restrict(const FiniteCategory& sup, std::span<const Obj> objs,
                        std::span<const Mor> mors) {
  std::vector<std::string> on;
  for (Obj a : objs) on.push_back(sup.object_name(a));
  std::vector<MorphismDecl> md;
  std::vector<bool> keep(sup.morphism_count(), false);
  for (Mor f : mors) {
    keep[f] = true;
    md.push_back({sup.morphism_name(f), sup.object_name(sup.source(f)),
                  sup.object_name(sup.target(f))});
  }
  std::map<std::string, std::string> ids;
  for (Obj a : objs) {
    Mor i = sup.identity(a);
    if (i != kNone && keep[i]) ids[sup.object_name(a)] = sup.morphism_name(i);
  }
  std::vector<CompositionEntry> comp;
  for (Mor g : mors) {
    for (Mor f : mors) {
      Mor r = sup.composite(g, f);
      if (r != kNone && keep[r]) {
        comp.push_back({sup.morphism_name(g), sup.morphism_name(f), sup.morphism_name(r)});
      }
    }
  }
  return FiniteCategory::from_tables(std::move(on), std::move(md), ids, comp);
}

bool is_subcategory(const FiniteCategory& sub, const FiniteCategory& sup) {
  std::vector<Obj> obj_in_sup;
  for (const auto& o : sub.objects()) {
    auto a = sup.find_object(o);
    if (!a) return false;
    obj_in_sup.push_back(*a);
  }
  std::vector<Mor> mor_in_sup;
  for (const auto& m : sub.morphisms()) {
    auto f = sup.find_morphism(m);
    if (!f) return false;
    mor_in_sup.push_back(*f);
  }
  const auto n = static_cast<Mor>(sub.morphism_count());
  for (Mor f = 0; f < n; ++f) {
    if (obj_in_sup[sub.source(f)] != sup.source(mor_in_sup[f])) return false;
    if (obj_in_sup[sub.target(f)] != sup.target(mor_in_sup[f])) return false;
  }
  for (Obj a = 0; a < static_cast<Obj>(sub.object_count()); ++a) {
    Mor i = sub.identity(a);
    if (i == kNone || mor_in_sup[i] != sup.identity(obj_in_sup[a])) return false;
  }
  for (Mor g = 0; g < n; ++g) {
    for (Mor f = 0; f < n; ++f) {
      Mor r = sub.composite(g, f);
      if (sub.target(f) != sub.source(g)) {
        if (r != kNone) return false;
        continue;
      }
      if (r == kNone || mor_in_sup[r] != sup.composite(mor_in_sup[g], mor_in_sup[f])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

bool shortlex_less(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

}  // namespace

std::vector<SubcategoryIndex> enumerate_subcategory_indices(const FiniteCategory& sup,
                                                            std::size_t cap) {
  const auto nobj = static_cast<int>(sup.object_count());
  if (nobj > 62) throw CapExceeded("enumerate_subcategories", cap);
  CandidateBudget budget("enumerate_subcategories", cap);
  std::vector<SubcategoryIndex> out;

  for (std::uint64_t omask = 0; omask < (std::uint64_t{1} << nobj); ++omask) {
    std::vector<Obj> objs;
    for (Obj a = 0; a < nobj; ++a) {
      if (omask >> a & 1U) objs.push_back(a);
    }
    std::vector<bool> in_obj(nobj, false);
    for (Obj a : objs) in_obj[a] = true;

    std::vector<Mor> required;
    std::vector<Mor> optional;
    for (Mor f = 0; f < static_cast<Mor>(sup.morphism_count()); ++f) {
      if (!in_obj[sup.source(f)] || !in_obj[sup.target(f)]) continue;
      (sup.is_identity(f) ? required : optional).push_back(f);
    }
    if (optional.size() > 62) throw CapExceeded("enumerate_subcategories", cap);

    std::vector<bool> chosen(sup.morphism_count(), false);
    for (std::uint64_t mmask = 0; mmask < (std::uint64_t{1} << optional.size()); ++mmask) {
      budget.spend();
      std::vector<Mor> mors = required;
      for (std::size_t k = 0; k < optional.size(); ++k) {
        if (mmask >> k & 1U) mors.push_back(optional[k]);
      }
      std::fill(chosen.begin(), chosen.end(), false);
      for (Mor f : mors) chosen[f] = true;
      bool closed = true;
      for (Mor g : mors) {
        for (Mor f : mors) {
          if (sup.target(f) != sup.source(g)) continue;
          Mor r = sup.composite(g, f);
          if (r == kNone || !chosen[r]) {
            closed = false;
            break;
          }
        }
        if (!closed) break;
      }
      if (!closed) continue;
      std::sort(mors.begin(), mors.end());
      out.push_back({objs, std::move(mors)});
    }
  }
  std::sort(out.begin(), out.end(), [](const SubcategoryIndex& x, const SubcategoryIndex& y) {
    if (x.objects != y.objects) return shortlex_less(x.objects, y.objects);
    return shortlex_less(x.morphisms, y.morphisms);
  });
  return out;
}

std::vector<FiniteCategory> enumerate_subcategories(const FiniteCategory& sup, std::size_t cap) {
  std::vector<FiniteCategory> out;
  for (const auto& s : enumerate_subcategory_indices(sup, cap)) {
    out.push_back(restrict(sup, s.objects, s.morphisms));
  }
  return out;
}

std::string subcategory_signature(const FiniteCategory& sub) {
  std::string s = "{";
  for (std::size_t i = 0; i < sub.objects().size(); ++i) {
    if (i) s += ',';
    s += sub.objects()[i];
  }
  s += '|';
  for (std::size_t i = 0; i < sub.morphisms().size(); ++i) {
    if (i) s += ',';
    s += sub.morphisms()[i];
  }
  s += '}';
  return s;
}

}  // namespace catsheaf
