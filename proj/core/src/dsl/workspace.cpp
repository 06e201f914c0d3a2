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

#include "catsheaf/dsl/workspace.hpp"

#include <sstream>

namespace catsheaf::dsl {

std::string to_string(const SourceSpan& span) {
  return span.file + ":" + std::to_string(span.line) + ":" + std::to_string(span.column);
}

std::string to_string(const Diagnostic& d) {
  return to_string(d.span) + ": error " + d.code + " [" + d.law + "]: " + d.message;
}

std::string to_string(const FunctorExpr& e) {
  switch (e.kind) {
    case FunctorExpr::Kind::kNamed: return e.args.at(0);
    case FunctorExpr::Kind::kInclusion: return "incl(" + e.args.at(0) + ", " + e.args.at(1) + ")";
    case FunctorExpr::Kind::kIdentity: return "id(" + e.args.at(0) + ")";
  }
  return {};
}

namespace {

template <class T>
const T* by_name(const std::vector<T>& items, std::string_view name) {
  for (const auto& i : items) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

}  // namespace

const CategoryDef* Workspace::find_category(std::string_view name) const {
  return by_name(categories, name);
}
const FunctorDef* Workspace::find_functor(std::string_view name) const {
  return by_name(functors, name);
}
const NatDef* Workspace::find_nat(std::string_view name) const { return by_name(nats, name); }
const AmbientDef* Workspace::find_ambient(std::string_view name) const {
  return by_name(ambients, name);
}
const SieveDef* Workspace::find_sieve(std::string_view name) const {
  return by_name(sieves, name);
}

Functor Workspace::resolve(const FunctorExpr& e) const {
  auto cat = [&](const std::string& n) {
    const CategoryDef* c = find_category(n);
    if (!c) throw Error(ErrorKind::kUnknownId, "unknown category '" + n + "'");
    return c->category;
  };
  switch (e.kind) {
    case FunctorExpr::Kind::kNamed: {
      const FunctorDef* f = find_functor(e.args.at(0));
      if (!f) throw Error(ErrorKind::kUnknownId, "unknown functor '" + e.args.at(0) + "'");
      return f->functor;
    }
    case FunctorExpr::Kind::kIdentity:
      return identity_functor(cat(e.args.at(0)));
    case FunctorExpr::Kind::kInclusion: {
      CategoryPtr v = cat(e.args.at(0));
      CategoryPtr u = cat(e.args.at(1));
      if (!is_subcategory(*v, *u)) {
        throw Error(ErrorKind::kDomainMismatch,
                    "'" + e.args[0] + "' is not a subcategory of '" + e.args[1] + "'");
      }
      return inclusion_functor(v, u);
    }
  }
  throw Error(ErrorKind::kInvalidInput, "bad functor expression");
}

std::optional<Obj> Workspace::ambient_object(const AmbientDef& ambient,
                                             std::string_view category) const {
  if (!ambient.built) return std::nullopt;
  if (ambient.kind == AmbientDef::Kind::kExplicit) {
    if (auto v = ambient.built->carrier->find_object(category)) return v;
  }
  const CategoryDef* c = find_category(category);
  if (!c) return std::nullopt;
  return ambient.built->find_object(*c->category);
}

bool same_data(const Workspace& x, const Workspace& y) {
  auto eq = [](const auto& xs, const auto& ys, auto&& same) {
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!same(xs[i], ys[i])) return false;
    }
    return true;
  };
  return eq(x.categories, y.categories,
            [](const CategoryDef& a, const CategoryDef& b) {
              return a.name == b.name && *a.category == *b.category;
            }) &&
         eq(x.functors, y.functors,
            [](const FunctorDef& a, const FunctorDef& b) {
              return a.name == b.name && a.dom == b.dom && a.cod == b.cod &&
                     a.functor == b.functor;
            }) &&
         eq(x.nats, y.nats,
            [](const NatDef& a, const NatDef& b) {
              return a.name == b.name && a.source == b.source && a.target == b.target &&
                     a.nat == b.nat;
            }) &&
         eq(x.ambients, y.ambients,
            [](const AmbientDef& a, const AmbientDef& b) {
              return a.name == b.name && a.kind == b.kind && a.base == b.base && a.cap == b.cap &&
                     a.categories == b.categories && a.all_functors == b.all_functors &&
                     a.functors == b.functors;
            }) &&
         eq(x.sieves, y.sieves,
            [](const SieveDef& a, const SieveDef& b) {
              auto same_select = [](const SelectDef& s, const SelectDef& t) {
                return s.object == t.object && s.functors == t.functors && s.nats == t.nats;
              };
              if (a.name != b.name || a.apex != b.apex || a.ambient != b.ambient ||
                  a.selects.size() != b.selects.size()) {
                return false;
              }
              for (std::size_t i = 0; i < a.selects.size(); ++i) {
                if (!same_select(a.selects[i], b.selects[i])) return false;
              }
              return true;
            }) &&
         eq(x.checks, y.checks, [](const CheckDef& a, const CheckDef& b) {
           return a.kind == b.kind && a.args == b.args;
         });
}

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

void section(std::ostream& os, const char* label, const std::vector<std::string>& entries) {
  if (!entries.empty()) os << "  " << label << ": " << join(entries) << ";\n";
}

std::string composite(const std::string& g, const std::string& f) {
  if (g.find('.') == std::string::npos && f.find('.') == std::string::npos) return g + "." + f;
  return g + " . " + f;
}

}  // namespace

std::string serialize_workspace(const Workspace& ws) {
  std::ostringstream os;
  for (const auto& cd : ws.categories) {
    const FiniteCategory& c = *cd.category;
    const auto n = static_cast<Mor>(c.morphism_count());
    std::vector<std::string> mors;
    std::vector<std::string> comps;
    for (Mor f = 0; f < n; ++f) {
      if (c.is_identity(f)) continue;
      mors.push_back(c.morphism_name(f) + ": " + c.object_name(c.source(f)) + " -> " +
                     c.object_name(c.target(f)));
    }
    for (Mor g = 0; g < n; ++g) {
      for (Mor f = 0; f < n; ++f) {
        if (c.is_identity(g) || c.is_identity(f) || c.target(f) != c.source(g)) continue;
        comps.push_back(composite(c.morphism_name(g), c.morphism_name(f)) + " = " +
                        c.morphism_name(c.composite(g, f)));
      }
    }
    os << "category " << cd.name << " {\n";
    section(os, "objects", c.objects());
    section(os, "morphisms", mors);
    section(os, "compose", comps);
    os << "}\n\n";
  }
  for (const auto& fd : ws.functors) {
    const Functor& f = fd.functor;
    std::vector<std::string> objs;
    std::vector<std::string> mors;
    for (Obj a = 0; a < static_cast<Obj>(f.dom->object_count()); ++a) {
      objs.push_back(f.dom->object_name(a) + " > " + f.cod->object_name(f(a)));
    }
    for (Mor m = 0; m < static_cast<Mor>(f.dom->morphism_count()); ++m) {
      if (f.dom->is_identity(m)) continue;
      mors.push_back(f.dom->morphism_name(m) + " > " + f.cod->morphism_name(f.on_morphism(m)));
    }
    os << "functor " << fd.name << " : " << fd.dom << " -> " << fd.cod << " {\n";
    section(os, "objects", objs);
    section(os, "morphisms", mors);
    os << "}\n\n";
  }
  for (const auto& nd : ws.nats) {
    const NaturalTransformation& s = nd.nat;
    std::vector<std::string> comps;
    for (Obj a = 0; a < static_cast<Obj>(s.source.dom->object_count()); ++a) {
      comps.push_back(s.source.dom->object_name(a) + " > " +
                      s.source.cod->morphism_name(s.components[a]));
    }
    os << "nat " << nd.name << " : " << to_string(nd.source) << " => " << to_string(nd.target)
       << " {\n";
    section(os, "components", comps);
    os << "}\n\n";
  }
  for (const auto& a : ws.ambients) {
    os << "ambient " << a.name << " = ";
    switch (a.kind) {
      case AmbientDef::Kind::kOb:
        os << "ob(" << a.base << ");\n";
        break;
      case AmbientDef::Kind::kOtilde:
        os << "otilde(" << a.base;
        if (a.cap) os << ", cap = " << *a.cap;
        os << ");\n";
        break;
      case AmbientDef::Kind::kExplicit:
        os << "explicit {\n";
        section(os, "categories", a.categories);
        if (a.all_functors) {
          os << "  functors: all;\n";
        } else {
          section(os, "functors", a.functors);
        }
        os << "}\n";
        break;
    }
  }
  if (!ws.ambients.empty()) os << "\n";
  for (const auto& s : ws.sieves) {
    os << "sieve " << s.name << " on " << s.apex << " in " << s.ambient << " {\n";
    for (const auto& sel : s.selects) {
      std::vector<std::string> funs;
      for (const auto& e : sel.functors) funs.push_back(to_string(e));
      os << "  select " << sel.object << " {";
      if (!funs.empty()) os << " functors: " << join(funs) << ";";
      if (!sel.nats.empty()) os << " nats: " << join(sel.nats) << ";";
      os << " }\n";
    }
    os << "}\n\n";
  }
  for (const auto& c : ws.checks) {
    os << "check " << c.kind << "(" << join(c.args) << ");\n";
  }
  return os.str();
}

}  // namespace catsheaf::dsl
