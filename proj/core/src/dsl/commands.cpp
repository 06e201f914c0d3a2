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

#include "catsheaf/dsl/commands.hpp"

#include <algorithm>

#include "catsheaf/functor_category.hpp"
#include "catsheaf/yoneda.hpp"

namespace catsheaf::dsl {

namespace {

std::vector<std::string> args(std::initializer_list<std::string_view> xs) {
  return {xs.begin(), xs.end()};
}

void sort_unique(std::vector<int>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
}

}  // namespace

Session::Session(Workspace ws, std::size_t cap) : ws_(std::move(ws)), cap_(cap) {}

const AmbientDef& Session::ambient_def(std::string_view name) const {
  const AmbientDef* a = ws_.find_ambient(name);
  if (!a) throw Error(ErrorKind::kUnknownId, "unknown ambient '" + std::string(name) + "'");
  return *a;
}

CategoryPtr Session::category(std::string_view name) const {
  const CategoryDef* c = ws_.find_category(name);
  if (!c) throw Error(ErrorKind::kUnknownId, "unknown category '" + std::string(name) + "'");
  return c->category;
}

HomTablePtr Session::table(std::string_view ambient) {
  auto it = tables_.find(ambient);
  if (it != tables_.end()) return it->second;
  const AmbientDef& a = ambient_def(ambient);
  auto t = std::make_shared<const HomTable>(a.built, cap_);
  tables_.emplace(std::string(ambient), t);
  return t;
}

Obj Session::object(std::string_view ambient, std::string_view cat) const {
  const AmbientDef& a = ambient_def(ambient);
  category(cat);
  auto v = ws_.ambient_object(a, cat);
  if (!v) {
    throw Error(ErrorKind::kUnknownId,
                "'" + std::string(cat) + "' is not an object of ambient '" + a.name + "'");
  }
  return *v;
}

Sieve Session::sieve(std::string_view name) {
  const SieveDef* def = ws_.find_sieve(name);
  if (!def) throw Error(ErrorKind::kUnknownId, "unknown sieve '" + std::string(name) + "'");
  HomTablePtr t = table(def->ambient);
  const Obj u = object(def->ambient, def->apex);
  Sieve s = empty_sieve(t, u);
  for (const auto& sel : def->selects) {
    const Obj v = object(def->ambient, sel.object);
    const FunctorCategory& hom = t->hom(v, u);
    SubcategoryIndex& idx = s.selection[v];
    auto add_object = [&](const Functor& f) {
      auto a = hom.find(f);
      if (!a) throw Error(ErrorKind::kInvalidInput, "functor outside F(V, U) in sieve '" + def->name + "'");
      idx.objects.push_back(*a);
    };
    for (const auto& e : sel.functors) add_object(ws_.resolve(e));
    for (const auto& n : sel.nats) {
      const NatDef* nd = ws_.find_nat(n);
      if (!nd) throw Error(ErrorKind::kUnknownId, "unknown transformation '" + n + "'");
      auto m = hom.find(nd->nat);
      if (!m) throw Error(ErrorKind::kInvalidInput, "transformation outside F(V, U): '" + n + "'");
      idx.morphisms.push_back(*m);
      add_object(nd->nat.source);
      add_object(nd->nat.target);
    }
    sort_unique(idx.objects);
    for (Obj a : idx.objects) idx.morphisms.push_back(hom.carrier->identity(a));
    sort_unique(idx.morphisms);
  }
  return s;
}

ReportRecord Session::yoneda(std::string_view ambient, std::string_view u, std::string_view v) {
  HomTablePtr t = table(ambient);
  BijectionReport r = check_yoneda_pair(*t, object(ambient, u), object(ambient, v), cap_);
  return {"yoneda", args({ambient, u, v}), r.verdict, r};
}

ReportRecord Session::embedding(std::string_view ambient) {
  HomTablePtr t = table(ambient);
  ValidationReport r = check_embedding(*t, cap_);
  return {"embedding", args({ambient}), r.valid(), r};
}

ReportRecord Session::sieve_check(std::string_view name) {
  ValidationReport r = validate_sieve(sieve(name));
  return {"sieve", args({name}), r.valid(), r};
}

ReportRecord Session::enumerate_sieves(std::string_view ambient, std::string_view u) {
  HomTablePtr t = table(ambient);
  ListReport list;
  bool all_valid = true;
  for (const Sieve& s : catsheaf::enumerate_sieves(t, object(ambient, u), cap_)) {
    all_valid = all_valid && validate_sieve(s).valid();
    list.items.push_back(sieve_signature(s));
  }
  std::sort(list.items.begin(), list.items.end());
  return {"enumerate-sieves", args({ambient, u}), all_valid, list};
}

ReportRecord Session::decompose(std::string_view name) {
  const SieveDef* def = ws_.find_sieve(name);
  if (!def) throw Error(ErrorKind::kUnknownId, "unknown sieve '" + std::string(name) + "'");
  Sieve s = sieve(name);
  HomTablePtr t = s.table;
  DecompositionReport r;
  r.valid_sieve = validate_sieve(s).valid();
  if (!r.valid_sieve) {
    r.decomposed = false;
    r.round_trip = false;
    r.error = "not a sieve";
    return {"decompose", args({name}), false, r};
  }
  ObSieveData data;
  try {
    data = decompose_ob_sieve(s);
    r.round_trip = sieve_from_ob_data(t, s.apex, data) == s;
  } catch (const Error& e) {
    r.decomposed = false;
    r.round_trip = false;
    r.error = e.what();
    return {"decompose", args({name}), false, r};
  }
  const FiniteCategory& carrier = *t->ambient().carrier;
  for (Obj v : data.family) {
    const std::string& vn = carrier.object_name(v);
    r.family.push_back(vn);
    auto& names = r.monoids[vn];
    for (Mor m : data.monoids.at(v)) {
      names.push_back(nat_signature(t->hom(v, s.apex).decode_morphism(m)));
    }
  }
  CompatibilityReport c = compare_compatibility_directions(*t, s.apex, data);
  r.restriction_closed = c.restriction_closed;
  r.reverse_inclusion = c.reverse_inclusion;
  r.restriction_failures = c.restriction_failures;
  r.reverse_failures = c.reverse_failures;
  return {"decompose", args({name}), r.round_trip, r};
}

ReportRecord Session::enum_functors(std::string_view c, std::string_view d) {
  ListReport list;
  for (const auto& f : enumerate_functors(category(c), category(d), cap_)) {
    list.items.push_back(functor_signature(f));
  }
  return {"enum-fun", args({c, d}), true, list};
}

ReportRecord Session::enum_nats(std::string_view f, std::string_view g) {
  Functor a = ws_.resolve(parse_functor_expr(f));
  Functor b = ws_.resolve(parse_functor_expr(g));
  if (!same_category(a.dom, b.dom) || !same_category(a.cod, b.cod)) {
    throw Error(ErrorKind::kDomainMismatch, "functors are not parallel");
  }
  ListReport list;
  for (const auto& s : enumerate_nats(a, b, cap_)) list.items.push_back(nat_signature(s));
  return {"enum-nat", args({f, g}), true, list};
}

ReportRecord Session::funcat(std::string_view c, std::string_view d) {
  FunctorCategory fc = build_functor_category(category(c), category(d), cap_);
  FunctorCategoryReport r{fc.carrier->objects(), fc.carrier->morphisms()};
  bool ok = validate_category(*fc.carrier).valid();
  return {"funcat", args({c, d}), ok, r};
}

ReportRecord Session::run(const CheckDef& check) {
  const auto& a = check.args;
  if (check.kind == "yoneda") return yoneda(a.at(0), a.at(1), a.at(2));
  if (check.kind == "embedding") return embedding(a.at(0));
  if (check.kind == "sieve") return sieve_check(a.at(0));
  if (check.kind == "enumerate-sieves") return enumerate_sieves(a.at(0), a.at(1));
  if (check.kind == "decompose") return decompose(a.at(0));
  throw Error(ErrorKind::kInvalidInput, "unknown check '" + check.kind + "'");
}

std::vector<ReportRecord> Session::run_all() {
  std::vector<ReportRecord> out;
  for (const auto& c : ws_.checks) out.push_back(run(c));
  return out;
}

FunctorExpr parse_functor_expr(std::string_view text) {
  std::string s = trim(text);
  auto open = s.find('(');
  if (open == std::string::npos) {
    if (s.empty()) throw Error(ErrorKind::kInvalidInput, "empty functor expression");
    return {FunctorExpr::Kind::kNamed, {s}};
  }
  if (s.back() != ')') throw Error(ErrorKind::kInvalidInput, "malformed functor expression '" + s + "'");
  std::string head = trim(std::string_view(s).substr(0, open));
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t comma = inner.find(','); ; comma = inner.find(',', start)) {
    parts.push_back(trim(std::string_view(inner).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (head == "incl" && parts.size() == 2) return {FunctorExpr::Kind::kInclusion, parts};
  if (head == "id" && parts.size() == 1) return {FunctorExpr::Kind::kIdentity, parts};
  throw Error(ErrorKind::kInvalidInput, "malformed functor expression '" + s + "'");
}

ReportRecord diagnostics_record(const std::vector<Diagnostic>& diagnostics) {
  ValidationReport r;
  for (const auto& d : diagnostics) {
    r.add(d.code, {to_string(d.span), d.law}, d.message);
  }
  return {"validate", {}, r.valid(), r};
}

}  // namespace catsheaf::dsl
