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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "catsheaf/dsl/report.hpp"
#include "catsheaf/dsl/workspace.hpp"
#include "catsheaf/sieve.hpp"

namespace catsheaf::dsl {

/// A parsed workspace plus the hom tables built for its ambients. All
/// methods throw Error on unknown names and CapExceeded past the cap.
class Session {
 public:
  explicit Session(Workspace ws, std::size_t cap = kDefaultCap);

  const Workspace& workspace() const { return ws_; }
  std::size_t cap() const { return cap_; }

  HomTablePtr table(std::string_view ambient);
  Obj object(std::string_view ambient, std::string_view category) const;

  /// The literal selection of a declared sieve: listed functors, listed
  /// transformations with their endpoints, and identities on every
  /// selected functor.
  Sieve sieve(std::string_view name);

  ReportRecord yoneda(std::string_view ambient, std::string_view u, std::string_view v);
  ReportRecord embedding(std::string_view ambient);
  ReportRecord sieve_check(std::string_view name);
  ReportRecord enumerate_sieves(std::string_view ambient, std::string_view u);
  ReportRecord decompose(std::string_view name);

  ReportRecord enum_functors(std::string_view c, std::string_view d);
  ReportRecord enum_nats(std::string_view f, std::string_view g);
  ReportRecord funcat(std::string_view c, std::string_view d);

  ReportRecord run(const CheckDef& check);

  /// Every requested check, in request order.
  std::vector<ReportRecord> run_all();

 private:
  const AmbientDef& ambient_def(std::string_view name) const;
  CategoryPtr category(std::string_view name) const;

  Workspace ws_;
  std::size_t cap_;
  std::map<std::string, HomTablePtr, std::less<>> tables_;
};

/// Reads `NAME`, `incl(V, U)` or `id(C)`. Throws Error(kInvalidInput).
FunctorExpr parse_functor_expr(std::string_view text);

/// A failed `validate` record listing each diagnostic as a violation with
/// its code as the law and its location as the first identifier.
ReportRecord diagnostics_record(const std::vector<Diagnostic>& diagnostics);

}  // namespace catsheaf::dsl
