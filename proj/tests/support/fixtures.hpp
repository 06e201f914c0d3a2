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

// Named fixture categories shared by the unit and acceptance suites.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "catsheaf/category.hpp"

namespace catsheaf::fixtures {

inline FiniteCategory empty() { return FiniteCategory{}; }

/// One object, one morphism.
inline FiniteCategory terminal() { return trivially_discrete({"t"}); }

inline FiniteCategory disc2() { return trivially_discrete({"a", "b"}); }

/// a --f--> b
inline FiniteCategory arrow() {
  return CategoryBuilder().object("a").object("b").morphism("f", "a", "b").build();
}

/// a --f--> b --g--> c with h = g.f
inline FiniteCategory walk3() {
  return CategoryBuilder()
      .object("a").object("b").object("c")
      .morphism("f", "a", "b")
      .morphism("g", "b", "c")
      .morphism("h", "a", "c")
      .compose("g", "f", "h")
      .build();
}

/// The group Z/2 on one object s0, with s.s = id_s0.
inline FiniteCategory z2() {
  return CategoryBuilder().object("s0").morphism("s", "s0", "s0").compose("s", "s", "id_s0").build();
}

/// The commutative square a -> b -> d, a -> c -> d with one diagonal a -> d.
inline FiniteCategory square() {
  return CategoryBuilder()
      .object("a").object("b").object("c").object("d")
      .morphism("ab", "a", "b")
      .morphism("ac", "a", "c")
      .morphism("bd", "b", "d")
      .morphism("cd", "c", "d")
      .morphism("ad", "a", "d")
      .build();
}

/// The symmetric group S3 on one object x. Elements are named by their
/// permutation of {0,1,2} in one-line notation: p012 is the identity.
inline FiniteCategory s3() {
  using Perm = std::array<int, 3>;
  const std::vector<Perm> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto name = [](const Perm& p) {
    return "p" + std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]);
  };
  CategoryBuilder b;
  b.object("x");
  for (const auto& p : perms) {
    if (p != Perm{0, 1, 2}) b.morphism(name(p), "x", "x");
  }
  auto label = [&](const Perm& p) { return p == Perm{0, 1, 2} ? std::string("id_x") : name(p); };
  for (const auto& g : perms) {
    for (const auto& f : perms) {
      if (g == Perm{0, 1, 2} || f == Perm{0, 1, 2}) continue;
      Perm gf{g[f[0]], g[f[1]], g[f[2]]};  // apply f first
      b.compose(name(g), name(f), label(gf));
    }
  }
  return b.build();
}

}  // namespace catsheaf::fixtures
