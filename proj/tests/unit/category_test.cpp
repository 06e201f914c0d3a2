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

#include <gtest/gtest.h>

#include <algorithm>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace catsheaf {
namespace {

struct Named {
  const char* name;
  FiniteCategory cat;
};

std::vector<Named> all_fixtures() {
  return {{"empty", fixtures::empty()}, {"terminal", fixtures::terminal()},
          {"disc2", fixtures::disc2()}, {"arrow", fixtures::arrow()},
          {"walk3", fixtures::walk3()}, {"z2", fixtures::z2()},
          {"square", fixtures::square()}, {"s3", fixtures::s3()}};
}

TEST(Category, FixturesSatisfyAxioms) {
  for (const auto& [name, c] : all_fixtures()) {
    EXPECT_TRUE(oracle::is_category(c)) << name;
    EXPECT_TRUE(validate_category(c).valid()) << name;
  }
}

TEST(Category, IdentitiesAndCompositesAreAutoFilled) {
  FiniteCategory a = fixtures::arrow();
  EXPECT_EQ(a.morphisms(), (std::vector<std::string>{"f", "id_a", "id_b"}));
  EXPECT_EQ(a.compose("f", "id_a"), "f");
  EXPECT_EQ(a.compose("id_b", "f"), "f");
  FiniteCategory sq = fixtures::square();
  EXPECT_EQ(sq.compose("bd", "ab"), "ad");
  EXPECT_EQ(sq.compose("cd", "ac"), "ad");
}

TEST(Category, MissingCompositeIsRejected) {
  CategoryBuilder b;
  b.object("a").object("c").object("b");
  b.morphism("f", "a", "b").morphism("g", "b", "c");
  b.morphism("h", "a", "c").morphism("k", "a", "c");
  try {
    b.build();
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
    EXPECT_NE(std::string(e.what()).find("composition not total"), std::string::npos);
  }
  std::vector<std::pair<std::string, std::string>> missing;
  b.build(&missing);
  EXPECT_EQ(missing, (std::vector<std::pair<std::string, std::string>>{{"g", "f"}}));
}

TEST(Category, ComposeChecksTypes) {
  FiniteCategory w = fixtures::walk3();
  EXPECT_EQ(w.compose("g", "f"), "h");
  EXPECT_THROW(w.compose("f", "g"), Error);
  EXPECT_THROW(w.compose("f", "nope"), Error);
}

TEST(Category, HomSets) {
  FiniteCategory w = fixtures::walk3();
  EXPECT_EQ(w.hom(w.object("a"), w.object("c")), std::vector<Mor>{w.morphism("h")});
  EXPECT_TRUE(w.hom(w.object("c"), w.object("a")).empty());
  EXPECT_EQ(fixtures::s3().hom(0, 0).size(), 6u);
}

TEST(Category, DuplicateNamesAreRejected) {
  EXPECT_THROW(CategoryBuilder().object("a").object("a").build(), Error);
  EXPECT_THROW(CategoryBuilder().object("a").morphism("id_a", "a", "a").build(), Error);
}

TEST(Category, OppositeIsAnInvolution) {
  for (const auto& [name, c] : all_fixtures()) {
    FiniteCategory op = opposite(c);
    EXPECT_TRUE(validate_category(op).valid()) << name;
    EXPECT_EQ(opposite(op), c) << name;
  }
  FiniteCategory op = opposite(fixtures::arrow());
  EXPECT_EQ(op.source(op.morphism("f")), op.object("b"));
}

// Frozen from oracle::subcategories().
TEST(Category, SubcategoryCountsMatchOracle) {
  const std::map<std::string, std::size_t> expected = {
      {"empty", 1}, {"terminal", 2}, {"disc2", 4}, {"arrow", 5},
      {"walk3", 17}, {"z2", 3},      {"square", 63}, {"s3", 7}};
  for (const auto& [name, c] : all_fixtures()) {
    const auto subs = enumerate_subcategory_indices(c, kDefaultCap);
    EXPECT_EQ(subs.size(), oracle::subcategories(c).size()) << name;
    EXPECT_EQ(subs.size(), expected.at(name)) << name;
  }
}

TEST(Category, SubcategoriesAreShortlexOrderedAndValid) {
  FiniteCategory w = fixtures::walk3();
  const auto idx = enumerate_subcategory_indices(w, kDefaultCap);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    const auto& x = idx[i - 1];
    const auto& y = idx[i];
    const bool ordered =
        x.objects.size() < y.objects.size() ||
        (x.objects.size() == y.objects.size() &&
         (x.objects < y.objects ||
          (x.objects == y.objects &&
           (x.morphisms.size() < y.morphisms.size() ||
            (x.morphisms.size() == y.morphisms.size() && x.morphisms < y.morphisms)))));
    EXPECT_TRUE(ordered) << i;
  }
  for (const auto& sub : enumerate_subcategories(w, kDefaultCap)) {
    EXPECT_TRUE(is_subcategory(sub, w));
    EXPECT_TRUE(validate_category(sub).valid());
  }
}

TEST(Category, SubcategoryCapIsEnforced) {
  EXPECT_THROW(enumerate_subcategory_indices(fixtures::square(), 10), CapExceeded);
}

TEST(Category, SubcategoryRelation) {
  FiniteCategory arrow = fixtures::arrow();
  EXPECT_TRUE(is_subcategory(fixtures::disc2(), arrow));
  EXPECT_TRUE(is_subcategory(fixtures::empty(), arrow));
  EXPECT_FALSE(is_subcategory(arrow, fixtures::disc2()));
  EXPECT_FALSE(is_subcategory(trivially_discrete({"a", "c"}), arrow));
  EXPECT_EQ(subcategory_signature(arrow), "{a,b|f,id_a,id_b}");
}

TEST(Category, SignatureDistinguishesSubgroupsOfS3) {
  std::set<std::string> names;
  for (const auto& sub : enumerate_subcategories(fixtures::s3(), kDefaultCap)) {
    names.insert(subcategory_signature(sub));
  }
  EXPECT_EQ(names.size(), 7u);
  EXPECT_TRUE(names.count("{x|id_x,p120,p201}"));
}

// Every single-entry corruption. Holes and ill-typed entries always break
// an axiom; a same-typed substitution may land on another category (in Z2,
// s.s = s is the two-element idempotent monoid), so the validator must agree
// with the oracle on each mutant.
TEST(Category, MutationsAreDetected) {
  std::size_t mutants = 0;
  std::size_t broken = 0;
  for (const auto& [name, c] : all_fixtures()) {
    const auto n = static_cast<Mor>(c.morphism_count());
    auto check = [&](FiniteCategory m, bool must_break, const std::string& what) {
      ++mutants;
      const bool valid = validate_category(m).valid();
      EXPECT_EQ(valid, oracle::is_category(m)) << name << ": " << what;
      if (must_break) {
        EXPECT_FALSE(valid) << name << ": " << what;
      }
      if (!valid) ++broken;
    };
    for (Mor g = 0; g < n; ++g) {
      for (Mor f = 0; f < n; ++f) {
        const Mor original = c.composite(g, f);
        const bool composable = c.target(f) == c.source(g);
        for (Mor r = kNone; r < n; ++r) {
          if (r == original) continue;
          CategoryEditor e(c);
          e.set_composite(g, f, r);
          const bool typed = r != kNone && composable && c.source(r) == c.source(f) &&
                             c.target(r) == c.target(g);
          check(std::move(e).release(), !typed,
                c.morphism_name(g) + "." + c.morphism_name(f) + " -> " + std::to_string(r));
        }
      }
    }
    for (Obj a = 0; a < static_cast<Obj>(c.object_count()); ++a) {
      for (Mor f = 0; f < n; ++f) {
        if (f == c.identity(a)) continue;
        CategoryEditor e(c);
        e.set_identity(a, f);
        check(std::move(e).release(), true, "identity of " + c.object_name(a));
      }
    }
    for (Mor f = 0; f < n; ++f) {
      for (Obj a = 0; a < static_cast<Obj>(c.object_count()); ++a) {
        if (a == c.target(f)) continue;
        CategoryEditor e(c);
        e.set_target(f, a);
        check(std::move(e).release(), true, "target of " + c.morphism_name(f));
      }
    }
  }
  EXPECT_GT(mutants, 1000u);
  EXPECT_GT(broken, 0u);
}

TEST(Category, ValidationNamesTheLaw) {
  FiniteCategory w = fixtures::walk3();
  CategoryEditor e(w);
  e.set_composite(w.morphism("g"), w.morphism("f"), kNone);
  ValidationReport r = validate_category(std::move(e).release());
  ASSERT_FALSE(r.valid());
  EXPECT_TRUE(r.has_law("composition.total"));
  EXPECT_EQ(r.violations.front().ids, (std::vector<std::string>{"g", "f"}));
}

}  // namespace
}  // namespace catsheaf
