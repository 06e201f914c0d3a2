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

#include <set>

#include "catsheaf/functor.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace catsheaf {
namespace {

CategoryPtr ptr(FiniteCategory c) { return share(std::move(c)); }

TEST(Functor, MakeFunctorDerivesIdentities) {
  auto a = ptr(fixtures::arrow());
  auto w = ptr(fixtures::walk3());
  Functor f = make_functor(a, w, {{"a", "a"}, {"b", "c"}}, {{"f", "h"}});
  EXPECT_TRUE(validate_functor(f).valid());
  EXPECT_EQ(f.on_morphism(a->morphism("id_b")), w->morphism("id_c"));
  EXPECT_EQ(functor_signature(f), "F[a>a,b>c|f>h]");
}

TEST(Functor, ValidationReportsBrokenLaws) {
  auto a = ptr(fixtures::arrow());
  Functor f = make_functor(a, a, {{"a", "b"}, {"b", "a"}}, {{"f", "f"}});
  ValidationReport r = validate_functor(f);
  EXPECT_FALSE(r.valid());
  EXPECT_TRUE(r.has_law("functor.source"));

  auto z = ptr(fixtures::z2());
  auto s3 = ptr(fixtures::s3());
  Functor g = make_functor(z, s3, {{"s0", "x"}}, {{"s", "p120"}});  // order 3
  EXPECT_TRUE(validate_functor(g).has_law("functor.composition"));
}

TEST(Functor, CompositionAndIdentity) {
  auto a = ptr(fixtures::arrow());
  auto w = ptr(fixtures::walk3());
  Functor up = make_functor(a, w, {{"a", "b"}, {"b", "c"}}, {{"f", "g"}});
  Functor id = identity_functor(w);
  EXPECT_EQ(compose_functors(id, up), up);
  EXPECT_EQ(compose_functors(up, identity_functor(a)), up);
  auto t = ptr(fixtures::terminal());
  Functor bang = make_functor(w, t, {{"a", "t"}, {"b", "t"}, {"c", "t"}},
                              {{"f", "id_t"}, {"g", "id_t"}, {"h", "id_t"}});
  Functor c = compose_functors(bang, up);
  EXPECT_TRUE(validate_functor(c).valid());
  EXPECT_THROW(compose_functors(up, bang), Error);
}

TEST(Functor, InclusionOfSubcategory) {
  auto a = ptr(fixtures::arrow());
  auto d = ptr(fixtures::disc2());
  Functor i = inclusion_functor(d, a);
  EXPECT_TRUE(validate_functor(i).valid());
  EXPECT_EQ(i.object_map, (std::vector<Obj>{0, 1}));
  EXPECT_THROW(inclusion_functor(a, d), Error);
}

// Hand counts, each confirmed by oracle::functor_count():
//   Z2 -> Z2: 2 endomorphisms of Z/2.      Arrow -> Arrow: 3 monotone maps.
//   Disc2 -> Arrow: 4 object maps.          Walk3 -> Arrow: 4 monotone maps.
//   S3 -> Z2: trivial and sign.             Z2 -> S3: identity and 3 transpositions.
//   S3 -> S3: 1 trivial + 3 via sign + 6 automorphisms.
//   Square -> Arrow: 6 up-sets of the square.  Arrow -> Square: 4 + 5 pairs x <= y.
TEST(Functor, EnumerationMatchesOracle) {
  struct Case {
    FiniteCategory c;
    FiniteCategory d;
    std::size_t expected;
  };
  const std::vector<Case> cases = {
      {fixtures::z2(), fixtures::z2(), 2},         {fixtures::arrow(), fixtures::arrow(), 3},
      {fixtures::disc2(), fixtures::arrow(), 4},   {fixtures::walk3(), fixtures::arrow(), 4},
      {fixtures::s3(), fixtures::z2(), 2},         {fixtures::z2(), fixtures::s3(), 4},
      {fixtures::s3(), fixtures::s3(), 10},        {fixtures::square(), fixtures::arrow(), 6},
      {fixtures::arrow(), fixtures::square(), 9},  {fixtures::empty(), fixtures::z2(), 1},
      {fixtures::z2(), fixtures::empty(), 0},      {fixtures::walk3(), fixtures::walk3(), 10},
  };
  for (const auto& [c, d, expected] : cases) {
    auto fs = enumerate_functors(ptr(c), ptr(d), kDefaultCap);
    EXPECT_EQ(fs.size(), oracle::functor_count(c, d));
    EXPECT_EQ(fs.size(), expected);
    std::set<std::string> names;
    for (const auto& f : fs) {
      EXPECT_TRUE(validate_functor(f).valid());
      names.insert(functor_signature(f));
    }
    EXPECT_EQ(names.size(), fs.size());
    for (std::size_t i = 1; i < fs.size(); ++i) {
      EXPECT_TRUE(std::tie(fs[i - 1].object_map, fs[i - 1].morphism_map) <
                  std::tie(fs[i].object_map, fs[i].morphism_map));
    }
  }
}

TEST(Functor, EnumerationCap) {
  EXPECT_THROW(enumerate_functors(ptr(fixtures::s3()), ptr(fixtures::s3()), 3), CapExceeded);
}

TEST(Nat, IdentityIsNatural) {
  auto s3 = ptr(fixtures::s3());
  Functor id = identity_functor(s3);
  NaturalTransformation e = identity_nat(id);
  EXPECT_TRUE(validate_nat(e).valid());
  EXPECT_EQ(nat_signature(e), "N[F[x>x|p021>p021,p102>p102,p120>p120,p201>p201,p210>p210];"
                              "F[x>x|p021>p021,p102>p102,p120>p120,p201>p201,p210>p210];x>id_x]");
}

TEST(Nat, NaturalityFailureNamesTheMorphism) {
  auto s3 = ptr(fixtures::s3());
  Functor id = identity_functor(s3);
  NaturalTransformation bad{id, id, {s3->morphism("p021")}};
  ValidationReport r = validate_nat(bad);
  ASSERT_FALSE(r.valid());
  EXPECT_TRUE(r.has_law("nat.naturality"));
}

TEST(Nat, NonParallelFunctorsThrow) {
  auto a = ptr(fixtures::arrow());
  auto w = ptr(fixtures::walk3());
  Functor f = make_functor(a, w, {{"a", "a"}, {"b", "b"}}, {{"f", "f"}});
  Functor g = identity_functor(a);
  EXPECT_THROW(validate_nat({f, g, {0, 0}}), Error);
}

TEST(Nat, EnumerationMatchesOracle) {
  std::size_t pairs = 0;
  for (const auto& [c, d] : std::vector<std::pair<FiniteCategory, FiniteCategory>>{
           {fixtures::arrow(), fixtures::walk3()},
           {fixtures::z2(), fixtures::s3()},
           {fixtures::disc2(), fixtures::square()},
           {fixtures::walk3(), fixtures::square()}}) {
    auto fs = enumerate_functors(ptr(c), ptr(d), kDefaultCap);
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        auto ns = enumerate_nats(f, g, kDefaultCap);
        EXPECT_EQ(ns.size(), oracle::nat_count(f, g));
        for (const auto& n : ns) EXPECT_TRUE(validate_nat(n).valid());
        ++pairs;
      }
    }
  }
  EXPECT_GT(pairs, 100u);
}

TEST(Nat, VerticalComposition) {
  auto z = ptr(fixtures::z2());
  Functor id = identity_functor(z);
  NaturalTransformation s{id, id, {z->morphism("s")}};
  NaturalTransformation ss = vcompose_nats(s, s);
  EXPECT_EQ(ss, identity_nat(id));
  EXPECT_EQ(vcompose_nats(identity_nat(id), s), s);
}

// Z2 with the trivial subcategory {s0 | id_s0} and its inclusion i.
TEST(Nat, WhiskeringByInclusionKeepsComponent) {
  auto z = ptr(fixtures::z2());
  auto triv = ptr(trivially_discrete({"s0"}));
  Functor i = inclusion_functor(triv, z);
  Functor id = identity_functor(z);
  NaturalTransformation s{id, id, {z->morphism("s")}};
  NaturalTransformation w = whisker_right(s, i);
  EXPECT_EQ(w.source, i);
  EXPECT_EQ(w.target, i);
  EXPECT_EQ(w.components, std::vector<Mor>{z->morphism("s")});
  EXPECT_TRUE(validate_nat(w).valid());
}

// Endomorphism monoids of identity functors against the centre oracle.
TEST(Nat, EndoMonoidOfIdentityIsTheCentre) {
  for (const auto& [c, order] : std::vector<std::pair<FiniteCategory, std::size_t>>{
           {fixtures::z2(), 2}, {fixtures::s3(), 1}, {fixtures::terminal(), 1}}) {
    NatMonoid m = endo_nat_monoid(identity_functor(ptr(c)));
    EXPECT_EQ(m.elements.size(), oracle::center_size(c));
    EXPECT_EQ(m.elements.size(), order);
    EXPECT_EQ(m.elements[m.unit], identity_nat(identity_functor(ptr(c))));
    for (std::size_t x = 0; x < m.elements.size(); ++x) {
      EXPECT_EQ(m.table[m.unit][x], x);
      EXPECT_EQ(m.table[x][m.unit], x);
      for (std::size_t y = 0; y < m.elements.size(); ++y) {
        EXPECT_EQ(m.elements[m.table[x][y]], vcompose_nats(m.elements[x], m.elements[y]));
      }
    }
  }
}

TEST(Nat, EndoMonoidOfTrivialInclusionIsTheWholeGroup) {
  auto s3 = ptr(fixtures::s3());
  auto triv = ptr(trivially_discrete({"x"}));
  EXPECT_EQ(endo_nat_monoid(inclusion_functor(triv, s3)).elements.size(), 6u);
}

}  // namespace
}  // namespace catsheaf
