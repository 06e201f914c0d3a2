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

#include "catsheaf/functor_category.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace catsheaf {
namespace {

std::size_t oracle_morphisms(const FunctorCategory& fc) {
  std::size_t n = 0;
  for (const auto& f : fc.objects) {
    for (const auto& g : fc.objects) n += oracle::nat_count(f, g);
  }
  return n;
}

TEST(FunctorCategory, IsACategoryWithDecodedData) {
  for (const auto& [c, d] : std::vector<std::pair<FiniteCategory, FiniteCategory>>{
           {fixtures::arrow(), fixtures::arrow()},
           {fixtures::z2(), fixtures::z2()},
           {fixtures::disc2(), fixtures::walk3()},
           {fixtures::arrow(), fixtures::s3()}}) {
    FunctorCategory fc = build_functor_category(share(c), share(d), kDefaultCap);
    EXPECT_TRUE(validate_category(*fc.carrier).valid());
    EXPECT_TRUE(oracle::is_category(*fc.carrier));
    EXPECT_EQ(fc.objects.size(), oracle::functor_count(c, d));
    EXPECT_EQ(fc.morphisms.size(), oracle_morphisms(fc));
    for (Obj a = 0; a < static_cast<Obj>(fc.objects.size()); ++a) {
      EXPECT_EQ(fc.carrier->object_name(a), functor_signature(fc.decode(a)));
      EXPECT_EQ(fc.find(fc.decode(a)), a);
      EXPECT_EQ(fc.decode_morphism(fc.carrier->identity(a)), identity_nat(fc.decode(a)));
    }
    for (Mor m = 0; m < static_cast<Mor>(fc.morphisms.size()); ++m) {
      const NaturalTransformation& n = fc.decode_morphism(m);
      EXPECT_EQ(fc.carrier->morphism_name(m), nat_signature(n));
      EXPECT_EQ(fc.find(n), m);
      EXPECT_EQ(fc.decode(fc.carrier->source(m)), n.source);
      EXPECT_EQ(fc.decode(fc.carrier->target(m)), n.target);
    }
  }
}

// Fun(Z2, Z2) has the identity and the trivial functor. Nat(id, id) and
// Nat(triv, triv) each have two elements; no transformation runs between
// them since s != e.
TEST(FunctorCategory, Z2EndofunctorsHandCount) {
  FunctorCategory fc = build_functor_category(share(fixtures::z2()), share(fixtures::z2()),
                                              kDefaultCap);
  EXPECT_EQ(fc.objects.size(), 2u);
  EXPECT_EQ(fc.morphisms.size(), 4u);
}

TEST(FunctorCategory, CompositionIsVertical) {
  FunctorCategory fc = build_functor_category(share(fixtures::arrow()), share(fixtures::walk3()),
                                              kDefaultCap);
  const FiniteCategory& c = *fc.carrier;
  for (Mor g = 0; g < static_cast<Mor>(c.morphism_count()); ++g) {
    for (Mor f = 0; f < static_cast<Mor>(c.morphism_count()); ++f) {
      if (c.target(f) != c.source(g)) continue;
      EXPECT_EQ(fc.decode_morphism(c.composite(g, f)),
                vcompose_nats(fc.decode_morphism(g), fc.decode_morphism(f)));
    }
  }
}

TEST(FunctorCategory, HomInOb) {
  auto z2 = share(fixtures::z2());
  auto triv = share(trivially_discrete({"s0"}));
  FunctorCategory h = hom_in_ob(triv, z2, kDefaultCap);
  EXPECT_EQ(h.objects.size(), 1u);
  EXPECT_EQ(h.morphisms.size(), 2u);  // components e and s
  EXPECT_EQ(h.decode(0), inclusion_functor(triv, z2));

  FunctorCategory none = hom_in_ob(z2, triv, kDefaultCap);
  EXPECT_TRUE(none.objects.empty());
  EXPECT_TRUE(none.carrier->empty());

  auto e = share(fixtures::empty());
  FunctorCategory from_empty = hom_in_ob(e, z2, kDefaultCap);
  EXPECT_EQ(from_empty.objects.size(), 1u);
  EXPECT_EQ(from_empty.morphisms.size(), 1u);
}

}  // namespace
}  // namespace catsheaf
