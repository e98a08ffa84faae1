// Copyright 2026 The evs-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "evs/instances.hpp"
#include "evs/set_laws.hpp"
#include "oracle.hpp"

namespace evs {
namespace {

using testing::expected;

Rational q(long n, long d = 1) { return makeRational(n, d); }

class Laws : public ::testing::TestWithParam<const char*> {};

TEST_P(Laws, ClosureLawsHold) {
  const EvsDescriptor e = makeInstance(GetParam());
  OutcomeMap m = checkAbsorbingClosureLaws(e, 300, 42);
  m.merge(checkBalancedClosureLaws(e, 300, 42));
  EXPECT_EQ(m.size(), 10u);
  for (const auto& [id, o] : m) {
    EXPECT_FALSE(o.refuted()) << id << ": " << (o.witness ? render(*o.witness) : "");
  }
}

INSTANTIATE_TEST_SUITE_P(Exact, Laws, ::testing::Values("halfline", "dict2", "lattice2", "cone:2"),
                         [](const auto& info) {
                           std::string s;
                           for (char c : std::string(info.param)) s += std::isalnum(c) ? c : '_';
                           return s;
                         });

TEST(LawsTest, NoExactSetsMeansNoVerdict) {
  for (const auto& [id, o] : checkAbsorbingClosureLaws(twistedProduct(2), 100, 42)) {
    EXPECT_EQ(o.verdict, Verdict::Unfalsified) << id;
  }
}

TEST(SeparatorTest, HalfLine) {
  const EvsDescriptor e = halfLine();
  const auto u = radialSeparator(e, q(1), q(2));
  ASSERT_TRUE(u);
  EXPECT_EQ(render(*u), expected("halfline separator (1,2)"));
  EXPECT_TRUE(isAbsorbing(*u, e).proven());
  EXPECT_TRUE(contains(*u, q(1)));
  EXPECT_FALSE(contains(*u, q(2)));
}

TEST(SeparatorTest, Dictionary) {
  const EvsDescriptor e = dictPlane();
  const DictElem x{q(3), q(1)}, y{q(2), q(5)};
  const auto u = radialSeparator(e, x, y);
  ASSERT_TRUE(u);
  EXPECT_EQ(render(*u), expected("dict separator ((3,1),(2,5))"));
  EXPECT_TRUE(isAbsorbing(*u, e).proven());
  EXPECT_NE(contains(*u, x), contains(*u, y));
}

TEST(SeparatorTest, DictionaryEqualFirstCoordinate) {
  const EvsDescriptor e = dictPlane();
  const DictElem x{q(2), q(1)}, y{q(2), q(3)};
  const auto u = radialSeparator(e, x, y);
  ASSERT_TRUE(u);
  EXPECT_TRUE(isAbsorbing(*u, e).proven());
  EXPECT_NE(contains(*u, x), contains(*u, y));
}

TEST(RadialTest, Verdicts) {
  EXPECT_TRUE(checkRadial(halfLine(), 300, 42).proven());
  EXPECT_TRUE(checkRadial(dictPlane(), 300, 42).proven());
  EXPECT_TRUE(checkRadial(coneProduct(2), 300, 42).proven());
  const CheckOutcome l = checkRadial(subspaceLattice(), 300, 42);
  ASSERT_TRUE(l.refuted());
  ASSERT_EQ(l.witness->elements.size(), 2u);
  EXPECT_NE(l.witness->elements[0], l.witness->elements[1]);
  EXPECT_EQ(checkRadial(twistedProduct(2), 300, 42).verdict, Verdict::Unfalsified);
}

TEST(RadialTest, RandomPairsSeparate) {
  for (const char* name : {"halfline", "dict2", "cone:2", "product:(halfline,dict2)"}) {
    const EvsDescriptor e = makeInstance(name);
    const auto xs = e.sample(11, 60);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      if (xs[i] == xs[i + 1]) continue;
      const auto u = radialSeparator(e, xs[i], xs[i + 1]);
      ASSERT_TRUE(u) << name;
      EXPECT_NE(contains(*u, xs[i]), contains(*u, xs[i + 1])) << name << " " << toString(xs[i]);
      EXPECT_FALSE(isAbsorbing(*u, e).refuted()) << name << " " << render(*u);
    }
  }
}

TEST(RadialTest, ProductAndHereditary) {
  EXPECT_FALSE(checkRadialProductAndHereditary({halfLine(), dictPlane()}, {}, 100, 42).refuted());
  EXPECT_FALSE(checkRadialProductAndHereditary({}, {coneAxisSubevs()}, 100, 42).refuted());
}

TEST(RadialTest, ConeAxisIsSubevs) {
  const SubevsSpec s = coneAxisSubevs();
  EXPECT_FALSE(checkSubevs(s.ambient, s.member, 500, 42, s.sample).refuted());
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Element x = s.sample(rng);
    EXPECT_TRUE(s.member(x));
  }
}

TEST(TransportTest, DoublingMovesSets) {
  const ShippedMorphism d = shippedMorphism("doubling");
  EXPECT_EQ(render(transportSet(d, IntervalUnion{Interval::closedOpen(q(0), q(1))})),
            expected("doubling [0,1)"));
}

TEST(TransportTest, VerdictsSurvive) {
  for (const char* name : {"doubling", "identity", "embed"}) {
    const ShippedMorphism phi = shippedMorphism(name);
    EXPECT_FALSE(checkAbsorbingTransport(phi, 200, 42).refuted()) << name;
    EXPECT_FALSE(checkRadialTransport(phi, 200, 42).refuted()) << name;
  }
}

TEST(TransportTest, EmbedKeepsAbsorbingVerdict) {
  const ShippedMorphism phi = shippedMorphism("embed");
  Rng rng = Rng::forCheck(42, "embed.sets");
  for (int i = 0; i < 200; ++i) {
    const IntervalUnion a = randomIntervalUnion(rng);
    const SetRep image = transportSet(phi, a);
    EXPECT_EQ(isAbsorbing(a, phi.source).verdict, absorbingInImage(phi, image).verdict) << toString(a);
  }
}

TEST(GeneratorTest, Deterministic) {
  Rng a(5), b(5);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(randomIntervalUnion(a), randomIntervalUnion(b));
}

}  // namespace
}  // namespace evs
