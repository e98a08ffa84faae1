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
#include "oracle.hpp"

namespace evs {
namespace {

using testing::expected;

Rational q(long n, long d = 1) { return makeRational(n, d); }
Element cone(long r, std::vector<Scalar> a) { return ConeElem{q(r), std::move(a)}; }

TEST(HalfLineTest, ScaleActsThroughModulus) {
  const EvsDescriptor e = halfLine();
  EXPECT_EQ(toString(e.scale(Scalar(-1), q(3))), expected("halfline.scale(-1,3)"));
  EXPECT_EQ(toString(e.scale(Scalar(q(3, 5), q(4, 5)), q(2))),
            expected("halfline.scale((3+4i)/5,2)"));
}

TEST(HalfLineTest, EqualModulusEqualAction) {
  const EvsDescriptor e = halfLine();
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const Scalar l = e.randomScalar(rng, q(3));
    const Element x = e.sampleOne(rng);
    EXPECT_EQ(e.scale(l, x), e.scale(l.conj(), x));
    EXPECT_EQ(e.scale(l, x), e.scale(-l, x));
    EXPECT_EQ(e.scale(l, x), e.scale(Scalar(modulusOf(l)), x));
  }
}

TEST(ConeTest, Operations) {
  const EvsDescriptor e = coneProduct(1);
  EXPECT_EQ(toString(e.scale(Scalar(-2), cone(1, {Scalar(1)}))), expected("cone.scale(-2,(1,(1)))"));
  const Element x = cone(1, {Scalar(3)});
  const Element x2 = e.add(x, x);
  EXPECT_EQ(toString(e.primitiveWitness(x2)), expected("cone.P(2x) at x=(1,(3))"));
  const auto ps = e.exactPrimitives(cone(2, {Scalar(5)}));
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(toString(ps[0]), "(0,(5))");
  EXPECT_EQ(expected("cone.primitives((2,(a)))"), "(0,(a))");
}

TEST(ConeTest, RadialPartFactorsThroughModulus) {
  const EvsDescriptor e = coneProduct(2);
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const Scalar l = e.randomScalar(rng, q(2));
    const ConeElem c = e.sampleOne(rng).as<ConeElem>();
    const ConeElem s = e.scale(l, c).as<ConeElem>();
    EXPECT_EQ(s.r, modulusOf(l) * c.r);
    EXPECT_EQ(s.a[0], l * c.a[0]);
  }
}

TEST(ConeTest, OrderNeedsEqualVectorPart) {
  const EvsDescriptor e = coneProduct(1);
  EXPECT_TRUE(e.leq(cone(1, {Scalar(2)}), cone(3, {Scalar(2)})));
  EXPECT_FALSE(e.leq(cone(1, {Scalar(2)}), cone(3, {Scalar(1)})));
}

TEST(TwistedTest, Operations) {
  const EvsDescriptor e = twistedProduct(1);
  EXPECT_EQ(toString(e.scale(Scalar(0, 1), cone(2, {Scalar(1)}))), expected("twisted.scale(i,(2,(1)))"));
  const Element x = cone(2, {Scalar(1)});
  EXPECT_EQ(toString(e.add(x, e.scale(Scalar(-1), x))), expected("twisted.x+(-1)x at (2,(1))"));
  EXPECT_EQ(e.scale(Scalar(0), x), e.zero);
}

TEST(DictTest, Operations) {
  const EvsDescriptor e = dictPlane();
  const Element x = DictElem{1, 1};
  EXPECT_EQ(toString(e.add(x, e.scale(Scalar(-1), x))), expected("dict.x+(-1)x at (1,1)"));
  EXPECT_TRUE(e.leq(DictElem{1, 7}, DictElem{2, 0}));
  EXPECT_TRUE(e.leq(DictElem{1, 0}, DictElem{1, 7}));
  EXPECT_FALSE(e.leq(DictElem{1, 7}, DictElem{1, 0}));
}

TEST(LatticeTest, AddIsIdempotentAndOnlyZeroIsPrimitive) {
  const EvsDescriptor e = subspaceLattice();
  for (const auto& y : e.sample(5, 300)) {
    EXPECT_EQ(e.add(y, y), y);
    const Element neg = e.add(y, e.scale(Scalar(-1), y));
    EXPECT_EQ(neg, y);
    EXPECT_EQ(neg == e.zero, y.as<Subspace>().dim() == 0);
  }
}

TEST(LatticeTest, CanonicalFormsAreUnique) {
  const Subspace a = Subspace::span(2, {{q(2), q(4)}});
  const Subspace b = Subspace::span(2, {{q(-1, 3), q(-2, 3)}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(toString(a), toString(b));
  EXPECT_EQ(Subspace::join(a, Subspace::span(2, {{q(0), q(1)}})), Subspace::full(2));
  EXPECT_NE(a, Subspace::span(2, {{q(1), q(3)}}));
  // Sampled pairs: equal iff same echelon basis.
  const EvsDescriptor e = subspaceLattice();
  const auto xs = e.sample(8, 80);
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      const Subspace& s = x.as<Subspace>();
      const Subspace& t = y.as<Subspace>();
      EXPECT_EQ(s == t, s.isSubsetOf(t) && t.isSubsetOf(s));
    }
  }
}

TEST(LatticeTest, RowReduction) {
  const RationalMatrix m = reducedRowEchelon({{q(2), q(4)}, {q(1), q(3)}});
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0], (RationalVector{q(1), q(0)}));
  EXPECT_EQ(m[1], (RationalVector{q(0), q(1)}));
  EXPECT_EQ(rank({{q(1), q(2)}, {q(2), q(4)}}), 1u);
}

TEST(InstanceParseTest, Specs) {
  EXPECT_EQ(makeInstance("cone:3").name, "cone:3");
  EXPECT_EQ(makeInstance("twisted:1").name, "twisted:1");
  EXPECT_EQ(makeInstance("product:(halfline,dict2)").name, "product:(halfline,dict2)");
  EXPECT_EQ(makeInstance("product:(cone:2,product:(halfline,lattice2))").name,
            "product:(cone:2,product:(halfline,lattice2))");
  for (const char* bad : {"", "cone:0", "cone:x", "line", "product:(halfline,nope)"}) {
    EXPECT_THROW(makeInstance(bad), std::invalid_argument) << bad;
  }
}

TEST(InstanceParseTest, SplitTopLevel) {
  EXPECT_EQ(splitTopLevel("a,b(c,d),e", ','), (std::vector<std::string>{"a", "b(c,d)", "e"}));
}

TEST(FaultTest, DocumentedMutations) {
  const EvsDescriptor h = halfLineWithoutModulus();
  EXPECT_EQ(toString(h.scale(Scalar(-1), q(3))), "-3");
  const EvsDescriptor t = twistedWithoutZeroCase(1);
  EXPECT_EQ(toString(t.scale(Scalar(0), cone(2, {Scalar(1)}))), "(2,(0))");
  const EvsDescriptor l = latticeWithoutCanonicalSpan();
  const Element y = Subspace::span(2, {{q(1), q(1)}});
  EXPECT_NE(l.add(y, y), y);
  EXPECT_TRUE(h.exactSets.empty() && t.exactSets.empty() && l.exactSets.empty());
}

}  // namespace
}  // namespace evs
