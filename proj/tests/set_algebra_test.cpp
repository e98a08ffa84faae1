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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "evs/instances.hpp"
#include "evs/set_laws.hpp"
#include "evs/set_rep.hpp"
#include "oracle.hpp"

namespace evs {
namespace {

using testing::expected;

Rational q(long n, long d = 1) { return makeRational(n, d); }

IntervalUnion co(long a, long b) { return IntervalUnion{Interval::closedOpen(q(a), q(b))}; }
IntervalUnion cl(long a, long b) { return IntervalUnion{Interval::closed(q(a), q(b))}; }

TEST(IntervalUnionTest, Canonicalization) {
  EXPECT_EQ(toString(co(0, 1).unite(co(1, 2))), expected("[0,1) U [1,2)"));
  EXPECT_EQ(toString(co(0, 1).intersect(IntervalUnion{Interval::closed(q(0), q(1, 2))})),
            expected("[0,1) n [0,1/2]"));
  EXPECT_EQ(toString(IntervalUnion{Interval::open(q(1), q(1))}), "{}");
  EXPECT_EQ(toString(IntervalUnion{Interval::closed(q(0), q(1, 2)), Interval::open(q(1, 2), q(1))}),
            "[0,1)");
  EXPECT_EQ(toString(IntervalUnion{Interval::closedOpen(q(0), q(1, 2)),
                                   Interval::openClosed(q(3, 4), q(2))}),
            "[0,1/2) U (3/4,2]");
  EXPECT_EQ(co(0, 1).unite(co(1, 2)), co(0, 2));
  EXPECT_THROW(IntervalUnion{Interval::closedOpen(q(-1), q(0))}, std::invalid_argument);
}

TEST(IntervalUnionTest, Supremum) {
  const IntervalUnion u = cl(0, 5).unite(co(7, 9));
  EXPECT_EQ(toString(*u.components().back().hi), expected("[0,5] U [7,9) sup"));
  EXPECT_TRUE(u.bounded());
  EXPECT_FALSE(IntervalUnion::whole().bounded());
}

TEST(IntervalUnionTest, ScalingAndSums) {
  const IntervalUnion a = co(0, 1).unite(cl(2, 3));
  EXPECT_EQ(render(scaleSet(Scalar(-2), a)), expected("scaleSet(-2,[0,1) U [2,3])"));
  EXPECT_EQ(render(scaleSet(Scalar(-3), cl(0, 1))), expected("scaleSet(-3,[0,1])"));
  EXPECT_EQ(toString(minkowskiSum(co(0, 1), co(0, 1))), expected("[0,1)+[0,1)"));
  EXPECT_EQ(toString(minkowskiSum(cl(1, 2), cl(3, 4))), expected("[1,2]+[3,4]"));
  EXPECT_EQ(toString(minkowskiSum(co(0, 1), cl(2, 3))), expected("[0,1)+[2,3]"));
  EXPECT_EQ(toString(minkowskiSum(cl(0, 1), cl(2, 3))), expected("[0,1]+[2,3]"));
  EXPECT_EQ(toString(scaleBy(a, q(0))), "[0,0]");
}

TEST(IntervalUnionTest, UpAndDown) {
  EXPECT_EQ(toString(upSet(co(1, 2).unite(co(3, 4)))), expected("up([1,2) U [3,4))"));
  EXPECT_EQ(toString(downSet(co(1, 2))), expected("down([1,2))"));
}

TEST(IntervalUnionTest, ScalarScalingUsesModulus) {
  const SetRep a = co(1, 2);
  EXPECT_TRUE(sameSet(scaleSet(Scalar(q(3, 5), q(4, 5)), a), a));
  EXPECT_TRUE(sameSet(scaleSet(Scalar(0, 2), a), SetRep(co(2, 4))));
}

// Membership on a probe set that pins down any interval union: every
// endpoint, every midpoint between consecutive endpoints, and one point past
// the last.
std::vector<Rational> probes(const IntervalUnion& u) {
  std::set<Rational> pts{Rational(0)};
  for (const auto& c : u.components()) {
    pts.insert(c.lo);
    if (c.hi) pts.insert(*c.hi);
  }
  std::vector<Rational> v(pts.begin(), pts.end());
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
    out.push_back(i + 1 < v.size() ? Rational((v[i] + v[i + 1]) / 2) : Rational(v[i] + 1));
  }
  return out;
}

// On [0,inf) with the modulus action, balanced means closed downward.
bool bruteBalanced(const IntervalUnion& u) {
  bool left = false;
  for (const auto& p : probes(u)) {
    const bool in = u.contains(p);
    if (in && left) return false;
    if (!in) left = true;
  }
  return true;
}

// Absorbing means 0 is in and so is every point of some (0, d).
bool bruteAbsorbing(const IntervalUnion& u) {
  const auto p = probes(u);
  return u.contains(p[0]) && u.contains(p[1]);
}

TEST(DeciderOracleTest, ExactDecidersMatchBruteGrid) {
  const EvsDescriptor line = halfLine();
  Rng rng = Rng::forCheck(42, "oracle.grid");
  for (int i = 0; i < 1000; ++i) {
    const IntervalUnion u = randomIntervalUnion(rng);
    const CheckOutcome a = isAbsorbing(u, line);
    EXPECT_NE(a.verdict, Verdict::Unfalsified);
    EXPECT_EQ(a.proven(), bruteAbsorbing(u)) << toString(u);
    if (u.empty()) continue;
    const CheckOutcome b = isBalanced(u);
    EXPECT_NE(b.verdict, Verdict::Unfalsified);
    EXPECT_EQ(b.proven(), bruteBalanced(u)) << toString(u);
  }
}

TEST(DeciderOracleTest, RefutationsReplay) {
  const EvsDescriptor line = halfLine();
  Rng rng = Rng::forCheck(42, "oracle.replay");
  for (int i = 0; i < 1000; ++i) {
    const IntervalUnion u = randomIntervalUnion(rng);
    if (u.empty()) continue;
    const CheckOutcome b = isBalanced(u);
    if (b.refuted()) {
      ASSERT_TRUE(b.witness);
      const Rational& x = b.witness->elements.at(0).as<Rational>();
      const Scalar& alpha = b.witness->scalars.at(0);
      EXPECT_TRUE(u.contains(x)) << toString(u);
      EXPECT_TRUE(modulusLeq(alpha, q(1)));
      EXPECT_FALSE(u.contains(modulusOf(alpha) * x)) << toString(u);
    }
    const CheckOutcome a = isAbsorbing(u, line);
    if (a.refuted()) {
      ASSERT_TRUE(a.witness);
      if (!a.witness->scalars.empty()) {
        EXPECT_FALSE(u.contains(Rational(0)));
      } else {
        // Degenerate component at 0: nothing in (0, d) for any d.
        EXPECT_TRUE(u.contains(Rational(0)));
        EXPECT_TRUE(isZero(*u.components().front().hi)) << toString(u);
      }
    }
  }
}

TEST(DeciderOracleTest, ProvenSetsContainZero) {
  for (const char* name : {"halfline", "dict2", "lattice2", "cone:2"}) {
    const EvsDescriptor e = makeInstance(name);
    Rng rng = Rng::forCheck(7, name);
    for (int i = 0; i < 300; ++i) {
      const SetRep a = randomSet(e, rng);
      if (isAbsorbing(a, e).proven()) EXPECT_TRUE(contains(a, e.zero)) << render(a);
      if (!isEmpty(a) && isBalanced(a).proven()) EXPECT_TRUE(contains(a, e.zero)) << render(a);
    }
  }
}

TEST(DeciderOracleTest, SampledScalingNeverBreaksProvenBalanced) {
  const EvsDescriptor line = halfLine();
  Rng rng = Rng::forCheck(42, "oracle.sampled");
  for (int i = 0; i < 1000; ++i) {
    const IntervalUnion u = randomIntervalUnion(rng);
    if (u.empty() || !isBalanced(u).proven()) continue;
    for (const auto& x : representativePoints(u, i)) {
      for (const auto& s : sampleScalars(q(1), 8, rng, ScalarMode::PythagoreanOnly)) {
        EXPECT_TRUE(contains(u, line.scale(s, x))) << toString(u);
      }
    }
  }
}

TEST(BoxUnionTest, RenderAndDeciders) {
  const EvsDescriptor d = dictPlane();
  const BoxUnion b{Box{Interval::closedOpen(q(0), q(1)), Interval::closedOpen(q(0), q(1))}};
  EXPECT_EQ(toString(b), "[0,1)x[0,1)");
  EXPECT_TRUE(b.anchored());
  EXPECT_TRUE(isBalanced(b).proven());
  EXPECT_TRUE(isAbsorbing(b, d).proven());
  const BoxUnion off{Box{Interval::closed(q(1), q(2)), Interval::closed(q(0), q(1))}};
  EXPECT_TRUE(isBalanced(off).refuted());
  EXPECT_TRUE(isAbsorbing(off, d).refuted());
  // Holds theta but only touches it along the y axis.
  const BoxUnion slab{Box{Interval::point(q(0)), Interval::closed(q(0), q(1))}};
  const CheckOutcome o = isAbsorbing(slab, d);
  ASSERT_TRUE(o.refuted());
  const DictElem x = o.witness->elements[0].as<DictElem>();
  EXPECT_FALSE(slab.contains({x.x / 1000, x.y / 1000}));
}

TEST(BoxUnionTest, SetOperations) {
  const BoxUnion a{Box{Interval::closed(q(0), q(1)), Interval::closed(q(0), q(1))}};
  const BoxUnion b{Box{Interval::closed(q(1, 2), q(2)), Interval::closed(q(0), q(1))}};
  const BoxUnion u = a.unite(b), n = a.intersect(b);
  EXPECT_TRUE(u.contains({q(3, 2), q(1, 2)}));
  EXPECT_TRUE(n.contains({q(3, 4), q(1)}));
  EXPECT_FALSE(n.contains({q(1, 4), q(1)}));
  EXPECT_TRUE(a.isSubsetOf(u) && n.isSubsetOf(a) && n.isSubsetOf(b));
  EXPECT_TRUE(u.sameSet(BoxUnion{Box{Interval::closed(q(0), q(2)), Interval::closed(q(0), q(1))}}));
  EXPECT_TRUE(scaleBy(a, q(2)).sameSet(BoxUnion{Box{Interval::closed(q(0), q(2)), Interval::closed(q(0), q(2))}}));
}

TEST(BoxUnionTest, RandomBoxDecidersAgreeWithSampling) {
  const EvsDescriptor d = dictPlane();
  Rng rng = Rng::forCheck(42, "box.sampling");
  for (int i = 0; i < 300; ++i) {
    const BoxUnion b = randomBoxUnion(rng);
    if (b.empty() || !isBalanced(b).proven()) continue;
    for (const auto& x : representativePoints(b, i)) {
      for (long k = 0; k <= 8; ++k) EXPECT_TRUE(contains(b, d.scale(Scalar(q(k, 8)), x))) << toString(b);
    }
  }
}

TEST(LatticeFamilyTest, Deciders) {
  const EvsDescriptor l = subspaceLattice();
  const LatticeFamily all = LatticeFamily::all();
  EXPECT_EQ(toString(all), "ALL");
  EXPECT_TRUE(isAbsorbing(all, l).proven());
  EXPECT_TRUE(isBalanced(all).proven());
  const LatticeFamily z = LatticeFamily::finite({Subspace::zero(2)});
  EXPECT_EQ(toString(z), "{zero}");
  EXPECT_TRUE(isBalanced(z).proven());
  const CheckOutcome o = isAbsorbing(z, l);
  ASSERT_TRUE(o.refuted());
  EXPECT_FALSE(z.contains(o.witness->elements[0].as<Subspace>()));
  const LatticeFamily line = LatticeFamily::finite({nthLine(0)});
  EXPECT_TRUE(isBalanced(line).refuted());
  const LatticeFamily cof = LatticeFamily::cofinite({Subspace::full(2)});
  EXPECT_EQ(toString(cof), "ALL\\{full}");
  EXPECT_TRUE(isBalanced(cof).proven());
  EXPECT_TRUE(isAbsorbing(cof, l).refuted());
}

TEST(LatticeFamilyTest, BooleanAlgebra) {
  Rng rng = Rng::forCheck(3, "lattice.bool");
  for (int i = 0; i < 200; ++i) {
    const LatticeFamily a = randomLatticeFamily(rng), b = randomLatticeFamily(rng);
    const LatticeFamily u = a.unite(b), n = a.intersect(b);
    for (const Subspace& s : {Subspace::zero(2), Subspace::full(2), nthLine(0), nthLine(1), nthLine(7)}) {
      EXPECT_EQ(u.contains(s), a.contains(s) || b.contains(s));
      EXPECT_EQ(n.contains(s), a.contains(s) && b.contains(s));
      EXPECT_EQ(a.complement().contains(s), !a.contains(s));
    }
    EXPECT_TRUE(n.isSubsetOf(a) && a.isSubsetOf(u));
    if (!a.isAll()) EXPECT_FALSE(a.contains(a.missing()));
  }
}

TEST(LatticeFamilyTest, UpSetOfZeroIsAll) {
  EXPECT_TRUE(upSet(LatticeFamily::finite({Subspace::zero(2)})).isAll());
  const LatticeFamily d = downSet(LatticeFamily::finite({nthLine(0)}));
  EXPECT_TRUE(d.contains(Subspace::zero(2)) && d.contains(nthLine(0)));
  EXPECT_FALSE(d.contains(nthLine(1)));
}

TEST(ProductSliceTest, BasicNeighborhood) {
  const EvsDescriptor c = coneProduct(2);
  const ProductSlice s = ProductSlice::basic(2, q(1), q(2));
  EXPECT_EQ(toString(s), "[0,1)xball(2)");
  EXPECT_TRUE(isBalanced(s).proven());
  EXPECT_TRUE(isAbsorbing(s, c).proven());
  EXPECT_TRUE(s.bounded());
  EXPECT_TRUE(s.contains({q(1, 2), {Scalar(1), Scalar(q(3, 2), q(1))}}));
  EXPECT_FALSE(s.contains({q(1, 2), {Scalar(2), Scalar(0)}}));
}

TEST(ProductSliceTest, AxisOnlyIsNotAbsorbing) {
  const EvsDescriptor c = coneProduct(1);
  const ProductSlice s(1, {SlicePiece{co(0, 1), VectorRegion::origin(1)}});
  EXPECT_TRUE(isBalanced(s).proven());
  EXPECT_TRUE(isAbsorbing(s, c).refuted());
}

TEST(ProductSliceTest, ScalingMatchesElementwise) {
  const EvsDescriptor c = coneProduct(2);
  Rng rng = Rng::forCheck(42, "slice.scale");
  for (int i = 0; i < 100; ++i) {
    const ProductSlice s = randomProductSlice(rng, 2);
    const Scalar alpha = c.randomScalar(rng, q(2));
    if (alpha.isZero()) continue;
    const SetRep t = scaleSet(alpha, s);
    for (const auto& x : representativePoints(s, i)) {
      EXPECT_TRUE(contains(t, c.scale(alpha, x))) << toString(s);
    }
  }
}

TEST(ProductSliceTest, Regions) {
  const VectorRegion b = VectorRegion::ball(1, q(1), true);
  EXPECT_TRUE(b.contains({Scalar(q(3, 5), q(4, 5))}));
  EXPECT_FALSE(VectorRegion::ball(1, q(1)).contains({Scalar(q(3, 5), q(4, 5))}));
  EXPECT_TRUE(b.balanced());
  EXPECT_FALSE(VectorRegion::finite(1, {{Scalar(1)}}).balanced());
  EXPECT_TRUE(VectorRegion::whole(3).isNeighborhood());
  EXPECT_TRUE(maxNormLeq({Scalar(1), Scalar(-1)}, q(1)));
  EXPECT_FALSE(maxNormLess({Scalar(1), Scalar(0)}, q(1)));
}

TEST(GenericSetTest, BoxUpDownInDictionaryOrder) {
  const SetRep a = BoxUnion{Box{Interval::closed(q(1), q(2)), Interval::closed(q(1), q(2))}};
  const SetRep up = upSet(a);
  EXPECT_TRUE(contains(up, DictElem{q(5), q(0)}));
  EXPECT_TRUE(contains(up, DictElem{q(1), q(1)}));
  EXPECT_FALSE(contains(up, DictElem{q(1), q(0)}));
  const SetRep down = downSet(a);
  EXPECT_TRUE(contains(down, DictElem{q(0), q(0)}));
  EXPECT_TRUE(contains(down, DictElem{q(3, 2), q(9)}));
  EXPECT_TRUE(contains(down, DictElem{q(2), q(2)}));
  EXPECT_FALSE(contains(down, DictElem{q(2), q(3)}));
}

TEST(GenericSetTest, KindNames) {
  EXPECT_EQ(kindName(SetRep(co(0, 1))), "intervals");
  EXPECT_EQ(kindName(SetRep(LatticeFamily::all())), "lattice");
}

}  // namespace
}  // namespace evs
