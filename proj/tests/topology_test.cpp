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

#include "evs/set_laws.hpp"
#include "evs/topology.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

namespace evs {
namespace {

using testing::expected;

Rational q(long n, long d = 1) { return makeRational(n, d); }
IntervalUnion co(const Rational& a, const Rational& b) { return IntervalUnion{Interval::closedOpen(a, b)}; }
IntervalUnion op(const Rational& a, const Rational& b) { return IntervalUnion{Interval::open(a, b)}; }

TEST(DiscTest, ModulusRangeAndProducts) {
  EXPECT_EQ(toString(modulusRange({Scalar(1), q(1, 8)})), "(7/8,9/8)");
  EXPECT_EQ(toString(modulusRange({Scalar(q(1, 4)), q(1, 2)})), "[0,3/4)");
  EXPECT_EQ(toString(modulusRange({Scalar(q(3, 5), q(4, 5)), q(1, 2), false})), "[1/2,3/2]");
  const IntervalUnion img = discTimes({Scalar(1), q(1, 8)}, translate(co(0, q(1, 3)), q(2)));
  EXPECT_EQ(toString(img), expected("continuity example image"));
  EXPECT_EQ(img.isSubsetOf(op(q(1), q(3))), expected("continuity example inside G") == "true");
}

TEST(OpenTest, UsualOpenAndCompact) {
  EXPECT_TRUE(isUsualOpen(co(0, 1)));
  EXPECT_TRUE(isUsualOpen(op(1, 2)));
  EXPECT_TRUE(isUsualOpen(IntervalUnion::whole()));
  EXPECT_TRUE(isUsualOpen(IntervalUnion{}));
  EXPECT_FALSE(isUsualOpen(co(1, 2)));
  EXPECT_FALSE(isUsualOpen(IntervalUnion{Interval::closed(0, 1)}));
  EXPECT_FALSE(isUsualOpen(IntervalUnion{Interval::point(0)}));
  EXPECT_TRUE(isCompact(IntervalUnion{Interval::closed(0, 1), Interval::point(3)}));
  EXPECT_FALSE(isCompact(co(0, 1)));
}

TEST(NeighborhoodTest, OracleExamples) {
  EXPECT_EQ(toString(translateNbhdAt(op(1, 2), q(3, 2))), expected("U_x for G=(1,2), x=3/2"));
  EXPECT_EQ(toString(halvingNbhd(co(0, q(2, 3)))), expected("halving [0,2/3)"));
  const Separation s = separationWitness(2, 1);
  EXPECT_EQ(toString(s.u), expected("separation (2,1)"));
  EXPECT_EQ(toString(upSet(translate(s.u, 2))), expected("up(2+U)"));
  EXPECT_EQ(toString(downSet(translate(s.v, 1))), expected("down(1+V)"));
}

TEST(NeighborhoodTest, ContinuityWitnessWorkedExample) {
  const IntervalUnion g = op(1, 3);
  const ContinuityWitness w = scalarContinuityWitness(g, 2, Scalar(1));
  EXPECT_EQ(w.eps, q(1, 4));
  EXPECT_EQ(toString(w.u), "[0,2/5)");
  EXPECT_EQ(toString(w.image), "(3/2,3)");
  EXPECT_TRUE(w.image.isSubsetOf(g));
}

TEST(NeighborhoodTest, Errors) {
  EXPECT_THROW(translateNbhdAt(co(1, 2), q(3, 2)), std::invalid_argument);
  EXPECT_THROW(translateNbhdAt(op(1, 2), q(3)), std::invalid_argument);
  EXPECT_THROW(separationWitness(1, 2), std::invalid_argument);
  EXPECT_THROW(scalarContinuityWitness(op(1, 3), 2, Scalar(1, 1)), std::domain_error);
  EXPECT_THROW(balancedNbhdInside(op(1, 2)), std::invalid_argument);
}

// Every constructor's output re-verified here, independently of the checks
// the constructors run on themselves.
TEST(NeighborhoodTest, RandomWitnessesReverify) {
  const EvsDescriptor h = halfLine();
  Rng rng = Rng::forCheck(42, "topology.witnesses");
  for (int i = 0; i < 200; ++i) {
    const IntervalUnion g = testing::randomUsualOpen(rng);
    const Rational x = testing::randomPointIn(g, rng);
    const Scalar alpha = testing::randomUnitishScalar(rng);
    ASSERT_TRUE(isUsualOpen(g)) << toString(g);

    const IntervalUnion u = translateNbhdAt(g, x);
    EXPECT_TRUE(isAbsorbing(u, h).proven());
    EXPECT_TRUE(translate(u, x).isSubsetOf(g)) << toString(g) << " at " << toString(x);

    const ContinuityWitness c = scalarContinuityWitness(g, x, alpha);
    EXPECT_GT(c.eps, 0);
    EXPECT_TRUE(c.image.contains(modulusOf(alpha) * x));
    EXPECT_TRUE(c.image.isSubsetOf(scaleBy(g, modulusOf(alpha)))) << toString(g);

    const IntervalUnion nb = co(0, x + 1).unite(g);
    const IntervalUnion w = balancedNbhdInside(nb);
    EXPECT_TRUE(w.isSubsetOf(nb));
    EXPECT_TRUE(isBalanced(w).proven() && isAbsorbing(w, h).proven());
    const IntervalUnion half = halvingNbhd(nb);
    EXPECT_TRUE(minkowskiSum(half, half).isSubsetOf(nb));
    EXPECT_TRUE(isAbsorbing(half, h).proven());

    const Rational y = x + q(rng.between(1, 9), 4);
    const Separation s = separationWitness(y, x);
    EXPECT_TRUE(upSet(translate(s.u, y)).intersect(downSet(translate(s.v, x))).empty());
  }
}

TEST(NeighborhoodTest, DecompositionStaysInside) {
  Rng rng = Rng::forCheck(42, "topology.decomp");
  for (int i = 0; i < 50; ++i) {
    const IntervalUnion g = testing::randomUsualOpen(rng);
    const OpenDecomposition d = openDecomposition(g, 64, i);
    EXPECT_EQ(d.outcome.verdict, Verdict::Unfalsified);
    for (const auto& s : d.steps) EXPECT_TRUE(translate(s.u, s.x).isSubsetOf(g));
  }
}

TEST(BoundedTest, Deciders) {
  const EvsDescriptor h = halfLine();
  EXPECT_TRUE(isBoundedSet(co(0, 5).unite(co(7, 9)), h).proven());
  EXPECT_TRUE(isBoundedSet(IntervalUnion::points({q(3), q(100)}), h).proven());
  const CheckOutcome o = isBoundedSet(IntervalUnion{Interval::atLeast(1)}, h);
  ASSERT_TRUE(o.refuted());
  EXPECT_EQ(o.witness->elements[0].as<Rational>() * o.witness->scalars[0].re(), q(1001, 1000));
  EXPECT_TRUE(isBoundedSet(ProductSlice::basic(2, q(1), q(1)), coneProduct(2)).proven());
  EXPECT_TRUE(isBoundedSet(ProductSlice(1, {{co(0, 1), VectorRegion::whole(1)}}), coneProduct(1)).refuted());
  EXPECT_THROW(isBoundedSet(LatticeFamily::all(), subspaceLattice()), std::invalid_argument);
}

TEST(BoundedTest, CharacterizationsAgree) {
  const EvsDescriptor h = halfLine();
  Rng rng = Rng::forCheck(42, "bounded.agree");
  for (int i = 0; i < 1000; ++i) {
    const IntervalUnion a = randomIntervalUnion(rng);
    const bool dec = isBoundedSet(a, h).proven();
    EXPECT_EQ(boundedByScalingGrid(a), dec) << toString(a);
    EXPECT_EQ(boundedByDilation(a), dec) << toString(a);
    if (dec) {
      for (unsigned k = 1; k <= 8; ++k) {
        const SequenceTest t = sequenceTest(a, q(1, k), 1000);
        EXPECT_FALSE(t.escapesAtEnd) << toString(a);
      }
      for (const auto& l : h.scalars(rng, q(5), 3)) {
        EXPECT_TRUE(isBoundedSet(scaleSet(l, a), h).proven()) << toString(a);
      }
    } else {
      EXPECT_TRUE(sequenceTest(a, q(1), 1000).escapesAtEnd) << toString(a);
    }
  }
}

TEST(BoundedTest, Laws) {
  for (const auto& [id, o] : checkBoundedLaws(halfLine(), 500, 42)) {
    EXPECT_FALSE(o.refuted()) << id << ": " << render(*o.witness);
  }
  for (const auto& [id, o] : checkBoundedLaws(dictPlane(), 500, 42)) {
    EXPECT_EQ(o.verdict, Verdict::Unfalsified) << id;
  }
}

NbhdFamily reciprocalFamily(long n) {
  NbhdFamily f;
  for (long k = 1; k <= n; ++k) f.members.push_back(co(0, q(1, k)));
  return f;
}

TEST(LocalBaseTest, ReciprocalFamily) {
  const OutcomeMap m = checkLocalBaseConditions(reciprocalFamily(8), 1000, 42);
  EXPECT_TRUE(m.at("localbase.i").proven());
  EXPECT_TRUE(m.at("localbase.iii").proven());
  // Finite family: [0,1/5) would need [0,1/10).
  EXPECT_TRUE(m.at("localbase.ii").refuted());
  const CheckOutcome& v = m.at("localbase.v");
  ASSERT_TRUE(v.refuted());
  EXPECT_EQ(v.witness->elements[0], Element(q(1)));
  EXPECT_EQ(v.witness->scalars[0], Scalar(1));
  EXPECT_NE(v.witness->description.find("W = [0,1)"), std::string::npos);
}

TEST(LocalBaseTest, VWitnessStableAcrossSeeds) {
  const std::string first = render(*checkLocalBaseConditions(reciprocalFamily(8), 200, 1).at("localbase.v").witness);
  for (std::uint64_t seed : {2u, 42u, 1234u}) {
    EXPECT_EQ(render(*checkLocalBaseConditions(reciprocalFamily(8), 200, seed).at("localbase.v").witness),
              first);
  }
}

TEST(LocalBaseTest, EscapeBelowTheTranslate) {
  // lambda slightly under 1 moves 1 below 1 + W for every W.
  const Rational lambda = 1 - q(1, 1 << 12) / 2;
  EXPECT_EQ(translate(co(0, 1), 1).contains(lambda), expected("localbase v escape") == "true");
  EXPECT_FALSE(continuousInFamily(reciprocalFamily(8), co(0, 1), 1, Scalar(1)));
  EXPECT_TRUE(continuousInFamily(reciprocalFamily(8), co(0, 1), 0, Scalar(1)));
}

TEST(LocalBaseTest, Separation) {
  const NbhdFamily f = reciprocalFamily(8);
  EXPECT_TRUE(separatedByFamily(f, 3, 1));
  EXPECT_FALSE(separatedByFamily(f, q(3, 4), q(2, 3)));
}

TEST(LocalBaseTest, MembersMustHoldZero) {
  NbhdFamily f;
  f.members.push_back(op(1, 2));
  EXPECT_THROW(checkLocalBaseConditions(f, 10, 1), std::invalid_argument);
}

TEST(LocalBaseTest, FamilyTransport) {
  const ShippedMorphism d = shippedMorphism("doubling");
  const NbhdFamily f = reciprocalFamily(8);
  std::vector<std::string> doubled;
  for (const auto& u : f.members) doubled.push_back(render(transportSet(d, u)));
  EXPECT_EQ(doubled, testing::oracle().at("family doubled [0,1/n)").get<std::vector<std::string>>());
  EXPECT_FALSE(checkFamilyTransport(d, f, 200, 42).refuted());
  EXPECT_FALSE(checkFamilyTransport(shippedMorphism("identity"), f, 200, 42).refuted());
}

TEST(FormTest, BalancedAbsorbingIntervals) {
  Rng rng = Rng::forCheck(42, "form.corpus");
  std::vector<IntervalUnion> corpus;
  for (int i = 0; i < 1000; ++i) corpus.push_back(randomIntervalUnion(rng));
  corpus.push_back(IntervalUnion{Interval::point(0)});
  const IntervalFormReport r = checkBalancedAbsorbingForm(corpus, 42);
  EXPECT_TRUE(r.disagreements.empty());
  ASSERT_EQ(r.degenerate.size(), 1u);
  EXPECT_EQ(toString(r.degenerate[0]), "[0,0]");
  EXPECT_FALSE(r.outcome.refuted());
  for (const auto& a : corpus) EXPECT_TRUE(openBalancedAbsorbingForm(a).proven()) << toString(a);
}

TEST(FormTest, Examples) {
  EXPECT_EQ(openBalancedAbsorbingForm(co(0, 2)).note, "a = 2");
  EXPECT_EQ(openBalancedAbsorbingForm(IntervalUnion::whole()).note, "a = inf");
  EXPECT_EQ(openBalancedAbsorbingForm(IntervalUnion{Interval::closed(0, 2)}).note,
            "not of the form [0,a)");
}

TEST(AuditTest, EscapeScalars) {
  const AuditReport r = finestTopologyAudit({co(1, 2), IntervalUnion{Interval::closed(0, 1)}});
  ASSERT_TRUE(r.generators[0].refuted());
  ASSERT_TRUE(r.generators[1].refuted());
  EXPECT_EQ(r.generators[0].witness->scalars[0], Scalar(q(1, 2)));
  EXPECT_EQ(co(1, 2).contains(q(1, 2)), expected("audit [1,2) t*1 in G") == "true");
  EXPECT_EQ(r.generators[1].witness->scalars[0], Scalar(q(3, 2)));
  EXPECT_EQ(IntervalUnion{Interval::closed(0, 1)}.contains(q(3, 2)),
            expected("audit [0,1] t*1 in G") == "true");
  EXPECT_TRUE(r.overall.refuted());
  EXPECT_NE(r.overall.witness->description.find("generator 1"), std::string::npos);
}

TEST(AuditTest, AgreesWithUsualOpen) {
  Rng rng = Rng::forCheck(42, "audit.fuzz");
  std::vector<IntervalUnion> gens;
  for (int i = 0; i < 1000; ++i) {
    const IntervalUnion g = i % 2 ? randomIntervalUnion(rng) : testing::randomUsualOpen(rng);
    gens.push_back(g);
    const AuditReport r = finestTopologyAudit({g});
    EXPECT_EQ(r.overall.proven(), isUsualOpen(g)) << toString(g);
    if (r.overall.refuted()) {
      const Witness& w = *r.overall.witness;
      // The {0} finding moves the point 1, which need not lie in G.
      if (w.description.find("{0}") == std::string::npos) {
        EXPECT_TRUE(g.contains(w.elements[0].as<Rational>())) << toString(g);
      }
      EXPECT_FALSE(g.contains(modulusOf(w.scalars[0]) * w.elements[0].as<Rational>())) << toString(g);
    }
  }
}

}  // namespace
}  // namespace evs
