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

// Neighborhoods of theta on the half line: witness constructors, bounded
// sets, candidate local bases and the audit of topologies finer than the
// usual one.

#ifndef EVS_TOPOLOGY_HPP_
#define EVS_TOPOLOGY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evs/instances.hpp"
#include "evs/set_rep.hpp"

namespace evs {

// B(center, radius), open unless `open` is false.
struct ScalarDisc {
  Scalar center;
  Rational radius;
  bool open = true;
};

/// {|lambda| : lambda in D}. Throws std::invalid_argument for a nonpositive
/// radius and std::domain_error when |center| is irrational.
Interval modulusRange(const ScalarDisc& d);

// {m r : m in M, r in R} for M, R inside [0, inf).
Interval productInterval(const Interval& m, const Interval& r);

// D . S on the half line, where lambda . r = |lambda| r.
IntervalUnion discTimes(const ScalarDisc& d, const IntervalUnion& s);

/// True iff every component is (a,b), (a,inf), [0,b) or [0,inf).
bool isUsualOpen(const IntervalUnion& a);

// Components closed and bounded.
bool isCompact(const IntervalUnion& a);

/// [0, d) where d is the right end of U's 0-component. Throws
/// std::invalid_argument when U is not usual-open or misses 0.
IntervalUnion balancedNbhdInside(const IntervalUnion& u);

/// [0, d/2) with W + W inside U, checked exactly.
IntervalUnion halvingNbhd(const IntervalUnion& u);

// U_x = [0, d) with x + U_x inside G. Throws when x is not in G.
IntervalUnion translateNbhdAt(const IntervalUnion& g, const Rational& x);

struct DecompositionStep {
  Rational x;
  IntervalUnion u;
};

struct OpenDecomposition {
  std::vector<DecompositionStep> steps;
  // Never Proven: the decomposition is an infinite union.
  CheckOutcome outcome;
};

/// Sampled points of G plus the left endpoints that lie in G, each with its
/// U_x. Throws std::invalid_argument for empty or non-open G.
OpenDecomposition openDecomposition(const IntervalUnion& g, std::uint64_t budget,
                                    std::uint64_t seed);

struct Separation {
  IntervalUnion u;
  IntervalUnion v;
};

/// U = V = [0, (x - y)/2), with up(x + U) and down(y + V) disjoint.
/// Requires x > y >= 0.
Separation separationWitness(const Rational& x, const Rational& y);

struct ContinuityWitness {
  Rational eps;
  IntervalUnion u;      // U_x = [0, u)
  IntervalUnion image;  // B(alpha, eps) . (x + U_x)
};

/// Solves for eps and U_x with B(alpha, eps) . (x + U_x) inside alpha G.
/// Throws std::invalid_argument when x is not in G or alpha is 0, and
/// std::domain_error when |alpha| is irrational.
ContinuityWitness scalarContinuityWitness(const IntervalUnion& g, const Rational& x,
                                          const Scalar& alpha);

/// Half-line interval unions: Proven iff sup A is finite, Refuted by the
/// sequence test otherwise. Cone slices: Proven when the slice sits in some
/// multiple of [0,s) x ball(t). Predicate sets only get Unfalsified.
/// Throws std::invalid_argument for other kinds or instances.
CheckOutcome isBoundedSet(const SetRep& a, const EvsDescriptor& e, std::uint64_t budget = 256,
                          std::uint64_t seed = kDefaultSeed);

// Sequence test with lambda_n = 1/n and x_n pushed as far into A as the set
// allows. Reports the last n <= maxN with lambda_n x_n outside [0, radius).
struct SequenceTest {
  std::optional<std::size_t> lastEscape;
  bool escapesAtEnd = false;
  Rational xAtEnd;
};
SequenceTest sequenceTest(const IntervalUnion& a, const Rational& radius, std::size_t maxN);

// Definition by mu-grid: each V = [0, 1/k), k <= 16, absorbs A under every
// |mu| <= 2^-j for some j <= 40.
bool boundedByScalingGrid(const IntervalUnion& a);
// A inside alpha V for each basic V and some alpha = 2^j, j <= 40.
bool boundedByDilation(const IntervalUnion& a);

/// "bounded.a" .. "bounded.e" on the half line: the two characterizations
/// agree, finite sets, compact sets, sums and multiples, subsets.
OutcomeMap checkBoundedLaws(const EvsDescriptor& e, std::uint64_t budget, std::uint64_t seed);

struct NbhdFamily {
  std::string instance = "halfline";
  std::vector<IntervalUnion> members;
};

// Condition (iv) for one pair: some U, V in F separate x and y.
bool separatedByFamily(const NbhdFamily& f, const Rational& x, const Rational& y);
// Condition (v) for one triple: some eps = 2^-k, k <= 12, and U in F give
// B(alpha, eps) . (x + U) inside alpha x + W.
bool continuousInFamily(const NbhdFamily& f, const IntervalUnion& w, const Rational& x,
                        const Scalar& alpha);

/// "localbase.i" .. "localbase.v". (i)-(iii) are decided exactly on the
/// finite family; (iv) and (v) run on sampled points, with refutations of (v)
/// at x > 0 confirmed symbolically. Throws std::invalid_argument for an empty
/// family or a member missing 0.
OutcomeMap checkLocalBaseConditions(const NbhdFamily& f, std::uint64_t budget, std::uint64_t seed);

/// Runs the conditions on F and on phi(F) and compares them; (iv) and (v) on
/// transported points. Refuted when phi is not an order-morphism or any
/// verdict moves.
CheckOutcome checkFamilyTransport(const ShippedMorphism& phi, const NbhdFamily& f,
                                  std::uint64_t budget, std::uint64_t seed);

/// Proven when "usual-open, balanced and absorbing" and "A = [0,a) with
/// a > 0" agree on A; the note records the extracted a.
CheckOutcome openBalancedAbsorbingForm(const IntervalUnion& a);

/// Balanced and absorbing against the interval form over a corpus. The
/// unamended form (any interval from 0) also admits {0}; such sets are
/// listed once each in `degenerate`.
struct IntervalFormReport {
  std::size_t checked = 0;
  std::vector<IntervalUnion> disagreements;
  std::vector<IntervalUnion> degenerate;
  CheckOutcome outcome;
};
IntervalFormReport checkBalancedAbsorbingForm(const std::vector<IntervalUnion>& corpus,
                                              std::uint64_t seed);

struct AuditReport {
  std::vector<CheckOutcome> generators;  // one per input, in order
  CheckOutcome overall;
};

/// Necessary conditions for generators of a topology making the half line a
/// topological evs: a 0-component of form [0,a), all other components open.
/// Violations are Refuted with the endpoint and the escaping scalar.
AuditReport finestTopologyAudit(const std::vector<IntervalUnion>& generators);

}  // namespace evs

#endif  // EVS_TOPOLOGY_HPP_
