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

// Generic exponential vector space interface and its law checkers.

#ifndef EVS_EVS_HPP_
#define EVS_EVS_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evs/element.hpp"
#include "evs/outcome.hpp"
#include "evs/rng.hpp"
#include "evs/scalar.hpp"

namespace evs {

enum class SetKind { IntervalUnion, BoxUnion, LatticeFamily, ProductSlice };

/// One exponential vector space instance: carrier operations, order, the
/// primitive space and a sampler. Descriptors are immutable values.
///
/// isPrimitive is supplied exactly per instance rather than derived from
/// minimality; for user supplied descriptors that exactness is an
/// assumption the checkers cannot verify.
struct EvsDescriptor {
  std::string name;
  ScalarMode scalarMode = ScalarMode::AnyScalar;
  FieldMode fieldMode = FieldMode::Complex;

  Element zero;
  std::function<Element(const Element&, const Element&)> add;
  std::function<Element(const Scalar&, const Element&)> scale;
  std::function<bool(const Element&, const Element&)> leq;
  std::function<bool(const Element&)> isPrimitive;
  // Some primitive p with p <= x.
  std::function<Element(const Element&)> primitiveWitness;
  // One random element; boundary elements (zero, primitives) appear with
  // positive probability.
  std::function<Element(Rng&)> sampleOne;
  // The full set {p in X0 : p <= x} when it is finite and known; empty
  // function otherwise.
  std::function<std::vector<Element>(const Element&)> exactPrimitives;

  // A1-A6 reduce to verified arithmetic identities for this instance, so
  // checkAxioms may report Proven instead of Unfalsified.
  bool exactlyVerified = false;
  std::vector<SetKind> exactSets;

  std::vector<Element> sample(Rng& rng, std::size_t count) const;
  std::vector<Element> sample(std::uint64_t seed, std::size_t count) const;

  bool admits(const Scalar& s) const;
  Scalar randomScalar(Rng& rng, const Rational& radius) const;
  std::vector<Scalar> scalars(Rng& rng, const Rational& radius, std::size_t count) const;
};

inline constexpr std::array<std::string_view, 13> kAxiomIds = {
    "A1.assoc", "A1.comm", "A1.id",  "A2.add", "A2.scale", "A3.i", "A3.ii",
    "A3.iii",   "A3.iv",   "A4",     "A5.fwd", "A5.bwd",   "A6"};

// Per-axiom verdicts. A law over k quantified variables gets
// ceil(budget^(1/k)) samples per variable.
OutcomeMap checkAxioms(const EvsDescriptor& e, std::uint64_t budget, std::uint64_t seed);

// Re-evaluates the named law on a witness; true iff the witness violates it.
bool axiomViolated(const EvsDescriptor& e, std::string_view axiomId, const Witness& w);

// Reflexivity, antisymmetry and transitivity of leq on sampled elements.
CheckOutcome checkPartialOrder(const EvsDescriptor& e, std::uint64_t budget, std::uint64_t seed);

// Ceil of budget^(1/k), at least 1.
std::size_t samplesPerVariable(std::uint64_t budget, unsigned k);

/// Primitives below x. Exact when the descriptor knows its primitive sets;
/// otherwise the sampled primitives below x together with the witness.
std::vector<Element> primitiveSamples(const EvsDescriptor& e, const Element& x,
                                      std::uint64_t budget, std::uint64_t seed);

// P_{alpha x} == alpha P_x on sampled x and alpha, both inclusions.
CheckOutcome checkPrimitiveScaling(const EvsDescriptor& e, std::uint64_t budget,
                                   std::uint64_t seed);

struct OrderMorphism {
  std::string name;
  std::function<Element(const Element&)> map;
  std::function<Element(const Element&)> inverse;  // empty when not supplied

  Element operator()(const Element& x) const { return map(x); }
  bool hasInverse() const { return static_cast<bool>(inverse); }
};

OrderMorphism compose(const OrderMorphism& g, const OrderMorphism& f);

// Additivity, homogeneity, monotonicity and the two preimage conditions on
// sampled pools. Refuted witnesses name the failing clause.
CheckOutcome checkOrderMorphism(const OrderMorphism& f, const EvsDescriptor& source,
                                const EvsDescriptor& target, std::uint64_t budget,
                                std::uint64_t seed);

/// Subevs criterion: closure under alpha x + y, and every sampled y lying
/// above a primitive of X inside Y. The second clause is decided exactly from
/// the primitive sets when the descriptor has them.
CheckOutcome checkSubevs(const EvsDescriptor& e, const std::function<bool(const Element&)>& memberOfY,
                         std::uint64_t budget, std::uint64_t seed,
                         const std::function<Element(Rng&)>& ySampler = {});

// Componentwise product. Throws std::invalid_argument for an empty list or
// mixed field modes.
EvsDescriptor productEvs(const std::vector<EvsDescriptor>& parts);

// Comparable pairs built from a pool: (pw(x), x), (x, x/2 + x/2) and every
// comparable pair inside the pool, capped at maxPairs.
std::vector<std::pair<Element, Element>> comparablePairs(const EvsDescriptor& e,
                                                         const std::vector<Element>& pool,
                                                         std::size_t maxPairs);

}  // namespace evs

#endif  // EVS_EVS_HPP_
