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

// Closure laws of absorbing and balanced sets, radial separation, and the
// transport of sets along order-isomorphisms.

#ifndef EVS_SET_LAWS_HPP_
#define EVS_SET_LAWS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evs/instances.hpp"
#include "evs/set_rep.hpp"

namespace evs {

// Random exact sets. Endpoints are multiples of 1/4 (intervals) or 1/2
// (boxes); about half the sets start closed at 0 so that absorbing and
// balanced sets are common.
IntervalUnion randomIntervalUnion(Rng& rng);
BoxUnion randomBoxUnion(Rng& rng);
LatticeFamily randomLatticeFamily(Rng& rng);
ProductSlice randomProductSlice(Rng& rng, std::size_t dim);

// Dispatches on the instance's exact set kind; throws std::invalid_argument
// when it has none.
SetRep randomSet(const EvsDescriptor& e, Rng& rng);

/// "absorbing.i" .. "absorbing.v": theta membership, finite intersections,
/// unions with arbitrary sets, up/down closures and nonzero scaling, each
/// checked on generated sets with the exact deciders.
OutcomeMap checkAbsorbingClosureLaws(const EvsDescriptor& e, std::uint64_t budget,
                                     std::uint64_t seed);

/// "balanced.i" .. "balanced.v", with every scalar allowed in (v).
OutcomeMap checkBalancedClosureLaws(const EvsDescriptor& e, std::uint64_t budget,
                                    std::uint64_t seed);

/// An absorbing set holding exactly one of x != y, built by the standard
/// constructions for the half line, the dictionary plane, cones and products
/// of those. nullopt when no construction applies. Throws
/// std::invalid_argument when x == y.
std::optional<SetRep> radialSeparator(const EvsDescriptor& e, const Element& x, const Element& y);

/// Proven when the instance's separator construction is verified on every
/// sampled pair, Refuted on the subspace lattice, Unfalsified otherwise.
CheckOutcome checkRadial(const EvsDescriptor& e, std::uint64_t budget, std::uint64_t seed);

/// A declared subevs Y of `ambient`, with an exact model: an evs isomorphic
/// to Y and the trace A -> A n Y expressed in the model's sets.
struct SubevsSpec {
  std::string name;
  EvsDescriptor ambient;
  std::function<bool(const Element&)> member;
  std::function<Element(Rng&)> sample;
  EvsDescriptor model;
  std::function<Element(const Element&)> toModel;
  std::function<SetRep(const SetRep&)> traceInModel;
};

// {(r, 0)} inside cone:1, modelled by the half line.
SubevsSpec coneAxisSubevs();

/// Replays the product construction (a cylinder over one separating factor)
/// and the hereditary one (A n Y) on sampled pairs.
CheckOutcome checkRadialProductAndHereditary(const std::vector<EvsDescriptor>& parts,
                                             const std::vector<SubevsSpec>& subevs,
                                             std::uint64_t budget, std::uint64_t seed);

/// Image of an exact set under a shipped isomorphism: doubling and identity
/// on the half line, and r -> (r, 0) onto the cone's axis. Throws
/// std::invalid_argument when the map has no inverse or the set kind is not
/// supported.
SetRep transportSet(const ShippedMorphism& phi, const SetRep& a);

// Absorbing verdict of phi(A) in the image: the target itself, or the axis
// subevs for the embedding.
CheckOutcome absorbingInImage(const ShippedMorphism& phi, const SetRep& image);

// A absorbing iff phi(A) absorbing, on generated sets.
CheckOutcome checkAbsorbingTransport(const ShippedMorphism& phi, std::uint64_t budget,
                                     std::uint64_t seed);

// Separators carried by phi still separate the image points.
CheckOutcome checkRadialTransport(const ShippedMorphism& phi, std::uint64_t budget,
                                  std::uint64_t seed);

}  // namespace evs

#endif  // EVS_SET_LAWS_HPP_
