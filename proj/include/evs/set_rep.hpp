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

// Subsets of an evs: exact representations, the set operators, and the
// balanced / absorbing deciders.

#ifndef EVS_SET_REP_HPP_
#define EVS_SET_REP_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evs/box_union.hpp"
#include "evs/evs.hpp"
#include "evs/interval_union.hpp"
#include "evs/lattice_family.hpp"
#include "evs/outcome.hpp"
#include "evs/product_slice.hpp"
#include "evs/rng.hpp"

namespace evs {

/// Set known only through a membership oracle. The sampler must return
/// members; checks over predicate sets can falsify but never prove.
struct PredicateSet {
  std::string label;
  std::shared_ptr<const EvsDescriptor> space;
  std::function<bool(const Element&)> member;
  std::function<std::vector<Element>(std::uint64_t seed, std::size_t count)> witnesses;
};

using SetRep = std::variant<IntervalUnion, BoxUnion, LatticeFamily, ProductSlice, PredicateSet>;

std::string_view kindName(const SetRep& a);
std::string render(const SetRep& a);

// False when x is not of the element kind the representation holds.
bool contains(const SetRep& a, const Element& x);

// Predicate sets are never reported empty.
bool isEmpty(const SetRep& a);

// Exact set comparisons. Slices compare structurally; predicate sets throw
// std::invalid_argument.
bool sameSet(const SetRep& a, const SetRep& b);
bool isSubset(const SetRep& a, const SetRep& b);

/// lambda A. Interval and box unions scale by |lambda| and throw
/// std::domain_error when it is irrational.
SetRep scaleSet(const Scalar& lambda, const SetRep& a);

// Same kind required; throws std::invalid_argument otherwise.
SetRep minkowskiSum(const SetRep& a, const SetRep& b);
SetRep unite(const SetRep& a, const SetRep& b);
SetRep intersect(const SetRep& a, const SetRep& b);

// Exact kinds only.
SetRep upSet(const SetRep& a);
SetRep downSet(const SetRep& a);

// A few members that exercise the boundary of the representation.
std::vector<Element> representativePoints(const SetRep& a, std::uint64_t seed = kDefaultSeed);

/// alpha A subset of A for every |alpha| <= 1. Exact for the four exact
/// kinds; predicate sets are falsified by sampling. Throws
/// std::invalid_argument for the empty set.
CheckOutcome isBalanced(const SetRep& a, std::uint64_t budget = 256,
                        std::uint64_t seed = kDefaultSeed);

/// Every x has some alpha > 0 with mu x in A for all |mu| <= alpha. Exact for
/// interval unions over the half line, box unions over the dictionary plane,
/// lattice families and cone slices. Predicate sets are only refuted when
/// theta is missing.
CheckOutcome isAbsorbing(const SetRep& a, const EvsDescriptor& e, std::uint64_t budget = 256,
                         std::uint64_t seed = kDefaultSeed);

}  // namespace evs

#endif  // EVS_SET_REP_HPP_
