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

#ifndef EVS_INSTANCES_HPP_
#define EVS_INSTANCES_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "evs/evs.hpp"

namespace evs {

/// [0, inf) with lambda . r = |lambda| r. Elements are bare rationals.
EvsDescriptor halfLine();

/// [0, inf) x K^n with alpha (r, a) = (|alpha| r, alpha a) and
/// (r, a) <= (s, b) iff r <= s and a = b.
EvsDescriptor coneProduct(std::size_t n);

/// Same carrier and order as the cone, but alpha (r, a) = (r, alpha a) for
/// alpha != 0 and 0 (r, a) = (0, 0). Accepts every scalar.
EvsDescriptor twistedProduct(std::size_t n);

/// [0, inf)^2 under the dictionary order, alpha (x, y) = (|alpha| x, |alpha| y).
EvsDescriptor dictPlane();

/// Subspaces of Q^2: join is span of the union, nonzero scalars act as the
/// identity, order is inclusion.
EvsDescriptor subspaceLattice();

// Deliberately broken descriptors for exercising the checkers.
EvsDescriptor halfLineWithoutModulus();  // lambda . r = Re(lambda) r
EvsDescriptor twistedWithoutZeroCase(std::size_t n);  // 0 (r, a) = (r, 0)
EvsDescriptor latticeWithoutCanonicalSpan();  // join keeps raw stacked rows

/// Parses "halfline", "cone:n", "twisted:n", "dict2", "lattice2" and
/// "product:(spec,spec,...)". Throws std::invalid_argument on unknown names.
EvsDescriptor makeInstance(std::string_view spec);

// Top-level comma split honoring parentheses.
std::vector<std::string> splitTopLevel(std::string_view text, char sep);

struct ShippedMorphism {
  OrderMorphism map;
  EvsDescriptor source;
  EvsDescriptor target;
};

/// "doubling" (r -> 2r on the half line), "embed" (r -> (r, 0) into cone:1),
/// "identity", and two non-morphisms: "shift" (r -> r + 1) and "square".
ShippedMorphism shippedMorphism(std::string_view name);
std::vector<std::string> shippedMorphismNames();

}  // namespace evs

#endif  // EVS_INSTANCES_HPP_
