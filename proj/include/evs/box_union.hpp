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

#ifndef EVS_BOX_UNION_HPP_
#define EVS_BOX_UNION_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evs/element.hpp"
#include "evs/interval_union.hpp"

namespace evs {

struct Box {
  Interval x;
  Interval y;

  bool empty() const { return x.empty() || y.empty(); }
  bool contains(const DictElem& p) const { return x.contains(p.x) && y.contains(p.y); }
  bool isSubsetOf(const Box& o) const { return empty() || (x.isSubsetOf(o.x) && y.isSubsetOf(o.y)); }
  // [0,a> x [0,b>: both sides start closed at 0.
  bool anchored() const;

  friend bool operator==(const Box& a, const Box& b) { return a.x == b.x && a.y == b.y; }
};

/// Finite union of axis-parallel boxes in [0, inf)^2. The stored list is an
/// antichain under box inclusion. Anchored boxes [0,a) x [0,b) are the usual
/// members; order closures under the dictionary order also produce slabs and
/// fibers such as {a} x [0,b], which is why general boxes are allowed.
///
/// Set comparisons are exact: every box edge lies on a finite grid of
/// breakpoints and membership is constant on each grid cell.
class BoxUnion {
 public:
  BoxUnion() = default;
  explicit BoxUnion(std::vector<Box> boxes);
  BoxUnion(std::initializer_list<Box> boxes) : BoxUnion(std::vector<Box>(boxes)) {}

  static BoxUnion whole();

  const std::vector<Box>& boxes() const { return boxes_; }
  bool empty() const { return boxes_.empty(); }
  bool contains(const DictElem& p) const;
  bool anchored() const;

  BoxUnion unite(const BoxUnion& other) const;
  BoxUnion intersect(const BoxUnion& other) const;
  bool isSubsetOf(const BoxUnion& other) const;
  bool sameSet(const BoxUnion& other) const;

  // One representative point per grid cell, for the breakpoints of this set
  // and of `other`.
  std::vector<DictElem> cellRepresentatives(const BoxUnion& other) const;

 private:
  std::vector<Box> boxes_;
};

std::string toString(const Box& b);
std::string toString(const BoxUnion& u);

// Image under (x, y) -> (t x, t y), t >= 0.
BoxUnion scaleBy(const BoxUnion& u, const Rational& t);

// A point p of u and t in [0, 1) with t p outside u, or nullopt when u is
// closed under every shrink p -> t p. Exact: along a ray from the origin
// membership only changes where the ray crosses a box edge, and the order of
// those crossings only changes at finitely many critical slopes.
std::optional<std::pair<DictElem, Rational>> shrinkViolation(const BoxUnion& u);

// Order closures under the dictionary order.
BoxUnion upSet(const BoxUnion& u);
BoxUnion downSet(const BoxUnion& u);

}  // namespace evs

#endif  // EVS_BOX_UNION_HPP_
