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

#ifndef EVS_INTERVAL_UNION_HPP_
#define EVS_INTERVAL_UNION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "evs/rational.hpp"

namespace evs {

/// Interval of [0, inf) with rational endpoints. An absent upper endpoint
/// means +inf (and is never closed).
struct Interval {
  Rational lo{0};
  bool loClosed = true;
  std::optional<Rational> hi;
  bool hiClosed = false;

  static Interval closed(Rational a, Rational b) { return {std::move(a), true, std::move(b), true}; }
  static Interval open(Rational a, Rational b) { return {std::move(a), false, std::move(b), false}; }
  static Interval closedOpen(Rational a, Rational b) {
    return {std::move(a), true, std::move(b), false};
  }
  static Interval openClosed(Rational a, Rational b) {
    return {std::move(a), false, std::move(b), true};
  }
  static Interval atLeast(Rational a) { return {std::move(a), true, std::nullopt, false}; }
  static Interval above(Rational a) { return {std::move(a), false, std::nullopt, false}; }
  static Interval point(const Rational& a) { return closed(a, a); }

  bool bounded() const { return hi.has_value(); }
  bool empty() const;
  bool contains(const Rational& r) const;
  bool isSubsetOf(const Interval& other) const;
  // Some rational strictly inside, or the point itself for degenerate ones.
  Rational interiorPoint() const;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.loClosed == b.loClosed && a.hi == b.hi && a.hiClosed == b.hiClosed;
  }
};

std::string toString(const Interval& i);

/// Finite union of intervals in [0, inf), kept canonical: sorted, pairwise
/// disjoint, and no two components can be merged into one interval
/// ([0,1) U [1,2) is stored as [0,2)). Equal sets have equal
/// representations.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  // Throws std::invalid_argument for negative endpoints.
  explicit IntervalUnion(std::vector<Interval> pieces);
  IntervalUnion(std::initializer_list<Interval> pieces)
      : IntervalUnion(std::vector<Interval>(pieces)) {}

  static IntervalUnion whole() { return IntervalUnion{Interval::atLeast(Rational(0))}; }
  static IntervalUnion points(const std::vector<Rational>& pts);

  const std::vector<Interval>& components() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& r) const;
  // Component holding r, or nullptr.
  const Interval* componentContaining(const Rational& r) const;

  IntervalUnion unite(const IntervalUnion& other) const;
  IntervalUnion intersect(const IntervalUnion& other) const;
  bool isSubsetOf(const IntervalUnion& other) const;

  bool bounded() const { return parts_.empty() || parts_.back().bounded(); }

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<Interval> parts_;
};

// "[0,1/2) U (3/4,2]"; the empty set renders as "{}".
std::string toString(const IntervalUnion& u);

// Image under r -> t r for t >= 0; t = 0 collapses a nonempty set to {0}.
IntervalUnion scaleBy(const IntervalUnion& u, const Rational& t);

// {a + b}; a sum endpoint is closed only when both summands' are.
IntervalUnion minkowskiSum(const IntervalUnion& a, const IntervalUnion& b);

// Translate by x >= 0.
IntervalUnion translate(const IntervalUnion& u, const Rational& x);

// [inf A, inf) and [0, sup A], closed exactly when the extremum is attained.
IntervalUnion upSet(const IntervalUnion& u);
IntervalUnion downSet(const IntervalUnion& u);

}  // namespace evs

#endif  // EVS_INTERVAL_UNION_HPP_
