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

#include "evs/box_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace evs {

bool Box::anchored() const { return isZero(x.lo) && x.loClosed && isZero(y.lo) && y.loClosed; }

BoxUnion::BoxUnion(std::vector<Box> boxes) {
  for (const auto& b : boxes) {
    // Reuse the interval validation.
    (void)IntervalUnion{b.x};
    (void)IntervalUnion{b.y};
  }
  std::erase_if(boxes, [](const Box& b) { return b.empty(); });
  std::vector<Box> kept;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < boxes.size() && !dominated; ++j) {
      if (i == j || !boxes[i].isSubsetOf(boxes[j])) continue;
      // Equal boxes: keep the first copy only.
      dominated = !boxes[j].isSubsetOf(boxes[i]) || j < i;
    }
    if (!dominated) kept.push_back(boxes[i]);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Box& a, const Box& b) { return toString(a) < toString(b); });
  boxes_ = std::move(kept);
}

BoxUnion BoxUnion::whole() {
  return BoxUnion{Box{Interval::atLeast(Rational(0)), Interval::atLeast(Rational(0))}};
}

bool BoxUnion::contains(const DictElem& p) const {
  return std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b.contains(p); });
}

bool BoxUnion::anchored() const {
  return std::all_of(boxes_.begin(), boxes_.end(), [](const Box& b) { return b.anchored(); });
}

BoxUnion BoxUnion::unite(const BoxUnion& other) const {
  std::vector<Box> all = boxes_;
  all.insert(all.end(), other.boxes_.begin(), other.boxes_.end());
  return BoxUnion(std::move(all));
}

BoxUnion BoxUnion::intersect(const BoxUnion& other) const {
  std::vector<Box> out;
  for (const auto& a : boxes_) {
    for (const auto& b : other.boxes_) {
      IntervalUnion x = IntervalUnion{a.x}.intersect(IntervalUnion{b.x});
      IntervalUnion y = IntervalUnion{a.y}.intersect(IntervalUnion{b.y});
      if (x.empty() || y.empty()) continue;
      out.push_back(Box{x.components().front(), y.components().front()});
    }
  }
  return BoxUnion(std::move(out));
}

namespace {

void addBreaks(std::vector<Rational>& out, const Interval& i) {
  out.push_back(i.lo);
  if (i.hi) out.push_back(*i.hi);
}

std::vector<Rational> representatives(std::vector<Rational> breaks) {
  breaks.push_back(Rational(0));
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Rational> reps;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    reps.push_back(breaks[i]);
    if (i + 1 < breaks.size()) {
      reps.push_back((breaks[i] + breaks[i + 1]) / 2);
    } else {
      reps.push_back(breaks[i] + 1);
    }
  }
  return reps;
}

}  // namespace

std::vector<DictElem> BoxUnion::cellRepresentatives(const BoxUnion& other) const {
  std::vector<Rational> xs, ys;
  for (const auto* u : {this, &other}) {
    for (const auto& b : u->boxes_) {
      addBreaks(xs, b.x);
      addBreaks(ys, b.y);
    }
  }
  std::vector<DictElem> out;
  for (const auto& x : representatives(xs)) {
    for (const auto& y : representatives(ys)) out.push_back({x, y});
  }
  return out;
}

bool BoxUnion::isSubsetOf(const BoxUnion& other) const {
  for (const auto& p : cellRepresentatives(other)) {
    if (contains(p) && !other.contains(p)) return false;
  }
  return true;
}

bool BoxUnion::sameSet(const BoxUnion& other) const {
  return isSubsetOf(other) && other.isSubsetOf(*this);
}

std::string toString(const Box& b) { return toString(b.x) + "x" + toString(b.y); }

std::string toString(const BoxUnion& u) {
  if (u.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < u.boxes().size(); ++i) {
    if (i) out += " U ";
    out += toString(u.boxes()[i]);
  }
  return out;
}

BoxUnion scaleBy(const BoxUnion& u, const Rational& t) {
  if (sgn(t) < 0) throw std::invalid_argument("scaleBy: negative factor");
  if (u.empty()) return u;
  if (isZero(t)) {
    return BoxUnion{Box{Interval::point(Rational(0)), Interval::point(Rational(0))}};
  }
  std::vector<Box> out;
  for (auto b : u.boxes()) {
    for (Interval* i : {&b.x, &b.y}) {
      i->lo *= t;
      if (i->hi) *i->hi *= t;
    }
    out.push_back(std::move(b));
  }
  return BoxUnion(std::move(out));
}

namespace {

std::vector<Rational> sortedUnique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Each value, each midpoint, and one past the end.
std::vector<Rational> withMidpoints(const std::vector<Rational>& v) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
    out.push_back(i + 1 < v.size() ? Rational((v[i] + v[i + 1]) / 2) : Rational(v[i] + 1));
  }
  return out;
}

// Scans the ray s -> s * dir at the given parameters (ascending, starting at
// 0) for an inside point preceded by an outside one.
std::optional<std::pair<DictElem, Rational>> scanRay(const BoxUnion& u, const DictElem& dir,
                                                     const std::vector<Rational>& params) {
  std::optional<Rational> firstOut;
  for (const auto& s : params) {
    DictElem p{s * dir.x, s * dir.y};
    if (!u.contains(p)) {
      if (!firstOut) firstOut = s;
    } else if (firstOut) {
      return std::make_pair(p, *firstOut / s);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<DictElem, Rational>> shrinkViolation(const BoxUnion& u) {
  std::vector<Rational> xs{Rational(0)}, ys{Rational(0)};
  for (const auto& b : u.boxes()) {
    addBreaks(xs, b.x);
    addBreaks(ys, b.y);
  }
  xs = sortedUnique(std::move(xs));
  ys = sortedUnique(std::move(ys));

  // Vertical ray.
  if (auto v = scanRay(u, {Rational(0), Rational(1)}, withMidpoints(ys))) return v;

  std::vector<Rational> slopes{Rational(0)};
  for (const auto& cx : xs) {
    if (sgn(cx) <= 0) continue;
    for (const auto& cy : ys) slopes.push_back(cy / cx);
  }
  for (const auto& m : withMidpoints(sortedUnique(std::move(slopes)))) {
    std::vector<Rational> events{Rational(0)};
    for (const auto& cx : xs) events.push_back(cx);
    if (sgn(m) > 0) {
      for (const auto& cy : ys) events.push_back(cy / m);
    }
    if (auto v = scanRay(u, {Rational(1), m}, withMidpoints(sortedUnique(std::move(events))))) {
      return v;
    }
  }
  return std::nullopt;
}

// (x, y) <= (u, v) iff x < u, or x = u and y <= v.
//   down(I x J) = [0, sup I) x [0, inf)  U  I x [0, sup J>
//   up(I x J)   = (inf I, inf) x [0, inf)  U  I x <inf J, inf)
// with <, > closed exactly where J attains the extremum.
BoxUnion downSet(const BoxUnion& u) {
  std::vector<Box> out;
  const Interval all = Interval::atLeast(Rational(0));
  for (const auto& b : u.boxes()) {
    if (!b.x.hi) {
      out.push_back({all, all});
      continue;
    }
    out.push_back({Interval::closedOpen(Rational(0), *b.x.hi), all});
    out.push_back({b.x, Interval{Rational(0), true, b.y.hi, b.y.hiClosed}});
  }
  return BoxUnion(std::move(out));
}

BoxUnion upSet(const BoxUnion& u) {
  std::vector<Box> out;
  const Interval all = Interval::atLeast(Rational(0));
  for (const auto& b : u.boxes()) {
    out.push_back({Interval::above(b.x.lo), all});
    out.push_back({b.x, Interval{b.y.lo, b.y.loClosed, std::nullopt, false}});
  }
  return BoxUnion(std::move(out));
}

}  // namespace evs
