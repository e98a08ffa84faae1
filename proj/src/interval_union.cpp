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

#include "evs/interval_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace evs {

bool Interval::empty() const {
  if (!hi) return false;
  if (lo < *hi) return false;
  return !(lo == *hi && loClosed && hiClosed);
}

bool Interval::contains(const Rational& r) const {
  if (r < lo || (r == lo && !loClosed)) return false;
  if (!hi) return true;
  return r < *hi || (r == *hi && hiClosed);
}

bool Interval::isSubsetOf(const Interval& o) const {
  if (empty()) return true;
  if (lo < o.lo || (lo == o.lo && loClosed && !o.loClosed)) return false;
  if (!o.hi) return true;
  if (!hi) return false;
  return *hi < *o.hi || (*hi == *o.hi && (!hiClosed || o.hiClosed));
}

Rational Interval::interiorPoint() const {
  if (!hi) return lo + 1;
  if (lo == *hi) return lo;
  return (lo + *hi) / 2;
}

std::string toString(const Interval& i) {
  std::string out = i.loClosed ? "[" : "(";
  out += toString(i.lo) + ",";
  out += i.hi ? toString(*i.hi) : "inf";
  out += i.hiClosed ? "]" : ")";
  return out;
}

namespace {

// Upper endpoint comparison with +inf as the largest value.
bool hiLess(const Interval& a, const Interval& b) {
  if (!a.hi) return false;
  if (!b.hi) return true;
  return *a.hi < *b.hi;
}

std::vector<Interval> canonicalize(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return i.empty(); });
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.loClosed && !b.loClosed;
  });
  std::vector<Interval> out;
  for (auto& p : parts) {
    if (out.empty()) {
      out.push_back(std::move(p));
      continue;
    }
    Interval& c = out.back();
    bool merge = !c.hi || p.lo < *c.hi || (p.lo == *c.hi && (c.hiClosed || p.loClosed));
    if (!merge) {
      out.push_back(std::move(p));
      continue;
    }
    if (hiLess(c, p)) {
      c.hi = p.hi;
      c.hiClosed = p.hiClosed;
    } else if (c.hi && p.hi && *c.hi == *p.hi) {
      c.hiClosed = c.hiClosed || p.hiClosed;
    }
  }
  return out;
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<Interval> pieces) {
  for (const auto& p : pieces) {
    if (sgn(p.lo) < 0 || (p.hi && sgn(*p.hi) < 0)) {
      throw std::invalid_argument("interval endpoint outside [0,inf): " + toString(p));
    }
    if (!p.hi && p.hiClosed) throw std::invalid_argument("closed at infinity");
  }
  parts_ = canonicalize(std::move(pieces));
}

IntervalUnion IntervalUnion::points(const std::vector<Rational>& pts) {
  std::vector<Interval> parts;
  for (const auto& p : pts) parts.push_back(Interval::point(p));
  return IntervalUnion(std::move(parts));
}

bool IntervalUnion::contains(const Rational& r) const { return componentContaining(r) != nullptr; }

const Interval* IntervalUnion::componentContaining(const Rational& r) const {
  for (const auto& p : parts_) {
    if (p.contains(r)) return &p;
  }
  return nullptr;
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalUnion(std::move(all));
}

namespace {

Interval intersectOne(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.loClosed = a.loClosed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.loClosed = b.loClosed;
  } else {
    r.lo = a.lo;
    r.loClosed = a.loClosed && b.loClosed;
  }
  if (hiLess(a, b)) {
    r.hi = a.hi;
    r.hiClosed = a.hiClosed;
  } else if (hiLess(b, a)) {
    r.hi = b.hi;
    r.hiClosed = b.hiClosed;
  } else {
    r.hi = a.hi;
    r.hiClosed = a.hiClosed && b.hiClosed;
  }
  return r;
}

}  // namespace

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
  std::vector<Interval> out;
  for (const auto& a : parts_) {
    for (const auto& b : other.parts_) out.push_back(intersectOne(a, b));
  }
  return IntervalUnion(std::move(out));
}

bool IntervalUnion::isSubsetOf(const IntervalUnion& other) const {
  return intersect(other) == *this;
}

std::string toString(const IntervalUnion& u) {
  if (u.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < u.components().size(); ++i) {
    if (i) out += " U ";
    out += toString(u.components()[i]);
  }
  return out;
}

IntervalUnion scaleBy(const IntervalUnion& u, const Rational& t) {
  if (sgn(t) < 0) throw std::invalid_argument("scaleBy: negative factor");
  if (u.empty()) return u;
  if (isZero(t)) return IntervalUnion::points({Rational(0)});
  std::vector<Interval> out;
  for (auto p : u.components()) {
    p.lo *= t;
    if (p.hi) *p.hi *= t;
    out.push_back(std::move(p));
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion minkowskiSum(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> out;
  for (const auto& p : a.components()) {
    for (const auto& q : b.components()) {
      Interval s;
      s.lo = p.lo + q.lo;
      s.loClosed = p.loClosed && q.loClosed;
      if (p.hi && q.hi) {
        s.hi = *p.hi + *q.hi;
        s.hiClosed = p.hiClosed && q.hiClosed;
      }
      out.push_back(std::move(s));
    }
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion translate(const IntervalUnion& u, const Rational& x) {
  return minkowskiSum(u, IntervalUnion::points({x}));
}

IntervalUnion upSet(const IntervalUnion& u) {
  if (u.empty()) return u;
  const Interval& first = u.components().front();
  return IntervalUnion{Interval{first.lo, first.loClosed, std::nullopt, false}};
}

IntervalUnion downSet(const IntervalUnion& u) {
  if (u.empty()) return u;
  const Interval& last = u.components().back();
  return IntervalUnion{Interval{Rational(0), true, last.hi, last.hiClosed}};
}

}  // namespace evs
