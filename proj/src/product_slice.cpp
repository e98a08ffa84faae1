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

#include "evs/product_slice.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace evs {

namespace {

bool vectorLess(const ScalarVector& a, const ScalarVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Scalar& x, const Scalar& y) {
                                        return std::tie(x.re(), x.im()) < std::tie(y.re(), y.im());
                                      });
}

void checkDim(const ScalarVector& v, std::size_t dim) {
  if (v.size() != dim) throw std::invalid_argument("vector of wrong dimension: " + toString(v));
}

}  // namespace

bool maxNormLeq(const ScalarVector& v, const Rational& c) {
  return std::all_of(v.begin(), v.end(), [&](const Scalar& s) { return modulusLeq(s, c); });
}

bool maxNormLess(const ScalarVector& v, const Rational& c) {
  if (sgn(c) <= 0) return false;
  const Rational c2 = c * c;
  return std::all_of(v.begin(), v.end(), [&](const Scalar& s) { return modulusSquared(s) < c2; });
}

VectorRegion VectorRegion::finite(std::size_t dim, std::vector<ScalarVector> points) {
  for (const auto& p : points) checkDim(p, dim);
  std::sort(points.begin(), points.end(), vectorLess);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  VectorRegion r;
  r.kind_ = Kind::Finite;
  r.dim_ = dim;
  r.points_ = std::move(points);
  return r;
}

VectorRegion VectorRegion::ball(std::size_t dim, Rational radius, bool closed) {
  if (sgn(radius) < 0) throw std::invalid_argument("negative ball radius");
  VectorRegion r;
  r.kind_ = Kind::Ball;
  r.dim_ = dim;
  r.radius_ = std::move(radius);
  r.closed_ = closed;
  return r;
}

VectorRegion VectorRegion::whole(std::size_t dim) {
  VectorRegion r;
  r.kind_ = Kind::Ball;
  r.dim_ = dim;
  return r;
}

bool VectorRegion::empty() const {
  if (kind_ == Kind::Finite) return points_.empty();
  return radius_ && isZero(*radius_) && !closed_;
}

bool VectorRegion::contains(const ScalarVector& v) const {
  if (v.size() != dim_) return false;
  if (kind_ == Kind::Finite) return std::binary_search(points_.begin(), points_.end(), v, vectorLess);
  if (!radius_) return true;
  return closed_ ? maxNormLeq(v, *radius_) : maxNormLess(v, *radius_);
}

bool VectorRegion::balanced() const {
  if (kind_ == Kind::Ball) return true;
  return points_.size() == 1 && points_.front() == ScalarVector(dim_);
}

ScalarVector VectorRegion::samplePoint() const {
  if (kind_ == Kind::Finite) {
    for (const auto& p : points_) {
      if (p != ScalarVector(dim_)) return p;
    }
    return points_.front();
  }
  ScalarVector v(dim_);
  if (dim_ > 0 && !empty()) v[0] = radius_ ? Scalar(*radius_ / 2) : Scalar(1);
  return v;
}

VectorRegion VectorRegion::intersect(const VectorRegion& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("region dimensions differ");
  if (kind_ == Kind::Finite || o.kind_ == Kind::Finite) {
    const VectorRegion& fin = kind_ == Kind::Finite ? *this : o;
    const VectorRegion& other = kind_ == Kind::Finite ? o : *this;
    std::vector<ScalarVector> pts;
    for (const auto& p : fin.points_) {
      if (other.contains(p)) pts.push_back(p);
    }
    return finite(dim_, std::move(pts));
  }
  if (!radius_) return o;
  if (!o.radius_) return *this;
  if (*radius_ < *o.radius_) return *this;
  if (*o.radius_ < *radius_) return o;
  return ball(dim_, *radius_, closed_ && o.closed_);
}

ProductSlice::ProductSlice(std::size_t dim, std::vector<SlicePiece> pieces) : dim_(dim) {
  for (const auto& p : pieces) {
    if (p.a.dim() != dim) throw std::invalid_argument("slice piece of wrong dimension");
  }
  std::erase_if(pieces, [](const SlicePiece& p) { return p.r.empty() || p.a.empty(); });
  std::sort(pieces.begin(), pieces.end(), [](const SlicePiece& x, const SlicePiece& y) {
    return std::make_pair(toString(x.r), toString(x.a)) <
           std::make_pair(toString(y.r), toString(y.a));
  });
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
  pieces_ = std::move(pieces);
}

ProductSlice ProductSlice::basic(std::size_t dim, const Rational& s, const Rational& t) {
  return ProductSlice(dim, {{IntervalUnion{Interval::closedOpen(Rational(0), s)},
                             VectorRegion::ball(dim, t)}});
}

bool ProductSlice::contains(const ConeElem& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [&](const SlicePiece& p) { return p.r.contains(x.r) && p.a.contains(x.a); });
}

bool ProductSlice::bounded() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const SlicePiece& p) { return p.r.bounded() && p.a.bounded(); });
}

ProductSlice ProductSlice::unite(const ProductSlice& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("slice dimensions differ");
  std::vector<SlicePiece> all = pieces_;
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return ProductSlice(dim_, std::move(all));
}

ProductSlice ProductSlice::intersect(const ProductSlice& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("slice dimensions differ");
  std::vector<SlicePiece> out;
  for (const auto& p : pieces_) {
    for (const auto& q : other.pieces_) out.push_back({p.r.intersect(q.r), p.a.intersect(q.a)});
  }
  return ProductSlice(dim_, std::move(out));
}

ProductSlice upSet(const ProductSlice& s) {
  std::vector<SlicePiece> out;
  for (const auto& p : s.pieces()) out.push_back({upSet(p.r), p.a});
  return ProductSlice(s.dim(), std::move(out));
}

ProductSlice downSet(const ProductSlice& s) {
  std::vector<SlicePiece> out;
  for (const auto& p : s.pieces()) out.push_back({downSet(p.r), p.a});
  return ProductSlice(s.dim(), std::move(out));
}

std::string toString(const ScalarVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += toString(v[i]);
  }
  return out + ")";
}

std::string toString(const VectorRegion& r) {
  if (r.kind() == VectorRegion::Kind::Ball) {
    if (!r.radius()) return "all";
    return std::string("ball") + (r.closed() ? "[" : "(") + toString(*r.radius()) +
           (r.closed() ? "]" : ")");
  }
  std::string out = "{";
  for (std::size_t i = 0; i < r.points().size(); ++i) {
    if (i) out += ",";
    out += toString(r.points()[i]);
  }
  return out + "}";
}

std::string toString(const ProductSlice& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < s.pieces().size(); ++i) {
    if (i) out += " U ";
    const auto& p = s.pieces()[i];
    const bool single = p.r.components().size() == 1;
    out += (single ? "" : "(") + toString(p.r) + (single ? "" : ")") + "x" + toString(p.a);
  }
  return out;
}

ProductSlice scaleBy(const ProductSlice& s, const Scalar& alpha) {
  const Rational m = modulusOf(alpha);
  std::vector<SlicePiece> out;
  for (const auto& p : s.pieces()) {
    VectorRegion a = p.a;
    if (alpha.isZero()) {
      a = VectorRegion::origin(s.dim());
    } else if (p.a.kind() == VectorRegion::Kind::Finite) {
      std::vector<ScalarVector> pts;
      for (auto v : p.a.points()) {
        for (auto& c : v) c = alpha * c;
        pts.push_back(std::move(v));
      }
      a = VectorRegion::finite(s.dim(), std::move(pts));
    } else if (p.a.radius()) {
      a = VectorRegion::ball(s.dim(), *p.a.radius() * m, p.a.closed());
    }
    out.push_back({scaleBy(p.r, m), std::move(a)});
  }
  return ProductSlice(s.dim(), std::move(out));
}

ProductSlice minkowskiSum(const ProductSlice& a, const ProductSlice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("slice dimensions differ");
  std::vector<SlicePiece> out;
  for (const auto& p : a.pieces()) {
    for (const auto& q : b.pieces()) {
      IntervalUnion r = minkowskiSum(p.r, q.r);
      const bool pf = p.a.kind() == VectorRegion::Kind::Finite;
      const bool qf = q.a.kind() == VectorRegion::Kind::Finite;
      if (pf && qf) {
        std::vector<ScalarVector> pts;
        for (const auto& u : p.a.points()) {
          for (const auto& v : q.a.points()) {
            ScalarVector w(a.dim());
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = u[i] + v[i];
            pts.push_back(std::move(w));
          }
        }
        out.push_back({std::move(r), VectorRegion::finite(a.dim(), std::move(pts))});
      } else if (!pf && !qf) {
        if (!p.a.radius() || !q.a.radius()) {
          out.push_back({std::move(r), VectorRegion::whole(a.dim())});
        } else {
          // Max-norm balls: B(s) + B(t) = B(s + t); closed only if both are.
          out.push_back({std::move(r), VectorRegion::ball(a.dim(), *p.a.radius() + *q.a.radius(),
                                                          p.a.closed() && q.a.closed())});
        }
      } else {
        throw std::invalid_argument("minkowskiSum: finite vector set plus ball is not representable");
      }
    }
  }
  return ProductSlice(a.dim(), std::move(out));
}

}  // namespace evs
