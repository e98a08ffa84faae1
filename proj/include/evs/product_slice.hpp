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

#ifndef EVS_PRODUCT_SLICE_HPP_
#define EVS_PRODUCT_SLICE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "evs/element.hpp"
#include "evs/interval_union.hpp"

namespace evs {

using ScalarVector = std::vector<Scalar>;

/// Vector part of a slice: a finite set of vectors, or a max-norm ball
/// {a : max |a_i| < t} (closed with <=). A ball without radius is all of K^n.
class VectorRegion {
 public:
  enum class Kind { Finite, Ball };

  static VectorRegion finite(std::size_t dim, std::vector<ScalarVector> points);
  static VectorRegion ball(std::size_t dim, Rational radius, bool closed = false);
  static VectorRegion whole(std::size_t dim);
  static VectorRegion origin(std::size_t dim) { return finite(dim, {ScalarVector(dim)}); }

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  const std::vector<ScalarVector>& points() const { return points_; }
  const std::optional<Rational>& radius() const { return radius_; }
  bool closed() const { return closed_; }

  bool empty() const;
  bool bounded() const { return kind_ == Kind::Finite || radius_.has_value(); }
  bool contains(const ScalarVector& v) const;
  // Holds every vector of small enough norm.
  bool isNeighborhood() const { return kind_ == Kind::Ball && (!radius_ || sgn(*radius_) > 0); }
  // Closed under a -> alpha a for |alpha| <= 1.
  bool balanced() const;
  VectorRegion intersect(const VectorRegion& other) const;
  // Some member, preferring one of positive norm.
  ScalarVector samplePoint() const;

  friend bool operator==(const VectorRegion& a, const VectorRegion& b) {
    return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.points_ == b.points_ &&
           a.radius_ == b.radius_ && a.closed_ == b.closed_;
  }

 private:
  Kind kind_ = Kind::Finite;
  std::size_t dim_ = 0;
  std::vector<ScalarVector> points_;
  std::optional<Rational> radius_;
  bool closed_ = false;
};

// max_i |v_i| <= c, decided on squared moduli.
bool maxNormLeq(const ScalarVector& v, const Rational& c);
bool maxNormLess(const ScalarVector& v, const Rational& c);

struct SlicePiece {
  IntervalUnion r;
  VectorRegion a;

  friend bool operator==(const SlicePiece& p, const SlicePiece& q) {
    return p.r == q.r && p.a == q.a;
  }
};

/// Finite union of pieces I x R inside the cone [0, inf) x K^n. Empty pieces
/// are dropped and the rest sorted by their rendering.
class ProductSlice {
 public:
  ProductSlice() = default;
  ProductSlice(std::size_t dim, std::vector<SlicePiece> pieces);

  // [0, s) x ball(t), the basic balanced neighborhoods.
  static ProductSlice basic(std::size_t dim, const Rational& s, const Rational& t);

  std::size_t dim() const { return dim_; }
  const std::vector<SlicePiece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool contains(const ConeElem& x) const;
  bool bounded() const;

  ProductSlice unite(const ProductSlice& other) const;
  ProductSlice intersect(const ProductSlice& other) const;

  friend bool operator==(const ProductSlice& a, const ProductSlice& b) {
    return a.dim_ == b.dim_ && a.pieces_ == b.pieces_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<SlicePiece> pieces_;
};

std::string toString(const ScalarVector& v);
std::string toString(const VectorRegion& r);
std::string toString(const ProductSlice& s);

// Image under alpha (r, a) = (|alpha| r, alpha a). Throws std::domain_error
// when |alpha| is irrational.
ProductSlice scaleBy(const ProductSlice& s, const Scalar& alpha);

// (r, a) <= (s, b) iff r <= s and a = b, so the closures act on the
// interval part alone.
ProductSlice upSet(const ProductSlice& s);
ProductSlice downSet(const ProductSlice& s);

// Exact for finite vector parts and for ball + ball; throws
// std::invalid_argument for a finite set plus a ball.
ProductSlice minkowskiSum(const ProductSlice& a, const ProductSlice& b);

}  // namespace evs

#endif  // EVS_PRODUCT_SLICE_HPP_
