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

#ifndef EVS_ELEMENT_HPP_
#define EVS_ELEMENT_HPP_

#include <string>
#include <variant>
#include <vector>

#include "evs/rational.hpp"
#include "evs/scalar.hpp"
#include "evs/subspace.hpp"

namespace evs {

// (r, a) with r >= 0; shared by the cone and twisted products.
struct ConeElem {
  Rational r;
  std::vector<Scalar> a;

  friend bool operator==(const ConeElem& x, const ConeElem& y) {
    return x.r == y.r && x.a == y.a;
  }
};

// Point of the dictionary-ordered quadrant.
struct DictElem {
  Rational x;
  Rational y;

  friend bool operator==(const DictElem& p, const DictElem& q) {
    return p.x == q.x && p.y == q.y;
  }
};

struct Element;

struct ProductElem {
  std::vector<Element> parts;
};

/// Value of any shipped instance. Half-line points are bare rationals.
/// Equality is structural on canonical forms.
struct Element {
  std::variant<Rational, ConeElem, DictElem, Subspace, ProductElem> value;

  Element() = default;
  Element(Rational r) : value(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Element(ConeElem c) : value(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  Element(DictElem d) : value(std::move(d)) {}  // NOLINT(google-explicit-constructor)
  Element(Subspace s) : value(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Element(ProductElem p) : value(std::move(p)) {}  // NOLINT(google-explicit-constructor)

  template <class T>
  const T& as() const {
    return std::get<T>(value);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(value);
  }
};

bool operator==(const Element& a, const Element& b);
bool operator==(const ProductElem& a, const ProductElem& b);

// Exact rendering; rationals as p/q.
std::string toString(const Element& e);

}  // namespace evs

#endif  // EVS_ELEMENT_HPP_
