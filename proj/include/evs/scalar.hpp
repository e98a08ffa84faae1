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

#ifndef EVS_SCALAR_HPP_
#define EVS_SCALAR_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evs/rational.hpp"
#include "evs/rng.hpp"

namespace evs {

enum class FieldMode { Real, Complex };

// Which scalars an instance accepts. Instances whose action multiplies a
// coordinate by |alpha| only accept scalars of rational modulus.
enum class ScalarMode { AnyScalar, PythagoreanOnly };

/// Element of Q or Q(i). Real scalars are the ones with a zero imaginary
/// part; moduli are never materialized except through exactModulus.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  Scalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool isReal() const { return evs::isZero(im_); }
  bool isZero() const { return evs::isZero(re_) && evs::isZero(im_); }

  Scalar conj() const { return {re_, -im_}; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend Scalar operator-(const Scalar& a) { return {-a.re_, -a.im_}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  // Throws std::domain_error on division by zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

Rational modulusSquared(const Scalar& s);

// |s| <= c decided as |s|^2 <= c^2. Throws std::invalid_argument if c < 0.
bool modulusLeq(const Scalar& s, const Rational& c);

// |s| when it is rational (s is a Pythagorean scalar).
std::optional<Rational> exactModulus(const Scalar& s);

inline bool isPythagorean(const Scalar& s) { return exactModulus(s).has_value(); }

// Like exactModulus but throws std::domain_error for irrational moduli.
Rational modulusOf(const Scalar& s);

/// Deterministic scalars with |s| <= radiusBound. The first draws are fixed
/// boundary values: radiusBound * (3+4i)/5 (a unit of rational modulus, in
/// complex mode), 0, radiusBound and -radiusBound. In PythagoreanOnly mode
/// every output has rational modulus.
std::vector<Scalar> sampleScalars(const Rational& radiusBound, std::size_t count, Rng& rng,
                                  ScalarMode mode, FieldMode field = FieldMode::Complex);
std::vector<Scalar> sampleScalars(const Rational& radiusBound, std::size_t count,
                                  std::uint64_t seed, ScalarMode mode,
                                  FieldMode field = FieldMode::Complex);

// One random scalar with |s| <= radiusBound, no boundary prefix.
Scalar randomScalar(const Rational& radiusBound, Rng& rng, ScalarMode mode, FieldMode field);

// Literal syntax: "p/q", "p/q+r/si", "p/q-r/si", "r/si".
std::string toString(const Scalar& s);
std::optional<Scalar> parseScalar(std::string_view text);

}  // namespace evs

#endif  // EVS_SCALAR_HPP_
