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

#include "evs/scalar.hpp"

#include <stdexcept>

namespace evs {

Scalar operator/(const Scalar& a, const Scalar& b) {
  Rational d = modulusSquared(b);
  if (isZero(d)) throw std::domain_error("scalar division by zero");
  Scalar n = a * b.conj();
  return {n.re_ / d, n.im_ / d};
}

Rational modulusSquared(const Scalar& s) { return s.re() * s.re() + s.im() * s.im(); }

bool modulusLeq(const Scalar& s, const Rational& c) {
  if (sgn(c) < 0) throw std::invalid_argument("modulusLeq: negative bound");
  return modulusSquared(s) <= c * c;
}

std::optional<Rational> exactModulus(const Scalar& s) {
  if (s.isReal()) return Rational(abs(s.re()));
  return exactSqrt(modulusSquared(s));
}

Rational modulusOf(const Scalar& s) {
  auto m = exactModulus(s);
  if (!m) throw std::domain_error("scalar " + toString(s) + " has irrational modulus");
  return *m;
}

namespace {

// (a + b i) / c with a^2 + b^2 = c^2 from Euclid's formula.
Scalar randomUnit(Rng& rng) {
  long m = rng.between(2, 7);
  long n = rng.between(1, m - 1);
  long a = m * m - n * n;
  long b = 2 * m * n;
  long c = m * m + n * n;
  if (rng.chance(1, 2)) std::swap(a, b);
  if (rng.chance(1, 2)) a = -a;
  if (rng.chance(1, 2)) b = -b;
  return {makeRational(a, c), makeRational(b, c)};
}

Rational fractionOf(const Rational& bound, Rng& rng, bool allowNegative) {
  long den = rng.between(1, 8);
  long num = rng.between(allowNegative ? -den : 0, den);
  return bound * makeRational(num, den);
}

}  // namespace

Scalar randomScalar(const Rational& radiusBound, Rng& rng, ScalarMode mode, FieldMode field) {
  if (field == FieldMode::Real || rng.chance(1, 3)) {
    return {fractionOf(radiusBound, rng, true)};
  }
  if (mode == ScalarMode::PythagoreanOnly) {
    return randomUnit(rng) * Scalar(fractionOf(radiusBound, rng, false));
  }
  for (;;) {
    Scalar s{fractionOf(radiusBound, rng, true), fractionOf(radiusBound, rng, true)};
    if (modulusLeq(s, radiusBound)) return s;
  }
}

std::vector<Scalar> sampleScalars(const Rational& radiusBound, std::size_t count, Rng& rng,
                                  ScalarMode mode, FieldMode field) {
  if (sgn(radiusBound) <= 0) throw std::invalid_argument("sampleScalars: radius must be > 0");
  std::vector<Scalar> prefix;
  if (field == FieldMode::Complex) {
    prefix.emplace_back(radiusBound * makeRational(3, 5), radiusBound * makeRational(4, 5));
  }
  prefix.emplace_back(Rational(0));
  prefix.emplace_back(radiusBound);
  prefix.emplace_back(Rational(-radiusBound));

  std::vector<Scalar> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i < prefix.size()) {
      out.push_back(prefix[i]);
    } else {
      out.push_back(randomScalar(radiusBound, rng, mode, field));
    }
  }
  return out;
}

std::vector<Scalar> sampleScalars(const Rational& radiusBound, std::size_t count,
                                  std::uint64_t seed, ScalarMode mode, FieldMode field) {
  Rng rng(seed);
  return sampleScalars(radiusBound, count, rng, mode, field);
}

std::string toString(const Scalar& s) {
  if (s.isReal()) return toString(s.re());
  // A unit imaginary part prints as a bare i.
  std::string im = s.im() == 1 ? "i" : s.im() == -1 ? "-i" : toString(s.im()) + "i";
  if (isZero(s.re())) return im;
  return toString(s.re()) + (sgn(s.im()) > 0 ? "+" : "") + im;
}

std::optional<Scalar> parseScalar(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    auto r = parseRational(text);
    if (!r) return std::nullopt;
    return Scalar(*r);
  }
  text.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if (text[i] == '+' || text[i] == '-') {
      split = i;
      break;
    }
  }
  auto parseImag = [](std::string_view t) -> std::optional<Rational> {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    if (t.front() == '+') t.remove_prefix(1);
    return parseRational(t);
  };
  if (split == std::string_view::npos) {
    auto im = parseImag(text);
    if (!im) return std::nullopt;
    return Scalar(Rational(0), *im);
  }
  auto re = parseRational(text.substr(0, split));
  auto im = parseImag(text.substr(split));
  if (!re || !im) return std::nullopt;
  return Scalar(*re, *im);
}

}  // namespace evs
