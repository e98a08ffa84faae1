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

#ifndef EVS_RATIONAL_HPP_
#define EVS_RATIONAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace evs {

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator.
using Rational = mpq_class;

Rational makeRational(long num, long den = 1);

// Renders as "p" for integers and "p/q" otherwise.
std::string toString(const Rational& q);

// Accepts "p", "-p", "p/q"; rejects zero denominators and anything else.
std::optional<Rational> parseRational(std::string_view text);

// Exact square root when q is the square of a rational.
std::optional<Rational> exactSqrt(const Rational& q);

inline bool isZero(const Rational& q) { return sgn(q) == 0; }

}  // namespace evs

#endif  // EVS_RATIONAL_HPP_
