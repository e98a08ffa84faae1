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

#include "evs/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace evs {

Rational makeRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string toString(const Rational& q) { return q.get_str(); }

namespace {

bool isIntegerLiteral(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parseRational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!isIntegerLiteral(num)) return std::nullopt;
  if (slash != std::string_view::npos) {
    if (!isIntegerLiteral(den) || den.front() == '-') return std::nullopt;
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(slash == std::string_view::npos ? std::string("1") : std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::optional<Rational> exactSqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  Rational r(sqrt(n), sqrt(d));
  r.canonicalize();
  return r;
}

}  // namespace evs
