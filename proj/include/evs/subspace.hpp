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

#ifndef EVS_SUBSPACE_HPP_
#define EVS_SUBSPACE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "evs/rational.hpp"

namespace evs {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Gauss-Jordan elimination; returns the nonzero rows of the reduced row
// echelon form (pivots equal to 1, zero above and below each pivot).
RationalMatrix reducedRowEchelon(RationalMatrix rows);

/// Linear subspace of Q^n stored by its reduced row echelon basis. The basis
/// is a canonical form: two subspaces are equal iff their bases are
/// identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const RationalMatrix& generators);

  // Stores rows as given. Only for building deliberately broken instances.
  static Subspace fromRawRows(std::size_t ambient, RationalMatrix rows);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const RationalMatrix& basis() const { return basis_; }

  bool contains(const RationalVector& v) const;
  bool isSubsetOf(const Subspace& other) const;

  // span(a U b)
  static Subspace join(const Subspace& a, const Subspace& b);

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  RationalMatrix basis_;
};

std::size_t rank(const RationalMatrix& rows);

// "zero", "full" (in Q^2) or "span(1,2)"; multi-row spans list every row.
std::string toString(const Subspace& s);

}  // namespace evs

#endif  // EVS_SUBSPACE_HPP_
