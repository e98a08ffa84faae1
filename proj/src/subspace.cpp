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

#include "evs/subspace.hpp"

#include <stdexcept>

namespace evs {

RationalMatrix reducedRowEchelon(RationalMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pivotRow = 0;
  for (std::size_t col = 0; col < cols && pivotRow < rows.size(); ++col) {
    std::size_t sel = pivotRow;
    while (sel < rows.size() && isZero(rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivotRow], rows[sel]);
    const Rational pivot = rows[pivotRow][col];
    for (auto& v : rows[pivotRow]) v /= pivot;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivotRow || isZero(rows[r][col])) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[pivotRow][c];
    }
    ++pivotRow;
  }
  rows.resize(pivotRow);
  return rows;
}

std::size_t rank(const RationalMatrix& rows) { return reducedRowEchelon(rows).size(); }

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  RationalMatrix id(ambient, RationalVector(ambient, Rational(0)));
  for (std::size_t i = 0; i < ambient; ++i) id[i][i] = 1;
  return span(ambient, id);
}

Subspace Subspace::span(std::size_t ambient, const RationalMatrix& generators) {
  for (const auto& g : generators) {
    if (g.size() != ambient) throw std::invalid_argument("Subspace::span: dimension mismatch");
  }
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = reducedRowEchelon(generators);
  return s;
}

Subspace Subspace::fromRawRows(std::size_t ambient, RationalMatrix rows) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = std::move(rows);
  return s;
}

bool Subspace::contains(const RationalVector& v) const {
  RationalMatrix m = basis_;
  m.push_back(v);
  return rank(m) == rank(basis_);
}

bool Subspace::isSubsetOf(const Subspace& other) const {
  RationalMatrix m = other.basis_;
  m.insert(m.end(), basis_.begin(), basis_.end());
  return rank(m) == rank(other.basis_);
}

Subspace Subspace::join(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("Subspace::join: ambient mismatch");
  RationalMatrix m = a.basis_;
  m.insert(m.end(), b.basis_.begin(), b.basis_.end());
  return span(a.ambient_, m);
}

std::string toString(const Subspace& s) {
  if (s.dim() == 0) return "zero";
  if (s.ambient() == 2 && s == Subspace::full(2)) return "full";
  std::string out = "span(";
  for (std::size_t r = 0; r < s.basis().size(); ++r) {
    if (r) out += ";";
    for (std::size_t c = 0; c < s.basis()[r].size(); ++c) {
      if (c) out += ",";
      out += toString(s.basis()[r][c]);
    }
  }
  return out + ")";
}

}  // namespace evs
