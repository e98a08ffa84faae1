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

#ifndef EVS_LATTICE_FAMILY_HPP_
#define EVS_LATTICE_FAMILY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "evs/subspace.hpp"

namespace evs {

/// A set of subspaces of Q^2, either a finite list of members or everything
/// except a finite list. Lists are canonical (sorted, no duplicates), so
/// equal families compare equal.
class LatticeFamily {
 public:
  enum class Mode { Finite, Cofinite };

  LatticeFamily() = default;
  static LatticeFamily finite(std::vector<Subspace> members);
  static LatticeFamily cofinite(std::vector<Subspace> excluded);
  static LatticeFamily all() { return cofinite({}); }

  Mode mode() const { return mode_; }
  // Members in Finite mode, excluded subspaces in Cofinite mode.
  const std::vector<Subspace>& listed() const { return listed_; }

  bool contains(const Subspace& s) const;
  bool empty() const { return mode_ == Mode::Finite && listed_.empty(); }
  bool isAll() const { return mode_ == Mode::Cofinite && listed_.empty(); }

  LatticeFamily unite(const LatticeFamily& other) const;
  LatticeFamily intersect(const LatticeFamily& other) const;
  LatticeFamily complement() const;
  bool isSubsetOf(const LatticeFamily& other) const;

  // A subspace outside the family; throws std::logic_error if isAll().
  Subspace missing() const;
  // A line inside the family, if any.
  std::optional<Subspace> someLine() const;

  friend bool operator==(const LatticeFamily& a, const LatticeFamily& b) {
    return a.mode_ == b.mode_ && a.listed_ == b.listed_;
  }

 private:
  LatticeFamily(Mode mode, std::vector<Subspace> listed);

  Mode mode_ = Mode::Finite;
  std::vector<Subspace> listed_;
};

// The line through (1, k).
Subspace nthLine(std::size_t k);

// "{zero,span(1,0)}", "ALL", "ALL\{full}".
std::string toString(const LatticeFamily& f);

// Closures under inclusion.
LatticeFamily upSet(const LatticeFamily& f);
LatticeFamily downSet(const LatticeFamily& f);

}  // namespace evs

#endif  // EVS_LATTICE_FAMILY_HPP_
