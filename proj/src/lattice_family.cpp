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

#include "evs/lattice_family.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace evs {

namespace {

bool subspaceLess(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis() < b.basis();
}

std::vector<Subspace> canonical(std::vector<Subspace> v) {
  for (const auto& s : v) {
    if (s.ambient() != 2) throw std::invalid_argument("lattice family: subspace not in Q^2");
  }
  std::sort(v.begin(), v.end(), subspaceLess);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool isListed(const std::vector<Subspace>& v, const Subspace& s) {
  return std::binary_search(v.begin(), v.end(), s, subspaceLess);
}

std::vector<Subspace> setUnion(const std::vector<Subspace>& a, const std::vector<Subspace>& b) {
  std::vector<Subspace> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), subspaceLess);
  return out;
}

std::vector<Subspace> setIntersection(const std::vector<Subspace>& a,
                                      const std::vector<Subspace>& b) {
  std::vector<Subspace> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                        subspaceLess);
  return out;
}

std::vector<Subspace> setDifference(const std::vector<Subspace>& a,
                                    const std::vector<Subspace>& b) {
  std::vector<Subspace> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                      subspaceLess);
  return out;
}

}  // namespace

LatticeFamily::LatticeFamily(Mode mode, std::vector<Subspace> listed)
    : mode_(mode), listed_(canonical(std::move(listed))) {}

LatticeFamily LatticeFamily::finite(std::vector<Subspace> members) {
  return LatticeFamily(Mode::Finite, std::move(members));
}

LatticeFamily LatticeFamily::cofinite(std::vector<Subspace> excluded) {
  return LatticeFamily(Mode::Cofinite, std::move(excluded));
}

bool LatticeFamily::contains(const Subspace& s) const {
  return isListed(listed_, s) == (mode_ == Mode::Finite);
}

LatticeFamily LatticeFamily::unite(const LatticeFamily& o) const {
  if (mode_ == Mode::Finite && o.mode_ == Mode::Finite) return finite(setUnion(listed_, o.listed_));
  if (mode_ == Mode::Cofinite && o.mode_ == Mode::Cofinite) {
    return cofinite(setIntersection(listed_, o.listed_));
  }
  const auto& fin = mode_ == Mode::Finite ? listed_ : o.listed_;
  const auto& ex = mode_ == Mode::Finite ? o.listed_ : listed_;
  return cofinite(setDifference(ex, fin));
}

LatticeFamily LatticeFamily::intersect(const LatticeFamily& o) const {
  if (mode_ == Mode::Finite && o.mode_ == Mode::Finite) {
    return finite(setIntersection(listed_, o.listed_));
  }
  if (mode_ == Mode::Cofinite && o.mode_ == Mode::Cofinite) {
    return cofinite(setUnion(listed_, o.listed_));
  }
  const auto& fin = mode_ == Mode::Finite ? listed_ : o.listed_;
  const auto& ex = mode_ == Mode::Finite ? o.listed_ : listed_;
  return finite(setDifference(fin, ex));
}

LatticeFamily LatticeFamily::complement() const {
  return LatticeFamily(mode_ == Mode::Finite ? Mode::Cofinite : Mode::Finite, listed_);
}

bool LatticeFamily::isSubsetOf(const LatticeFamily& o) const {
  // A cofinite family holds infinitely many lines, so it never fits in a
  // finite one.
  if (mode_ == Mode::Cofinite && o.mode_ == Mode::Finite) return false;
  return intersect(o.complement()).empty();
}

Subspace nthLine(std::size_t k) {
  return Subspace::span(2, {{Rational(1), Rational(static_cast<long>(k))}});
}

Subspace LatticeFamily::missing() const {
  if (mode_ == Mode::Cofinite) {
    if (listed_.empty()) throw std::logic_error("missing(): family holds every subspace");
    return listed_.front();
  }
  for (std::size_t k = 0;; ++k) {
    Subspace line = nthLine(k);
    if (!isListed(listed_, line)) return line;
  }
}

std::optional<Subspace> LatticeFamily::someLine() const {
  if (mode_ == Mode::Finite) {
    for (const auto& s : listed_) {
      if (s.dim() == 1) return s;
    }
    return std::nullopt;
  }
  for (std::size_t k = 0;; ++k) {
    Subspace line = nthLine(k);
    if (!isListed(listed_, line)) return line;
  }
}

std::string toString(const LatticeFamily& f) {
  std::string body;
  for (std::size_t i = 0; i < f.listed().size(); ++i) {
    if (i) body += ",";
    body += toString(f.listed()[i]);
  }
  if (f.mode() == LatticeFamily::Mode::Finite) return "{" + body + "}";
  if (f.listed().empty()) return "ALL";
  return "ALL\\{" + body + "}";
}

// In Q^2 every chain is zero < line < full, so the closures only depend on
// which of the three layers the family meets.
LatticeFamily upSet(const LatticeFamily& f) {
  const Subspace zero = Subspace::zero(2), full = Subspace::full(2);
  if (f.contains(zero)) return LatticeFamily::all();
  if (f.mode() == LatticeFamily::Mode::Cofinite) return LatticeFamily::cofinite({zero});
  if (f.empty()) return f;
  std::vector<Subspace> out = f.listed();
  out.push_back(full);
  return LatticeFamily::finite(std::move(out));
}

LatticeFamily downSet(const LatticeFamily& f) {
  const Subspace zero = Subspace::zero(2), full = Subspace::full(2);
  if (f.contains(full)) return LatticeFamily::all();
  if (f.mode() == LatticeFamily::Mode::Cofinite) return LatticeFamily::cofinite({full});
  if (f.empty()) return f;
  std::vector<Subspace> out = f.listed();
  out.push_back(zero);
  return LatticeFamily::finite(std::move(out));
}

}  // namespace evs
