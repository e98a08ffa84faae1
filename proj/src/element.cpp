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

#include "evs/element.hpp"

namespace evs {

bool operator==(const ProductElem& a, const ProductElem& b) { return a.parts == b.parts; }

bool operator==(const Element& a, const Element& b) { return a.value == b.value; }

namespace {

struct Renderer {
  std::string operator()(const Rational& r) const { return toString(r); }
  std::string operator()(const ConeElem& c) const {
    std::string out = "(" + toString(c.r) + ",(";
    for (std::size_t i = 0; i < c.a.size(); ++i) {
      if (i) out += ",";
      out += toString(c.a[i]);
    }
    return out + "))";
  }
  std::string operator()(const DictElem& d) const {
    return "(" + toString(d.x) + "," + toString(d.y) + ")";
  }
  std::string operator()(const Subspace& s) const { return toString(s); }
  std::string operator()(const ProductElem& p) const {
    std::string out = "<";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      if (i) out += ";";
      out += toString(p.parts[i]);
    }
    return out + ">";
  }
};

}  // namespace

std::string toString(const Element& e) { return std::visit(Renderer{}, e.value); }

}  // namespace evs
