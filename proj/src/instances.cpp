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

#include "evs/instances.hpp"

#include <charconv>
#include <stdexcept>

namespace evs {

namespace {

Rational sampleCoordinate(Rng& rng) {
  if (rng.chance(1, 6)) return Rational(0);
  return rng.smallRational(12, 6, false);
}

Scalar sampleVectorEntry(Rng& rng, FieldMode field) {
  if (rng.chance(1, 4)) return Scalar(0);
  Rational re = rng.smallRational(6, 4, true);
  if (field == FieldMode::Real || rng.chance(1, 2)) return Scalar(re);
  return {re, rng.smallRational(6, 4, true)};
}

ConeElem sampleConeElem(Rng& rng, std::size_t n, FieldMode field) {
  ConeElem c;
  c.r = rng.chance(1, 5) ? Rational(0) : rng.smallRational(12, 6, false);
  for (std::size_t i = 0; i < n; ++i) c.a.push_back(sampleVectorEntry(rng, field));
  return c;
}

std::vector<Scalar> scaleVector(const Scalar& s, const std::vector<Scalar>& a) {
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (const auto& v : a) out.push_back(s * v);
  return out;
}

std::vector<Scalar> addVectors(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

// Carrier pieces shared by the cone and the twisted product.
EvsDescriptor coneCarrier(std::size_t n, std::string name) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  EvsDescriptor d;
  d.name = std::move(name);
  d.zero = ConeElem{Rational(0), std::vector<Scalar>(n, Scalar(0))};
  d.add = [](const Element& x, const Element& y) {
    const auto& a = x.as<ConeElem>();
    const auto& b = y.as<ConeElem>();
    return Element(ConeElem{a.r + b.r, addVectors(a.a, b.a)});
  };
  d.leq = [](const Element& x, const Element& y) {
    const auto& a = x.as<ConeElem>();
    const auto& b = y.as<ConeElem>();
    return a.r <= b.r && a.a == b.a;
  };
  d.isPrimitive = [](const Element& x) { return isZero(x.as<ConeElem>().r); };
  d.primitiveWitness = [](const Element& x) {
    return Element(ConeElem{Rational(0), x.as<ConeElem>().a});
  };
  d.exactPrimitives = [](const Element& x) {
    return std::vector<Element>{ConeElem{Rational(0), x.as<ConeElem>().a}};
  };
  d.sampleOne = [n](Rng& rng) { return Element(sampleConeElem(rng, n, FieldMode::Complex)); };
  return d;
}

}  // namespace

EvsDescriptor halfLine() {
  EvsDescriptor d;
  d.name = "halfline";
  d.scalarMode = ScalarMode::PythagoreanOnly;
  d.zero = Rational(0);
  d.add = [](const Element& x, const Element& y) {
    return Element(x.as<Rational>() + y.as<Rational>());
  };
  d.scale = [](const Scalar& s, const Element& x) {
    return Element(modulusOf(s) * x.as<Rational>());
  };
  d.leq = [](const Element& x, const Element& y) { return x.as<Rational>() <= y.as<Rational>(); };
  d.isPrimitive = [](const Element& x) { return isZero(x.as<Rational>()); };
  d.primitiveWitness = [](const Element&) { return Element(Rational(0)); };
  d.exactPrimitives = [](const Element&) { return std::vector<Element>{Rational(0)}; };
  d.sampleOne = [](Rng& rng) { return Element(sampleCoordinate(rng)); };
  d.exactlyVerified = true;
  d.exactSets = {SetKind::IntervalUnion};
  return d;
}

EvsDescriptor coneProduct(std::size_t n) {
  EvsDescriptor d = coneCarrier(n, "cone:" + std::to_string(n));
  d.scalarMode = ScalarMode::PythagoreanOnly;
  d.scale = [](const Scalar& s, const Element& x) {
    const auto& c = x.as<ConeElem>();
    return Element(ConeElem{modulusOf(s) * c.r, scaleVector(s, c.a)});
  };
  d.exactSets = {SetKind::ProductSlice};
  return d;
}

EvsDescriptor twistedProduct(std::size_t n) {
  EvsDescriptor d = coneCarrier(n, "twisted:" + std::to_string(n));
  d.scale = [n](const Scalar& s, const Element& x) {
    if (s.isZero()) return Element(ConeElem{Rational(0), std::vector<Scalar>(n, Scalar(0))});
    const auto& c = x.as<ConeElem>();
    return Element(ConeElem{c.r, scaleVector(s, c.a)});
  };
  return d;
}

EvsDescriptor dictPlane() {
  EvsDescriptor d;
  d.name = "dict2";
  d.scalarMode = ScalarMode::PythagoreanOnly;
  d.zero = DictElem{Rational(0), Rational(0)};
  d.add = [](const Element& x, const Element& y) {
    const auto& p = x.as<DictElem>();
    const auto& q = y.as<DictElem>();
    return Element(DictElem{p.x + q.x, p.y + q.y});
  };
  d.scale = [](const Scalar& s, const Element& x) {
    const auto& p = x.as<DictElem>();
    Rational m = modulusOf(s);
    return Element(DictElem{m * p.x, m * p.y});
  };
  d.leq = [](const Element& x, const Element& y) {
    const auto& p = x.as<DictElem>();
    const auto& q = y.as<DictElem>();
    return p.x < q.x || (p.x == q.x && p.y <= q.y);
  };
  d.isPrimitive = [](const Element& x) {
    const auto& p = x.as<DictElem>();
    return isZero(p.x) && isZero(p.y);
  };
  d.primitiveWitness = [](const Element&) {
    return Element(DictElem{Rational(0), Rational(0)});
  };
  d.exactPrimitives = [](const Element&) {
    return std::vector<Element>{DictElem{Rational(0), Rational(0)}};
  };
  // Coarse first coordinates so that ties (decided by y) are common.
  d.sampleOne = [](Rng& rng) {
    if (rng.chance(1, 8)) return Element(DictElem{Rational(0), Rational(0)});
    Rational x = rng.smallRational(4, 2, false);
    return Element(DictElem{x, sampleCoordinate(rng)});
  };
  d.exactlyVerified = true;
  d.exactSets = {SetKind::BoxUnion};
  return d;
}

namespace {

Subspace randomSubspace(Rng& rng) {
  switch (rng.below(6)) {
    case 0:
      return Subspace::zero(2);
    case 1:
      return Subspace::full(2);
    default: {
      Rational p = rng.smallRational(4, 3, true);
      Rational q = rng.smallRational(4, 3, true);
      if (isZero(p) && isZero(q)) q = 1;
      return Subspace::span(2, {{p, q}});
    }
  }
}

}  // namespace

EvsDescriptor subspaceLattice() {
  EvsDescriptor d;
  d.name = "lattice2";
  d.zero = Subspace::zero(2);
  d.add = [](const Element& x, const Element& y) {
    return Element(Subspace::join(x.as<Subspace>(), y.as<Subspace>()));
  };
  d.scale = [](const Scalar& s, const Element& x) {
    return s.isZero() ? Element(Subspace::zero(2)) : x;
  };
  d.leq = [](const Element& x, const Element& y) {
    return x.as<Subspace>().isSubsetOf(y.as<Subspace>());
  };
  d.isPrimitive = [](const Element& x) { return x.as<Subspace>().dim() == 0; };
  d.primitiveWitness = [](const Element&) { return Element(Subspace::zero(2)); };
  d.exactPrimitives = [](const Element&) { return std::vector<Element>{Subspace::zero(2)}; };
  d.sampleOne = [](Rng& rng) { return Element(randomSubspace(rng)); };
  d.exactSets = {SetKind::LatticeFamily};
  return d;
}

EvsDescriptor halfLineWithoutModulus() {
  EvsDescriptor d = halfLine();
  d.name = "halfline[no-modulus]";
  d.exactlyVerified = false;
  d.exactSets.clear();
  d.scale = [](const Scalar& s, const Element& x) { return Element(s.re() * x.as<Rational>()); };
  return d;
}

EvsDescriptor twistedWithoutZeroCase(std::size_t n) {
  EvsDescriptor d = twistedProduct(n);
  d.name = "twisted:" + std::to_string(n) + "[no-zero-case]";
  d.scale = [](const Scalar& s, const Element& x) {
    const auto& c = x.as<ConeElem>();
    return Element(ConeElem{c.r, scaleVector(s, c.a)});
  };
  return d;
}

EvsDescriptor latticeWithoutCanonicalSpan() {
  EvsDescriptor d = subspaceLattice();
  d.name = "lattice2[raw-span]";
  d.exactSets.clear();
  d.add = [](const Element& x, const Element& y) {
    RationalMatrix rows = x.as<Subspace>().basis();
    const auto& more = y.as<Subspace>().basis();
    rows.insert(rows.end(), more.begin(), more.end());
    return Element(Subspace::fromRawRows(2, rows));
  };
  return d;
}

std::vector<std::string> splitTopLevel(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

namespace {

std::size_t parseDimension(std::string_view text, std::string_view spec) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n < 1) {
    throw std::invalid_argument("bad dimension in instance '" + std::string(spec) + "'");
  }
  return n;
}

}  // namespace

EvsDescriptor makeInstance(std::string_view spec) {
  if (spec == "halfline") return halfLine();
  if (spec == "dict2") return dictPlane();
  if (spec == "lattice2") return subspaceLattice();
  if (spec.starts_with("cone:")) return coneProduct(parseDimension(spec.substr(5), spec));
  if (spec.starts_with("twisted:")) return twistedProduct(parseDimension(spec.substr(8), spec));
  if (spec.starts_with("product:(") && spec.ends_with(")")) {
    std::string_view inner = spec.substr(9, spec.size() - 10);
    std::vector<EvsDescriptor> parts;
    for (const auto& piece : splitTopLevel(inner, ',')) parts.push_back(makeInstance(piece));
    return productEvs(parts);
  }
  throw std::invalid_argument("unknown instance '" + std::string(spec) + "'");
}

ShippedMorphism shippedMorphism(std::string_view name) {
  EvsDescriptor line = halfLine();
  auto rational = [](const Element& x) { return x.as<Rational>(); };
  if (name == "doubling") {
    return {{"doubling", [=](const Element& x) { return Element(2 * rational(x)); },
             [=](const Element& y) { return Element(rational(y) / 2); }},
            line, line};
  }
  if (name == "identity") {
    return {{"identity", [](const Element& x) { return x; }, [](const Element& y) { return y; }},
            line, line};
  }
  if (name == "embed") {
    return {{"embed",
             [=](const Element& x) {
               return Element(ConeElem{rational(x), {Scalar(0)}});
             },
             [](const Element& y) { return Element(y.as<ConeElem>().r); }},
            line, coneProduct(1)};
  }
  if (name == "shift") {
    return {{"shift", [=](const Element& x) { return Element(rational(x) + 1); }, {}}, line, line};
  }
  if (name == "square") {
    return {{"square", [=](const Element& x) { return Element(rational(x) * rational(x)); }, {}},
            line, line};
  }
  throw std::invalid_argument("unknown morphism '" + std::string(name) + "'");
}

std::vector<std::string> shippedMorphismNames() {
  return {"doubling", "embed", "identity", "shift", "square"};
}

}  // namespace evs
