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

#include "evs/evs.hpp"

#include <cmath>
#include <stdexcept>

namespace evs {

std::vector<Element> EvsDescriptor::sample(Rng& rng, std::size_t count) const {
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampleOne(rng));
  return out;
}

std::vector<Element> EvsDescriptor::sample(std::uint64_t seed, std::size_t count) const {
  Rng rng(seed);
  return sample(rng, count);
}

bool EvsDescriptor::admits(const Scalar& s) const {
  if (fieldMode == FieldMode::Real && !s.isReal()) return false;
  if (scalarMode == ScalarMode::PythagoreanOnly && !isPythagorean(s)) return false;
  return true;
}

Scalar EvsDescriptor::randomScalar(Rng& rng, const Rational& radius) const {
  return evs::randomScalar(radius, rng, scalarMode, fieldMode);
}

std::vector<Scalar> EvsDescriptor::scalars(Rng& rng, const Rational& radius,
                                           std::size_t count) const {
  return sampleScalars(radius, count, rng, scalarMode, fieldMode);
}

std::size_t samplesPerVariable(std::uint64_t budget, unsigned k) {
  if (k == 0) return 1;
  auto per = static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(budget), 1.0 / k)));
  // pow can land a hair below an exact integer root.
  while (per > 1 && std::pow(static_cast<double>(per - 1), k) >= static_cast<double>(budget)) {
    --per;
  }
  return per < 1 ? 1 : per;
}

std::vector<std::pair<Element, Element>> comparablePairs(const EvsDescriptor& e,
                                                         const std::vector<Element>& pool,
                                                         std::size_t maxPairs) {
  std::vector<std::pair<Element, Element>> out;
  const Scalar half(makeRational(1, 2));
  for (const auto& x : pool) {
    if (out.size() >= maxPairs) return out;
    out.emplace_back(e.primitiveWitness(x), x);
    if (out.size() >= maxPairs) return out;
    out.emplace_back(x, e.add(e.scale(half, x), e.scale(half, x)));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (out.size() >= maxPairs) return out;
      if (e.leq(pool[i], pool[j])) out.emplace_back(pool[i], pool[j]);
    }
  }
  return out;
}

namespace {

using ElemVec = std::vector<Element>;
using ScalVec = std::vector<Scalar>;

struct Law {
  std::string_view id;
  unsigned elems;
  unsigned scalars;
  bool comparable;  // elements 0 and 1 satisfy x <= y
  bool scalarSum;   // scalars 0 and 1 have an admissible sum
  bool primitiveHeavy;
  std::function<bool(const EvsDescriptor&, const ElemVec&, const ScalVec&)> holds;
};

const std::vector<Law>& axiomLaws() {
  static const std::vector<Law> laws = {
      {"A1.assoc", 3, 0, false, false, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec&) {
         return e.add(e.add(x[0], x[1]), x[2]) == e.add(x[0], e.add(x[1], x[2]));
       }},
      {"A1.comm", 2, 0, false, false, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec&) {
         return e.add(x[0], x[1]) == e.add(x[1], x[0]);
       }},
      {"A1.id", 1, 0, false, false, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec&) {
         return e.add(x[0], e.zero) == x[0] && e.add(e.zero, x[0]) == x[0];
       }},
      {"A2.add", 3, 0, true, false, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec&) {
         return !e.leq(x[0], x[1]) || e.leq(e.add(x[0], x[2]), e.add(x[1], x[2]));
       }},
      {"A2.scale", 2, 1, true, false, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec& a) {
         return !e.leq(x[0], x[1]) || e.leq(e.scale(a[0], x[0]), e.scale(a[0], x[1]));
       }},
      {"A3.i", 2, 1, false, false, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec& a) {
         return e.scale(a[0], e.add(x[0], x[1])) ==
                e.add(e.scale(a[0], x[0]), e.scale(a[0], x[1]));
       }},
      {"A3.ii", 1, 2, false, false, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec& a) {
         return e.scale(a[0], e.scale(a[1], x[0])) == e.scale(a[0] * a[1], x[0]);
       }},
      {"A3.iii", 1, 2, false, true, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec& a) {
         if (!e.admits(a[0] + a[1])) return true;
         return e.leq(e.scale(a[0] + a[1], x[0]),
                      e.add(e.scale(a[0], x[0]), e.scale(a[1], x[0])));
       }},
      {"A3.iv", 1, 0, false, false, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec&) {
         return e.scale(Scalar(1), x[0]) == x[0];
       }},
      {"A4", 1, 1, false, false, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec& a) {
         bool lhs = e.scale(a[0], x[0]) == e.zero;
         bool rhs = a[0].isZero() || x[0] == e.zero;
         return lhs == rhs;
       }},
      {"A5.fwd", 1, 0, false, false, true,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec&) {
         return !e.isPrimitive(x[0]) || e.add(x[0], e.scale(Scalar(-1), x[0])) == e.zero;
       }},
      {"A5.bwd", 1, 0, false, false, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec&) {
         return e.isPrimitive(x[0]) || !(e.add(x[0], e.scale(Scalar(-1), x[0])) == e.zero);
       }},
      {"A6", 1, 0, false, false, false,
       [](const EvsDescriptor& e, const ElemVec& x, const ScalVec&) {
         Element p = e.primitiveWitness(x[0]);
         return e.isPrimitive(p) && e.leq(p, x[0]);
       }},
  };
  return laws;
}

// Pairs (a, b) of admissible scalars whose sum is admissible too.
std::vector<std::pair<Scalar, Scalar>> scalarPairs(const EvsDescriptor& e, Rng& rng,
                                                   std::size_t count) {
  std::vector<std::pair<Scalar, Scalar>> out;
  std::vector<std::pair<Scalar, Scalar>> fixed = {
      {Scalar(1), Scalar(-1)},
      {Scalar(makeRational(1, 2)), Scalar(makeRational(1, 2))},
      {Scalar(0), Scalar(1)},
      {Scalar(-2), Scalar(makeRational(1, 3))}};
  if (e.fieldMode == FieldMode::Complex) {
    fixed.emplace_back(Scalar(makeRational(3, 5), makeRational(4, 5)),
                       Scalar(makeRational(3, 5), makeRational(-4, 5)));
  }
  for (auto& p : fixed) {
    if (out.size() < count) out.push_back(p);
  }
  const Rational radius(2);
  while (out.size() < count) {
    Scalar a = e.randomScalar(rng, radius);
    Scalar b;
    switch (rng.below(3)) {
      case 0: {
        bool found = false;
        for (int tries = 0; tries < 8 && !found; ++tries) {
          b = e.randomScalar(rng, radius);
          found = e.admits(a + b);
        }
        if (!found) b = a * Scalar(rng.smallRational(4, 4, true));
        break;
      }
      case 1:
        b = a * Scalar(rng.smallRational(4, 4, true));
        break;
      default:
        b = -a;
        break;
    }
    out.emplace_back(a, b);
  }
  return out;
}

// Odometer over a cartesian product; stops when visit returns false.
template <class Visit>
std::uint64_t enumerate(const std::vector<std::size_t>& sizes, Visit&& visit) {
  for (auto s : sizes) {
    if (s == 0) return 0;
  }
  std::vector<std::size_t> idx(sizes.size(), 0);
  std::uint64_t visited = 0;
  for (;;) {
    ++visited;
    if (!visit(idx)) return visited;
    std::size_t d = 0;
    while (d < idx.size()) {
      if (++idx[d] < sizes[d]) break;
      idx[d] = 0;
      ++d;
    }
    if (d == idx.size()) return visited;
  }
}

CheckOutcome checkLaw(const EvsDescriptor& e, const Law& law, std::uint64_t budget,
                      std::uint64_t seed) {
  Rng rng = Rng::forCheck(seed, std::string("axioms/") + std::string(law.id));
  const std::size_t per = samplesPerVariable(budget, law.elems + law.scalars);

  ElemVec pool = e.sample(rng, per);
  if (!pool.empty()) pool[0] = e.zero;
  if (pool.size() > 2) pool[1] = e.primitiveWitness(pool[2]);
  if (law.primitiveHeavy) {
    const std::size_t n = pool.size();
    for (std::size_t i = 0; i < n; ++i) pool.push_back(e.primitiveWitness(pool[i]));
  }

  std::vector<std::pair<Element, Element>> pairs;
  if (law.comparable) pairs = comparablePairs(e, pool, per * per);
  ScalVec spool;
  std::vector<std::pair<Scalar, Scalar>> spairs;
  if (law.scalarSum) {
    spairs = scalarPairs(e, rng, per * per);
  } else if (law.scalars > 0) {
    spool = e.scalars(rng, Rational(2), per);
  }

  std::vector<std::size_t> sizes;
  unsigned freeElems = law.elems;
  if (law.comparable) {
    sizes.push_back(pairs.size());
    freeElems -= 2;
  }
  for (unsigned i = 0; i < freeElems; ++i) sizes.push_back(pool.size());
  if (law.scalarSum) {
    sizes.push_back(spairs.size());
  } else {
    for (unsigned i = 0; i < law.scalars; ++i) sizes.push_back(spool.size());
  }

  std::optional<Witness> witness;
  ElemVec xs;
  ScalVec as;
  std::uint64_t tried = enumerate(sizes, [&](const std::vector<std::size_t>& idx) {
    xs.clear();
    as.clear();
    std::size_t d = 0;
    if (law.comparable) {
      xs.push_back(pairs[idx[d]].first);
      xs.push_back(pairs[idx[d]].second);
      ++d;
    }
    for (unsigned i = 0; i < freeElems; ++i) xs.push_back(pool[idx[d++]]);
    if (law.scalarSum) {
      as.push_back(spairs[idx[d]].first);
      as.push_back(spairs[idx[d]].second);
      ++d;
    } else {
      for (unsigned i = 0; i < law.scalars; ++i) as.push_back(spool[idx[d++]]);
    }
    if (law.holds(e, xs, as)) return true;
    witness = Witness{xs, as, std::string(law.id) + " violated"};
    return false;
  });

  if (witness) return CheckOutcome::refuted(*witness, tried, seed);
  if (e.exactlyVerified) {
    return CheckOutcome::proven(tried, seed, "instance laws verified as exact identities");
  }
  return CheckOutcome::unfalsified(tried, seed);
}

}  // namespace

OutcomeMap checkAxioms(const EvsDescriptor& e, std::uint64_t budget, std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("checkAxioms: budget must be >= 1");
  OutcomeMap out;
  for (const auto& law : axiomLaws()) {
    out.emplace(std::string(law.id), checkLaw(e, law, budget, seed));
  }
  return out;
}

bool axiomViolated(const EvsDescriptor& e, std::string_view axiomId, const Witness& w) {
  for (const auto& law : axiomLaws()) {
    if (law.id != axiomId) continue;
    if (w.elements.size() != law.elems || w.scalars.size() != law.scalars) return false;
    return !law.holds(e, w.elements, w.scalars);
  }
  throw std::invalid_argument("unknown axiom id " + std::string(axiomId));
}

CheckOutcome checkPartialOrder(const EvsDescriptor& e, std::uint64_t budget, std::uint64_t seed) {
  Rng rng = Rng::forCheck(seed, "order");
  const std::size_t per = samplesPerVariable(budget, 2);
  ElemVec pool = e.sample(rng, per);
  pool.push_back(e.zero);
  std::uint64_t tried = 0;
  for (const auto& x : pool) {
    ++tried;
    if (!e.leq(x, x)) return CheckOutcome::refuted({{x}, {}, "reflexivity fails"}, tried, seed);
  }
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      ++tried;
      if (e.leq(x, y) && e.leq(y, x) && !(x == y)) {
        return CheckOutcome::refuted({{x, y}, {}, "antisymmetry fails"}, tried, seed);
      }
    }
  }
  auto pairs = comparablePairs(e, pool, per * per);
  const std::size_t third = samplesPerVariable(budget, 3);
  for (const auto& [x, y] : pairs) {
    ElemVec above = {e.add(e.scale(Scalar(makeRational(1, 2)), y),
                           e.scale(Scalar(makeRational(1, 2)), y))};
    for (std::size_t k = 0; k < third && k < pool.size(); ++k) above.push_back(pool[k]);
    for (const auto& z : above) {
      ++tried;
      if (e.leq(y, z) && !e.leq(x, z)) {
        return CheckOutcome::refuted({{x, y, z}, {}, "transitivity fails"}, tried, seed);
      }
    }
  }
  return CheckOutcome::unfalsified(tried, seed);
}

namespace {

void pushUnique(ElemVec& v, const Element& x) {
  for (const auto& y : v) {
    if (y == x) return;
  }
  v.push_back(x);
}

bool sameSet(const ElemVec& a, const ElemVec& b, const Element** missing) {
  for (const auto& x : a) {
    bool found = false;
    for (const auto& y : b) found = found || x == y;
    if (!found) {
      *missing = &x;
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Element> primitiveSamples(const EvsDescriptor& e, const Element& x,
                                      std::uint64_t budget, std::uint64_t seed) {
  if (e.exactPrimitives) return e.exactPrimitives(x);
  ElemVec out;
  pushUnique(out, e.primitiveWitness(x));
  Rng rng = Rng::forCheck(seed, "primitives");
  for (std::uint64_t i = 0; i < budget; ++i) {
    Element p = e.primitiveWitness(e.sampleOne(rng));
    if (e.isPrimitive(p) && e.leq(p, x)) pushUnique(out, p);
  }
  return out;
}

CheckOutcome checkPrimitiveScaling(const EvsDescriptor& e, std::uint64_t budget,
                                   std::uint64_t seed) {
  Rng rng = Rng::forCheck(seed, "primitive-scaling");
  const std::size_t per = samplesPerVariable(budget, 2);
  ElemVec pool = e.sample(rng, per);
  ScalVec alphas = e.scalars(rng, Rational(2), per);
  std::uint64_t tried = 0;
  for (const auto& x : pool) {
    for (const auto& a : alphas) {
      ++tried;
      const Element ax = e.scale(a, x);
      if (e.exactPrimitives) {
        ElemVec lhs = e.exactPrimitives(ax);
        ElemVec rhs;
        for (const auto& p : e.exactPrimitives(x)) pushUnique(rhs, e.scale(a, p));
        const Element* miss = nullptr;
        if (!sameSet(rhs, lhs, &miss)) {
          return CheckOutcome::refuted({{x, *miss}, {a}, "alpha P_x not inside P_(alpha x)"},
                                       tried, seed);
        }
        if (!sameSet(lhs, rhs, &miss)) {
          return CheckOutcome::refuted({{x, *miss}, {a}, "P_(alpha x) not inside alpha P_x"},
                                       tried, seed);
        }
        continue;
      }
      // Membership in P_y is decidable (isPrimitive and leq), so both
      // inclusions can be tested on the witnesses.
      const Element p = e.primitiveWitness(x);
      const Element ap = e.scale(a, p);
      if (!(e.isPrimitive(ap) && e.leq(ap, ax))) {
        return CheckOutcome::refuted({{x, p}, {a}, "alpha p not in P_(alpha x)"}, tried, seed);
      }
      const Element q = e.primitiveWitness(ax);
      if (a.isZero()) {
        if (!(q == e.zero)) {
          return CheckOutcome::refuted({{x, q}, {a}, "P_theta is not {theta}"}, tried, seed);
        }
        continue;
      }
      const Element pre = e.scale(Scalar(1) / a, q);
      if (!(e.isPrimitive(pre) && e.leq(pre, x) && e.scale(a, pre) == q)) {
        return CheckOutcome::refuted({{x, q}, {a}, "primitive of alpha x has no preimage in P_x"},
                                     tried, seed);
      }
    }
  }
  return CheckOutcome::unfalsified(tried, seed);
}

OrderMorphism compose(const OrderMorphism& g, const OrderMorphism& f) {
  OrderMorphism h;
  h.name = g.name + "." + f.name;
  h.map = [g, f](const Element& x) { return g.map(f.map(x)); };
  if (g.hasInverse() && f.hasInverse()) {
    h.inverse = [g, f](const Element& y) { return f.inverse(g.inverse(y)); };
  }
  return h;
}

CheckOutcome checkOrderMorphism(const OrderMorphism& f, const EvsDescriptor& source,
                                const EvsDescriptor& target, std::uint64_t budget,
                                std::uint64_t seed) {
  Rng rng = Rng::forCheck(seed, "morphism/" + f.name);
  const std::size_t per = samplesPerVariable(budget, 2);
  ElemVec pool = source.sample(rng, per);
  pool.push_back(source.zero);
  std::uint64_t tried = 0;

  for (const auto& x : pool) {
    for (const auto& y : pool) {
      ++tried;
      if (!(f(source.add(x, y)) == target.add(f(x), f(y)))) {
        return CheckOutcome::refuted({{x, y}, {}, "additivity: f(x+y) != f(x)+f(y)"}, tried,
                                     seed);
      }
    }
  }

  ScalVec alphas;
  while (alphas.size() < per) {
    Scalar a = source.randomScalar(rng, Rational(2));
    if (target.admits(a)) alphas.push_back(a);
  }
  alphas.front() = Scalar(0);
  for (const auto& x : pool) {
    for (const auto& a : alphas) {
      ++tried;
      if (!(f(source.scale(a, x)) == target.scale(a, f(x)))) {
        return CheckOutcome::refuted({{x}, {a}, "homogeneity: f(ax) != a f(x)"}, tried, seed);
      }
    }
  }

  auto pairs = comparablePairs(source, pool, per * per);
  for (const auto& [x, y] : pairs) {
    ++tried;
    if (!target.leq(f(x), f(y))) {
      return CheckOutcome::refuted({{x, y}, {}, "monotonicity: x <= y but f(x) !<= f(y)"}, tried,
                                   seed);
    }
  }

  // Preimage conditions over the pool enlarged by the comparable pairs.
  ElemVec pre = pool;
  for (const auto& [x, y] : pairs) {
    pushUnique(pre, x);
    pushUnique(pre, y);
  }
  ElemVec img;
  img.reserve(pre.size());
  for (const auto& x : pre) img.push_back(f(x));
  for (std::size_t i = 0; i < pre.size(); ++i) {
    for (std::size_t j = 0; j < pre.size(); ++j) {
      ++tried;
      if (!target.leq(img[i], img[j])) continue;
      for (std::size_t s = 0; s < pre.size(); ++s) {
        if (!(img[s] == img[i])) continue;
        bool found = false;
        for (std::size_t t = 0; t < pre.size() && !found; ++t) {
          found = img[t] == img[j] && source.leq(pre[s], pre[t]);
        }
        if (!found) {
          return CheckOutcome::refuted(
              {{pre[s], pre[j]}, {}, "preimage: f^-1(p) not inside down f^-1(q)"}, tried, seed);
        }
      }
      for (std::size_t t = 0; t < pre.size(); ++t) {
        if (!(img[t] == img[j])) continue;
        bool found = false;
        for (std::size_t s = 0; s < pre.size() && !found; ++s) {
          found = img[s] == img[i] && source.leq(pre[s], pre[t]);
        }
        if (!found) {
          return CheckOutcome::refuted(
              {{pre[i], pre[t]}, {}, "preimage: f^-1(q) not inside up f^-1(p)"}, tried, seed);
        }
      }
    }
  }
  return CheckOutcome::unfalsified(tried, seed);
}

CheckOutcome checkSubevs(const EvsDescriptor& e,
                         const std::function<bool(const Element&)>& memberOfY,
                         std::uint64_t budget, std::uint64_t seed,
                         const std::function<Element(Rng&)>& ySampler) {
  Rng rng = Rng::forCheck(seed, "subevs");
  const std::size_t per = samplesPerVariable(budget, 3);
  ElemVec pool;
  if (memberOfY(e.zero)) pool.push_back(e.zero);
  for (std::size_t attempts = 0; pool.size() < per && attempts < 64 * per; ++attempts) {
    Element y = ySampler ? ySampler(rng) : e.sampleOne(rng);
    if (memberOfY(y)) pool.push_back(y);
  }
  ScalVec alphas = e.scalars(rng, Rational(2), per);
  std::uint64_t tried = 0;
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      for (const auto& a : alphas) {
        ++tried;
        Element z = e.add(e.scale(a, x), y);
        if (!memberOfY(z)) {
          return CheckOutcome::refuted({{x, y, z}, {a}, "closure: alpha x + y leaves Y"}, tried,
                                       seed);
        }
      }
    }
  }
  // A subevs has Y0 = X0 n Y, so each y needs a primitive of X inside Y
  // below it. With exact primitive sets a miss is a genuine violation.
  bool exact = static_cast<bool>(e.exactPrimitives);
  for (const auto& y : pool) {
    ++tried;
    ElemVec prims = exact ? e.exactPrimitives(y) : ElemVec{e.primitiveWitness(y)};
    bool found = false;
    for (const auto& p : prims) found = found || memberOfY(p);
    if (!found && exact) {
      return CheckOutcome::refuted({{y}, {}, "no primitive of Y below y"}, tried, seed);
    }
  }
  return CheckOutcome::unfalsified(tried, seed,
                                   exact ? "" : "primitive clause checked on witnesses only");
}

EvsDescriptor productEvs(const std::vector<EvsDescriptor>& parts) {
  if (parts.empty()) throw std::invalid_argument("productEvs: empty part list");
  EvsDescriptor p;
  p.name = "product:(";
  p.fieldMode = parts.front().fieldMode;
  p.exactlyVerified = true;
  bool allExact = true;
  ProductElem zero;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    if (part.fieldMode != p.fieldMode) {
      throw std::invalid_argument("productEvs: parts over different fields");
    }
    p.name += (i ? "," : "") + part.name;
    if (part.scalarMode == ScalarMode::PythagoreanOnly) p.scalarMode = ScalarMode::PythagoreanOnly;
    p.exactlyVerified = p.exactlyVerified && part.exactlyVerified;
    allExact = allExact && static_cast<bool>(part.exactPrimitives);
    zero.parts.push_back(part.zero);
  }
  p.name += ")";
  p.zero = zero;

  p.add = [parts](const Element& x, const Element& y) {
    const auto& a = x.as<ProductElem>();
    const auto& b = y.as<ProductElem>();
    ProductElem out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out.parts.push_back(parts[i].add(a.parts[i], b.parts[i]));
    }
    return Element(out);
  };
  p.scale = [parts](const Scalar& s, const Element& x) {
    const auto& a = x.as<ProductElem>();
    ProductElem out;
    for (std::size_t i = 0; i < parts.size(); ++i) out.parts.push_back(parts[i].scale(s, a.parts[i]));
    return Element(out);
  };
  p.leq = [parts](const Element& x, const Element& y) {
    const auto& a = x.as<ProductElem>();
    const auto& b = y.as<ProductElem>();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!parts[i].leq(a.parts[i], b.parts[i])) return false;
    }
    return true;
  };
  p.isPrimitive = [parts](const Element& x) {
    const auto& a = x.as<ProductElem>();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!parts[i].isPrimitive(a.parts[i])) return false;
    }
    return true;
  };
  p.primitiveWitness = [parts](const Element& x) {
    const auto& a = x.as<ProductElem>();
    ProductElem out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out.parts.push_back(parts[i].primitiveWitness(a.parts[i]));
    }
    return Element(out);
  };
  p.sampleOne = [parts](Rng& rng) {
    ProductElem out;
    for (const auto& part : parts) out.parts.push_back(part.sampleOne(rng));
    return Element(out);
  };
  if (allExact) {
    p.exactPrimitives = [parts](const Element& x) {
      const auto& a = x.as<ProductElem>();
      std::vector<ProductElem> acc(1);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<ProductElem> next;
        for (const auto& prefix : acc) {
          for (const auto& q : parts[i].exactPrimitives(a.parts[i])) {
            ProductElem ext = prefix;
            ext.parts.push_back(q);
            next.push_back(std::move(ext));
          }
        }
        acc = std::move(next);
      }
      ElemVec out(acc.begin(), acc.end());
      return out;
    };
  }
  return p;
}

}  // namespace evs
