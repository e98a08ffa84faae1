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

#include "evs/set_laws.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace evs {

namespace {

bool hasKind(const EvsDescriptor& e, SetKind k) {
  return std::find(e.exactSets.begin(), e.exactSets.end(), k) != e.exactSets.end();
}

Rational grid(Rng& rng, long maxSteps, long den) { return makeRational(rng.between(0, maxSteps), den); }

// One random interval; `anchored` forces [0, ...
Interval randomPiece(Rng& rng, bool anchored, long den, long maxLo, long maxLen) {
  Interval iv;
  iv.lo = anchored ? Rational(0) : grid(rng, maxLo, den);
  iv.loClosed = anchored || rng.chance(1, 2);
  if (rng.chance(1, 10)) return iv;  // unbounded
  iv.hi = iv.lo + grid(rng, maxLen, den);
  iv.hiClosed = rng.chance(1, 2);
  if (*iv.hi == iv.lo) iv.loClosed = iv.hiClosed = true;
  return iv;
}

std::size_t corpusSize(std::uint64_t budget) {
  return static_cast<std::size_t>(std::clamp<std::uint64_t>(budget, 8, 1000));
}

Element zeroOf(const EvsDescriptor& e) { return e.zero; }

struct LawTally {
  std::uint64_t tried = 0;
  std::optional<Witness> witness;

  // Records one instance of the law; a failing conclusion becomes the witness.
  void check(const CheckOutcome& conclusion, const std::string& what) {
    ++tried;
    if (witness || !conclusion.refuted()) return;
    Witness w = *conclusion.witness;
    w.description = what + ": " + w.description;
    witness = std::move(w);
  }
  void fail(Witness w) {
    ++tried;
    if (!witness) witness = std::move(w);
  }
  CheckOutcome outcome(std::uint64_t seed, const std::string& note) const {
    if (witness) return CheckOutcome::refuted(*witness, tried, seed);
    return CheckOutcome::unfalsified(tried, seed, tried ? note : "no set met the hypothesis");
  }
};

std::vector<SetRep> corpus(const EvsDescriptor& e, std::uint64_t budget, std::uint64_t seed,
                           std::string_view id) {
  Rng rng = Rng::forCheck(seed, id);
  std::vector<SetRep> out;
  const std::size_t n = corpusSize(budget);
  for (std::size_t i = 0; i < n; ++i) out.push_back(randomSet(e, rng));
  return out;
}

std::vector<Scalar> nonzeroScalars(const EvsDescriptor& e, Rng& rng, const Rational& radius,
                                   std::size_t n) {
  std::vector<Scalar> out;
  for (auto& s : e.scalars(rng, radius, n + 4)) {
    if (!s.isZero()) out.push_back(std::move(s));
  }
  return out;
}

// Separator together with the absorbing verdict that justifies it.
struct Separator {
  SetRep set;
  CheckOutcome absorbing;
};

std::optional<std::vector<EvsDescriptor>> productParts(const EvsDescriptor& e) {
  constexpr std::string_view prefix = "product:(";
  if (e.name.rfind(prefix, 0) != 0 || e.name.back() != ')') return std::nullopt;
  std::string inner = e.name.substr(prefix.size(), e.name.size() - prefix.size() - 1);
  std::vector<EvsDescriptor> parts;
  for (const auto& p : splitTopLevel(inner, ',')) parts.push_back(makeInstance(p));
  return parts;
}

std::optional<SetRep> halfLineSeparator(const Rational& x, const Rational& y) {
  const Rational r = (x + y) / 2;
  return IntervalUnion{Interval::closedOpen(Rational(0), r)};
}

std::optional<SetRep> dictSeparator(const DictElem& p, const DictElem& q) {
  if (p.x != q.x) {
    // [0, r) x [0, y + 1) around the point with the smaller first coordinate.
    const DictElem& lo = p.x < q.x ? p : q;
    const Rational r = (p.x + q.x) / 2;
    return BoxUnion{Box{Interval::closedOpen(Rational(0), r),
                        Interval::closedOpen(Rational(0), lo.y + 1)}};
  }
  // Same first coordinate: cut the fiber over x between the two heights.
  const Rational x = p.x;
  const Rational s = (p.y + q.y) / 2;
  if (isZero(x)) {
    return BoxUnion{Box{Interval::closedOpen(Rational(0), Rational(1)),
                        Interval::closedOpen(Rational(0), s)}};
  }
  return BoxUnion{
      Box{Interval::closedOpen(Rational(0), x), Interval::atLeast(Rational(0))},
      Box{Interval::point(x), Interval::closedOpen(Rational(0), s)}};
}

Rational maxModulusSquared(const ScalarVector& v) {
  Rational m(0);
  for (const auto& s : v) m = std::max(m, modulusSquared(s));
  return m;
}

std::optional<SetRep> coneSeparator(const ConeElem& x, const ConeElem& y) {
  const std::size_t dim = x.a.size();
  // U is a basic neighborhood [0, s) x ball(t) missing `drop`; the set is
  // U together with the point `keep`.
  const ConeElem* keep = &x;
  Rational s(1), t(1);
  if (x.r != y.r) {
    keep = x.r < y.r ? &x : &y;
    s = (x.r + y.r) / 2;
  } else {
    const ConeElem* drop = maxModulusSquared(y.a) > 0 ? &y : &x;
    keep = drop == &y ? &x : &y;
    if (sgn(drop->r) > 0) {
      s = drop->r;
    } else {
      // t <= max |a_i|: the squared modulus itself works below 1.
      t = std::min(Rational(1), maxModulusSquared(drop->a));
    }
  }
  return ProductSlice(dim, {{IntervalUnion{Interval::closedOpen(Rational(0), s)},
                             VectorRegion::ball(dim, t)},
                            {IntervalUnion{Interval::point(keep->r)},
                             VectorRegion::finite(dim, {keep->a})}});
}

std::optional<Separator> separatorWithProof(const EvsDescriptor& e, const Element& x,
                                            const Element& y, std::uint64_t seed) {
  if (x == y) throw std::invalid_argument("radial separation needs distinct points");
  if (auto parts = productParts(e)) {
    const auto& px = x.as<ProductElem>().parts;
    const auto& py = y.as<ProductElem>().parts;
    std::size_t k = 0;
    while (px[k] == py[k]) ++k;
    auto inner = separatorWithProof((*parts)[k], px[k], py[k], seed);
    if (!inner) return std::nullopt;
    // Cylinder: the separating set in factor k, everything elsewhere. It is
    // absorbing exactly when the factor set is.
    auto space = std::make_shared<const EvsDescriptor>(e);
    SetRep factor = inner->set;
    PredicateSet cyl{
        "cylinder[" + std::to_string(k) + ":" + render(factor) + "]", space,
        [factor, k](const Element& z) {
          return z.is<ProductElem>() && contains(factor, z.as<ProductElem>().parts[k]);
        },
        [space, factor, k](std::uint64_t s, std::size_t count) {
          auto reps = representativePoints(factor, s);
          std::vector<Element> out;
          Rng rng(s);
          for (std::size_t i = 0; i < count && !reps.empty(); ++i) {
            Element z = space->sampleOne(rng);
            std::get<ProductElem>(z.value).parts[k] = reps[i % reps.size()];
            out.push_back(std::move(z));
          }
          return out;
        }};
    CheckOutcome why = inner->absorbing;
    why.note = "factor " + std::to_string(k) + ": " + why.note;
    return Separator{std::move(cyl), std::move(why)};
  }
  std::optional<SetRep> set;
  if (hasKind(e, SetKind::IntervalUnion)) {
    set = halfLineSeparator(x.as<Rational>(), y.as<Rational>());
  } else if (hasKind(e, SetKind::BoxUnion)) {
    set = dictSeparator(x.as<DictElem>(), y.as<DictElem>());
  } else if (hasKind(e, SetKind::ProductSlice)) {
    set = coneSeparator(x.as<ConeElem>(), y.as<ConeElem>());
  }
  if (!set) return std::nullopt;
  CheckOutcome why = isAbsorbing(*set, e, 64, seed);
  return Separator{std::move(*set), std::move(why)};
}

std::pair<Element, Element> distinctPair(const EvsDescriptor& e, Rng& rng) {
  for (;;) {
    Element x = e.sampleOne(rng), y = e.sampleOne(rng);
    if (!(x == y)) return {std::move(x), std::move(y)};
  }
}

// Verifies one separator; returns a failure description or empty.
std::string verifySeparation(const Separator& s, const Element& x, const Element& y) {
  if (!s.absorbing.proven()) return "separator " + render(s.set) + " is not proven absorbing";
  if (contains(s.set, x) == contains(s.set, y)) {
    return "separator " + render(s.set) + " does not split the pair";
  }
  return {};
}

}  // namespace

IntervalUnion randomIntervalUnion(Rng& rng) {
  for (;;) {
    if (rng.chance(1, 16)) return IntervalUnion::points({Rational(0)});
    const long k = rng.between(1, 3);
    std::vector<Interval> parts;
    for (long i = 0; i < k; ++i) parts.push_back(randomPiece(rng, i == 0 && rng.chance(1, 2), 4, 48, 16));
    IntervalUnion u(std::move(parts));
    if (!u.empty()) return u;
  }
}

BoxUnion randomBoxUnion(Rng& rng) {
  for (;;) {
    if (rng.chance(1, 16)) return BoxUnion{Box{Interval::point(Rational(0)), Interval::point(Rational(0))}};
    const long k = rng.between(1, 3);
    std::vector<Box> boxes;
    for (long i = 0; i < k; ++i) {
      const bool anchored = rng.chance(2, 3);
      boxes.push_back({randomPiece(rng, anchored, 2, 12, 8), randomPiece(rng, anchored, 2, 12, 8)});
    }
    BoxUnion u(std::move(boxes));
    if (!u.empty()) return u;
  }
}

LatticeFamily randomLatticeFamily(Rng& rng) {
  const std::vector<Subspace> pool = {Subspace::zero(2), Subspace::full(2), nthLine(0), nthLine(1),
                                      nthLine(2), Subspace::span(2, {{Rational(0), Rational(1)}})};
  for (;;) {
    const bool cofinite = rng.chance(1, 3);
    std::vector<Subspace> listed;
    for (const auto& s : pool) {
      if (rng.chance(1, cofinite ? 4 : 2)) listed.push_back(s);
    }
    if (cofinite) return LatticeFamily::cofinite(std::move(listed));
    if (!listed.empty()) return LatticeFamily::finite(std::move(listed));
  }
}

ProductSlice randomProductSlice(Rng& rng, std::size_t dim) {
  for (;;) {
    const long k = rng.between(1, 2);
    std::vector<SlicePiece> pieces;
    for (long i = 0; i < k; ++i) {
      IntervalUnion r{randomPiece(rng, rng.chance(1, 2), 4, 24, 12)};
      VectorRegion a = VectorRegion::origin(dim);
      const auto pick = rng.below(8);
      if (pick < 4) {
        a = VectorRegion::ball(dim, makeRational(rng.between(1, 6), 2), rng.chance(1, 2));
      } else if (pick == 4) {
        a = VectorRegion::whole(dim);
      } else if (pick == 5) {
        ScalarVector v;
        for (std::size_t j = 0; j < dim; ++j) v.emplace_back(rng.smallRational(4, 2, true));
        a = VectorRegion::finite(dim, {ScalarVector(dim), std::move(v)});
      }
      pieces.push_back({std::move(r), std::move(a)});
    }
    ProductSlice s(dim, std::move(pieces));
    if (!s.empty()) return s;
  }
}

SetRep randomSet(const EvsDescriptor& e, Rng& rng) {
  if (hasKind(e, SetKind::IntervalUnion)) return randomIntervalUnion(rng);
  if (hasKind(e, SetKind::BoxUnion)) return randomBoxUnion(rng);
  if (hasKind(e, SetKind::LatticeFamily)) return randomLatticeFamily(rng);
  if (hasKind(e, SetKind::ProductSlice)) {
    return randomProductSlice(rng, e.zero.as<ConeElem>().a.size());
  }
  throw std::invalid_argument("instance " + e.name + " has no exact set representation");
}

OutcomeMap checkAbsorbingClosureLaws(const EvsDescriptor& e, std::uint64_t budget,
                                     std::uint64_t seed) {
  OutcomeMap out;
  if (e.exactSets.empty()) {
    for (const char* id : {"absorbing.i", "absorbing.ii", "absorbing.iii", "absorbing.iv", "absorbing.v"}) {
      out[id] = CheckOutcome::unfalsified(0, seed, "no exact set representation");
    }
    return out;
  }
  const auto sets = corpus(e, budget, seed, "absorbing.corpus");
  std::vector<const SetRep*> absorbing;
  for (const auto& a : sets) {
    if (isAbsorbing(a, e, budget, seed).proven()) absorbing.push_back(&a);
  }
  const Element theta = zeroOf(e);
  const std::string note = "hypotheses and conclusions decided exactly";

  LawTally i, ii, iii, iv, v;
  for (const auto* a : absorbing) {
    if (contains(*a, theta)) {
      ++i.tried;
    } else {
      i.fail({{theta}, {}, render(*a) + " is proven absorbing but misses theta"});
    }
  }
  Rng rng = Rng::forCheck(seed, "absorbing.laws");
  for (std::size_t k = 0; k < absorbing.size(); ++k) {
    const SetRep& a = *absorbing[k];
    const SetRep& b = *absorbing[(k + 1) % absorbing.size()];
    const SetRep& any = sets[rng.below(sets.size())];
    SetRep meet = intersect(a, b);
    ii.check(isAbsorbing(meet, e, budget, seed), render(a) + " n " + render(b));
    SetRep join = unite(a, any);
    iii.check(isAbsorbing(join, e, budget, seed), render(a) + " U " + render(any));
    iv.check(isAbsorbing(upSet(a), e, budget, seed), "up(" + render(a) + ")");
    iv.check(isAbsorbing(downSet(a), e, budget, seed), "down(" + render(a) + ")");
    for (const auto& lambda : nonzeroScalars(e, rng, Rational(4), 2)) {
      v.check(isAbsorbing(scaleSet(lambda, a), e, budget, seed),
              "(" + toString(lambda) + ") " + render(a));
    }
  }
  out["absorbing.i"] = i.outcome(seed, note);
  out["absorbing.ii"] = ii.outcome(seed, note);
  out["absorbing.iii"] = iii.outcome(seed, note);
  out["absorbing.iv"] = iv.outcome(seed, note);
  out["absorbing.v"] = v.outcome(seed, note);
  return out;
}

OutcomeMap checkBalancedClosureLaws(const EvsDescriptor& e, std::uint64_t budget,
                                    std::uint64_t seed) {
  OutcomeMap out;
  if (e.exactSets.empty()) {
    for (const char* id : {"balanced.i", "balanced.ii", "balanced.iii", "balanced.iv", "balanced.v"}) {
      out[id] = CheckOutcome::unfalsified(0, seed, "no exact set representation");
    }
    return out;
  }
  const auto sets = corpus(e, budget, seed, "balanced.corpus");
  std::vector<const SetRep*> balanced;
  for (const auto& a : sets) {
    if (isBalanced(a, budget, seed).proven()) balanced.push_back(&a);
  }
  const Element theta = zeroOf(e);
  const std::string note = "hypotheses and conclusions decided exactly";

  LawTally i, ii, iii, iv, v;
  for (const auto* a : balanced) {
    if (contains(*a, theta)) {
      ++i.tried;
    } else {
      i.fail({{theta}, {}, render(*a) + " is proven balanced but misses theta"});
    }
  }
  Rng rng = Rng::forCheck(seed, "balanced.laws");
  for (std::size_t k = 0; k < balanced.size(); ++k) {
    const SetRep& a = *balanced[k];
    const SetRep& b = *balanced[(k + 1) % balanced.size()];
    ii.check(isBalanced(intersect(a, b), budget, seed), render(a) + " n " + render(b));
    iii.check(isBalanced(unite(a, b), budget, seed), render(a) + " U " + render(b));
    iv.check(isBalanced(upSet(a), budget, seed), "up(" + render(a) + ")");
    iv.check(isBalanced(downSet(a), budget, seed), "down(" + render(a) + ")");
    std::vector<Scalar> lambdas = e.scalars(rng, Rational(4), 3);
    lambdas.emplace_back(0);
    for (const auto& lambda : lambdas) {
      v.check(isBalanced(scaleSet(lambda, a), budget, seed), "(" + toString(lambda) + ") " + render(a));
    }
  }
  out["balanced.i"] = i.outcome(seed, note);
  out["balanced.ii"] = ii.outcome(seed, note);
  out["balanced.iii"] = iii.outcome(seed, note);
  out["balanced.iv"] = iv.outcome(seed, note);
  out["balanced.v"] = v.outcome(seed, note);
  return out;
}

std::optional<SetRep> radialSeparator(const EvsDescriptor& e, const Element& x, const Element& y) {
  auto s = separatorWithProof(e, x, y, kDefaultSeed);
  if (!s) return std::nullopt;
  return std::move(s->set);
}

CheckOutcome checkRadial(const EvsDescriptor& e, std::uint64_t budget, std::uint64_t seed) {
  Rng rng = Rng::forCheck(seed, "radial");
  if (hasKind(e, SetKind::LatticeFamily)) {
    // Only the full family is absorbing, and it holds both points.
    auto [x, y] = distinctPair(e, rng);
    const LatticeFamily all = LatticeFamily::all();
    const LatticeFamily one = LatticeFamily::finite({x.as<Subspace>()});
    if (isAbsorbing(all, e).proven() && isAbsorbing(one.unite(LatticeFamily::finite({Subspace::zero(2)})), e).refuted()) {
      return CheckOutcome::refuted(
          {{x, y}, {}, "the only absorbing family is ALL, which holds both points"}, 1, seed);
    }
    return CheckOutcome::unfalsified(1, seed);
  }
  if (e.exactSets.empty() && !productParts(e)) {
    std::string note = "no exact sets, so no separator construction";
    if (e.name.rfind("twisted:", 0) == 0) {
      note += "; every nonzero scalar fixes (r,0), so each absorbing set holds all of them";
    }
    return CheckOutcome::unfalsified(0, seed, note);
  }
  const std::size_t pairs = static_cast<std::size_t>(std::clamp<std::uint64_t>(budget, 1, 500));
  std::uint64_t tried = 0;
  std::size_t unseparated = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    auto [x, y] = distinctPair(e, rng);
    auto s = separatorWithProof(e, x, y, seed);
    ++tried;
    if (!s) {
      ++unseparated;
      continue;
    }
    if (auto failure = verifySeparation(*s, x, y); !failure.empty()) {
      throw std::logic_error("radial construction failed on " + toString(x) + ", " + toString(y) +
                             ": " + failure);
    }
  }
  if (unseparated) {
    return CheckOutcome::unfalsified(tried, seed,
                                     std::to_string(unseparated) + " pairs without a known separator");
  }
  return CheckOutcome::proven(tried, seed, "separator construction verified on every sampled pair");
}

SubevsSpec coneAxisSubevs() {
  SubevsSpec s;
  s.name = "axis of cone:1";
  s.ambient = coneProduct(1);
  s.member = [](const Element& x) {
    return x.is<ConeElem>() && x.as<ConeElem>().a == ScalarVector{Scalar(0)};
  };
  s.sample = [](Rng& rng) {
    Rational r = rng.chance(1, 5) ? Rational(0) : rng.smallRational(12, 6, false);
    return Element(ConeElem{std::move(r), {Scalar(0)}});
  };
  s.model = halfLine();
  s.toModel = [](const Element& x) { return Element(x.as<ConeElem>().r); };
  s.traceInModel = [](const SetRep& a) -> SetRep {
    IntervalUnion trace;
    for (const auto& p : std::get<ProductSlice>(a).pieces()) {
      if (p.a.contains(ScalarVector{Scalar(0)})) trace = trace.unite(p.r);
    }
    return trace;
  };
  return s;
}

CheckOutcome checkRadialProductAndHereditary(const std::vector<EvsDescriptor>& parts,
                                             const std::vector<SubevsSpec>& subevs,
                                             std::uint64_t budget, std::uint64_t seed) {
  const std::size_t pairs = static_cast<std::size_t>(std::clamp<std::uint64_t>(budget, 1, 100));
  std::uint64_t tried = 0;
  Rng rng = Rng::forCheck(seed, "radial.product");
  if (!parts.empty()) {
    const EvsDescriptor prod = productEvs(parts);
    for (std::size_t i = 0; i < pairs; ++i) {
      auto [x, y] = distinctPair(prod, rng);
      auto s = separatorWithProof(prod, x, y, seed);
      ++tried;
      if (!s) return CheckOutcome::unfalsified(tried, seed, "a factor has no separator");
      if (auto failure = verifySeparation(*s, x, y); !failure.empty()) {
        return CheckOutcome::refuted({{x, y}, {}, "product: " + failure}, tried, seed);
      }
    }
  }
  Rng hrng = Rng::forCheck(seed, "radial.hereditary");
  for (const auto& y : subevs) {
    // Redraw equal pairs so that `pairs` distinct pairs are checked.
    for (std::size_t i = 0, draws = 0; i < pairs && draws < 20 * pairs; ++draws) {
      Element a = y.sample(hrng), b = y.sample(hrng);
      if (a == b) continue;
      ++i;
      auto s = separatorWithProof(y.ambient, a, b, seed);
      ++tried;
      if (!s) return CheckOutcome::unfalsified(tried, seed, y.name + ": no separator in ambient");
      SetRep trace = y.traceInModel(s->set);
      Separator inY{trace, isAbsorbing(trace, y.model, budget, seed)};
      const Element ma = y.toModel(a), mb = y.toModel(b);
      std::string failure = verifySeparation(inY, ma, mb);
      if (failure.empty() && contains(trace, ma) != contains(s->set, a)) {
        failure = "trace disagrees with the ambient set";
      }
      if (!failure.empty()) {
        return CheckOutcome::refuted({{a, b}, {}, y.name + ": " + failure}, tried, seed);
      }
    }
  }
  return CheckOutcome::proven(tried, seed, "product and subevs constructions verified");
}

SetRep transportSet(const ShippedMorphism& phi, const SetRep& a) {
  if (!phi.map.hasInverse()) {
    throw std::invalid_argument(phi.map.name + " has no inverse; sets cannot be transported");
  }
  const auto* u = std::get_if<IntervalUnion>(&a);
  if (!u) throw std::invalid_argument("transportSet: only half-line sets are supported");
  if (phi.map.name == "identity") return *u;
  if (phi.map.name == "doubling") return scaleBy(*u, Rational(2));
  if (phi.map.name == "embed") {
    return ProductSlice(1, {{*u, VectorRegion::origin(1)}});
  }
  throw std::invalid_argument("transportSet: no exact image for " + phi.map.name);
}

CheckOutcome absorbingInImage(const ShippedMorphism& phi, const SetRep& image) {
  if (phi.map.name == "embed") {
    const SubevsSpec axis = coneAxisSubevs();
    return isAbsorbing(axis.traceInModel(image), axis.model);
  }
  return isAbsorbing(image, phi.target);
}

CheckOutcome checkAbsorbingTransport(const ShippedMorphism& phi, std::uint64_t budget,
                                     std::uint64_t seed) {
  if (!phi.map.hasInverse()) throw std::invalid_argument(phi.map.name + " has no inverse");
  Rng rng = Rng::forCheck(seed, "transport.absorbing");
  const std::size_t n = static_cast<std::size_t>(std::clamp<std::uint64_t>(budget, 1, 500));
  std::uint64_t tried = 0;
  for (std::size_t i = 0; i < n; ++i) {
    SetRep a = randomSet(phi.source, rng);
    SetRep image = transportSet(phi, a);
    ++tried;
    for (const auto& x : representativePoints(a, seed)) {
      if (!contains(image, phi.map(x))) {
        return CheckOutcome::refuted({{x}, {}, render(image) + " misses phi(x)"}, tried, seed);
      }
    }
    const bool before = isAbsorbing(a, phi.source, budget, seed).proven();
    const bool after = absorbingInImage(phi, image).proven();
    if (before != after) {
      return CheckOutcome::refuted(
          {{}, {}, render(a) + " and its image " + render(image) + " disagree on absorbing"}, tried,
          seed);
    }
  }
  return CheckOutcome::unfalsified(tried, seed, "verdicts agree on every generated set");
}

CheckOutcome checkRadialTransport(const ShippedMorphism& phi, std::uint64_t budget,
                                  std::uint64_t seed) {
  if (!phi.map.hasInverse()) throw std::invalid_argument(phi.map.name + " has no inverse");
  Rng rng = Rng::forCheck(seed, "transport.radial");
  const std::size_t n = static_cast<std::size_t>(std::clamp<std::uint64_t>(budget, 1, 500));
  std::uint64_t tried = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, y] = distinctPair(phi.source, rng);
    auto s = separatorWithProof(phi.source, x, y, seed);
    ++tried;
    if (!s) return CheckOutcome::unfalsified(tried, seed, "source pair without separator");
    SetRep image = transportSet(phi, s->set);
    Separator carried{image, absorbingInImage(phi, image)};
    std::string failure = verifySeparation(carried, phi.map(x), phi.map(y));
    if (failure.empty() && contains(image, phi.map(x)) != contains(s->set, x)) {
      failure = "image does not follow the source membership";
    }
    if (!failure.empty()) return CheckOutcome::refuted({{x, y}, {}, failure}, tried, seed);
  }
  return CheckOutcome::proven(tried, seed, "carried separators verified on every sampled pair");
}

}  // namespace evs
