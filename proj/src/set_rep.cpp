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

#include "evs/set_rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace evs {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void unsupported(std::string_view op, const SetRep& a, const SetRep& b) {
  throw std::invalid_argument(std::string(op) + ": unsupported kinds " +
                              std::string(kindName(a)) + ", " + std::string(kindName(b)));
}

[[noreturn]] void unsupported(std::string_view op, const SetRep& a) {
  throw std::invalid_argument(std::string(op) + ": unsupported kind " + std::string(kindName(a)));
}

// Applies f when both sides hold the same exact kind.
template <class F>
auto sameKind(std::string_view op, const SetRep& a, const SetRep& b, F&& f) {
  if (a.index() != b.index() || std::holds_alternative<PredicateSet>(a)) unsupported(op, a, b);
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PredicateSet>) {
          unsupported(op, a, b);
          return f(std::get<IntervalUnion>(a), std::get<IntervalUnion>(b));
        } else {
          return f(x, std::get<T>(b));
        }
      },
      a);
}

Rational modulusOrThrow(const Scalar& s) { return modulusOf(s); }

// Point of an interval: its left end when attained, otherwise an inner one.
Rational pointOf(const Interval& i) { return i.loClosed ? i.lo : i.interiorPoint(); }

ScalarVector unitVector(std::size_t dim) {
  ScalarVector v(dim);
  if (dim) v[0] = Scalar(1);
  return v;
}

void requireKind(const EvsDescriptor& e, SetKind kind) {
  if (std::find(e.exactSets.begin(), e.exactSets.end(), kind) == e.exactSets.end()) {
    throw std::invalid_argument("instance " + e.name + " has no exact sets of this kind");
  }
}

PredicateSet predicateOver(const PredicateSet& base, std::string label,
                           std::function<bool(const Element&)> member,
                           std::function<std::vector<Element>(std::uint64_t, std::size_t)> w) {
  return PredicateSet{std::move(label), base.space, std::move(member), std::move(w)};
}

}  // namespace

std::string_view kindName(const SetRep& a) {
  return std::visit(Overloaded{[](const IntervalUnion&) { return std::string_view("intervals"); },
                               [](const BoxUnion&) { return std::string_view("boxes"); },
                               [](const LatticeFamily&) { return std::string_view("lattice"); },
                               [](const ProductSlice&) { return std::string_view("slice"); },
                               [](const PredicateSet&) { return std::string_view("predicate"); }},
                    a);
}

std::string render(const SetRep& a) {
  return std::visit(Overloaded{[](const PredicateSet& p) { return p.label; },
                               [](const auto& x) { return toString(x); }},
                    a);
}

bool contains(const SetRep& a, const Element& x) {
  return std::visit(
      Overloaded{[&](const IntervalUnion& u) { return x.is<Rational>() && u.contains(x.as<Rational>()); },
                 [&](const BoxUnion& u) { return x.is<DictElem>() && u.contains(x.as<DictElem>()); },
                 [&](const LatticeFamily& f) {
                   return x.is<Subspace>() && x.as<Subspace>().ambient() == 2 &&
                          f.contains(x.as<Subspace>());
                 },
                 [&](const ProductSlice& s) { return x.is<ConeElem>() && s.contains(x.as<ConeElem>()); },
                 [&](const PredicateSet& p) { return p.member(x); }},
      a);
}

bool isEmpty(const SetRep& a) {
  return std::visit(Overloaded{[](const PredicateSet&) { return false; },
                               [](const auto& x) { return x.empty(); }},
                    a);
}

bool sameSet(const SetRep& a, const SetRep& b) {
  return sameKind("sameSet", a, b,
                  Overloaded{[](const BoxUnion& x, const BoxUnion& y) { return x.sameSet(y); },
                             [](const auto& x, const auto& y) { return x == y; }});
}

bool isSubset(const SetRep& a, const SetRep& b) {
  return sameKind("isSubset", a, b,
                  Overloaded{[](const ProductSlice& x, const ProductSlice& y) {
                               return x.unite(y) == y;
                             },
                             [](const auto& x, const auto& y) { return x.isSubsetOf(y); }});
}

SetRep scaleSet(const Scalar& lambda, const SetRep& a) {
  return std::visit(
      Overloaded{
          [&](const IntervalUnion& u) -> SetRep { return scaleBy(u, modulusOrThrow(lambda)); },
          [&](const BoxUnion& u) -> SetRep { return scaleBy(u, modulusOrThrow(lambda)); },
          [&](const LatticeFamily& f) -> SetRep {
            if (!lambda.isZero() || f.empty()) return f;
            return LatticeFamily::finite({Subspace::zero(2)});
          },
          [&](const ProductSlice& s) -> SetRep { return scaleBy(s, lambda); },
          [&](const PredicateSet& p) -> SetRep {
            auto space = p.space;
            auto member = p.member;
            auto witnesses = p.witnesses;
            std::function<bool(const Element&)> m;
            if (lambda.isZero()) {
              m = [space, witnesses](const Element& x) {
                return x == space->zero && !witnesses(kDefaultSeed, 1).empty();
              };
            } else {
              const Scalar inv = Scalar(1) / lambda;
              m = [space, member, lambda, inv](const Element& x) {
                Element pre = space->scale(inv, x);
                return space->scale(lambda, pre) == x && member(pre);
              };
            }
            auto w = [space, witnesses, lambda](std::uint64_t seed, std::size_t count) {
              std::vector<Element> out;
              for (const auto& x : witnesses(seed, count)) out.push_back(space->scale(lambda, x));
              return out;
            };
            return predicateOver(p, "(" + toString(lambda) + ")*" + p.label, std::move(m),
                                 std::move(w));
          }},
      a);
}

SetRep minkowskiSum(const SetRep& a, const SetRep& b) {
  if (a.index() != b.index()) unsupported("minkowskiSum", a, b);
  if (const auto* x = std::get_if<IntervalUnion>(&a)) return minkowskiSum(*x, std::get<IntervalUnion>(b));
  if (const auto* x = std::get_if<ProductSlice>(&a)) return minkowskiSum(*x, std::get<ProductSlice>(b));
  unsupported("minkowskiSum", a, b);
}

SetRep unite(const SetRep& a, const SetRep& b) {
  if (const auto* p = std::get_if<PredicateSet>(&a)) {
    const auto* q = std::get_if<PredicateSet>(&b);
    if (!q) unsupported("unite", a, b);
    auto m1 = p->member, m2 = q->member;
    auto w1 = p->witnesses, w2 = q->witnesses;
    return predicateOver(
        *p, "(" + p->label + " U " + q->label + ")",
        [m1, m2](const Element& x) { return m1(x) || m2(x); },
        [w1, w2](std::uint64_t seed, std::size_t count) {
          auto out = w1(seed, count / 2 + 1);
          auto more = w2(seed + 1, count / 2 + 1);
          out.insert(out.end(), more.begin(), more.end());
          return out;
        });
  }
  return sameKind("unite", a, b, [](const auto& x, const auto& y) -> SetRep { return x.unite(y); });
}

SetRep intersect(const SetRep& a, const SetRep& b) {
  return sameKind("intersect", a, b,
                  [](const auto& x, const auto& y) -> SetRep { return x.intersect(y); });
}

SetRep upSet(const SetRep& a) {
  return std::visit(Overloaded{[&](const PredicateSet&) -> SetRep { unsupported("upSet", a); },
                               [](const auto& x) -> SetRep { return upSet(x); }},
                    a);
}

SetRep downSet(const SetRep& a) {
  return std::visit(Overloaded{[&](const PredicateSet&) -> SetRep { unsupported("downSet", a); },
                               [](const auto& x) -> SetRep { return downSet(x); }},
                    a);
}

std::vector<Element> representativePoints(const SetRep& a, std::uint64_t seed) {
  std::vector<Element> out;
  std::visit(
      Overloaded{
          [&](const IntervalUnion& u) {
            for (const auto& c : u.components()) {
              if (c.loClosed) out.emplace_back(c.lo);
              out.emplace_back(c.interiorPoint());
              if (c.hi && c.hiClosed) out.emplace_back(*c.hi);
            }
          },
          [&](const BoxUnion& u) {
            for (const auto& p : u.cellRepresentatives(u)) {
              if (u.contains(p)) out.emplace_back(p);
            }
          },
          [&](const LatticeFamily& f) {
            const Subspace zero = Subspace::zero(2), full = Subspace::full(2);
            for (const auto& s : {zero, full, nthLine(0), nthLine(1), nthLine(2)}) {
              if (f.contains(s)) out.emplace_back(s);
            }
            if (f.mode() == LatticeFamily::Mode::Finite) {
              for (const auto& s : f.listed()) out.emplace_back(s);
            }
          },
          [&](const ProductSlice& s) {
            for (const auto& p : s.pieces()) {
              for (const auto& c : p.r.components()) {
                out.emplace_back(ConeElem{pointOf(c), p.a.samplePoint()});
                out.emplace_back(ConeElem{c.interiorPoint(), p.a.samplePoint()});
              }
            }
          },
          [&](const PredicateSet& p) { out = p.witnesses(seed, 16); }},
      a);
  // Drop repeats, keeping first occurrences.
  std::vector<Element> unique;
  for (auto& x : out) {
    bool seen = false;
    for (const auto& y : unique) seen = seen || y == x;
    if (!seen) unique.push_back(std::move(x));
  }
  return unique;
}

namespace {

CheckOutcome balancedIntervals(const IntervalUnion& u, std::uint64_t seed) {
  const auto& comps = u.components();
  const Interval& first = comps.front();
  const bool zeroIn = isZero(first.lo) && first.loClosed;
  if (comps.size() == 1 && zeroIn) {
    return CheckOutcome::proven(1, seed, "single interval starting closed at 0");
  }
  if (!zeroIn) {
    Rational x = pointOf(first);
    return CheckOutcome::refuted({{x}, {Scalar(0)}, "0 x = 0 is not in A"}, 1, seed);
  }
  // A gap after the 0-component: pull a point of the next component into it.
  const Interval& next = comps[1];
  const Rational x = pointOf(next);
  const Rational target = *first.hi < next.lo ? Rational((*first.hi + next.lo) / 2) : *first.hi;
  const Rational alpha = target / x;
  return CheckOutcome::refuted(
      {{x}, {Scalar(alpha)}, "alpha x = " + toString(target) + " falls in a gap of A"}, 1, seed);
}

CheckOutcome absorbingIntervals(const IntervalUnion& u, std::uint64_t seed) {
  if (!u.contains(Rational(0))) {
    return CheckOutcome::refuted({{Rational(1)}, {Scalar(0)}, "0 x = 0 is not in A"}, 1, seed);
  }
  const Interval& first = u.components().front();
  if (!first.hi || sgn(*first.hi) > 0) {
    return CheckOutcome::proven(1, seed, "component at 0 is nondegenerate");
  }
  return CheckOutcome::refuted(
      {{Rational(1)}, {}, "component at 0 is {0}: every [0, alpha] x leaves A"}, 1, seed);
}

CheckOutcome absorbingBoxes(const BoxUnion& u, std::uint64_t seed) {
  const Rational zero(0);
  if (!u.contains({zero, zero})) {
    return CheckOutcome::refuted({{DictElem{Rational(1), Rational(1)}}, {Scalar(0)},
                                  "0 x = theta is not in A"},
                                 1, seed);
  }
  auto startsAtZero = [](const Interval& i) { return isZero(i.lo) && (!i.hi || sgn(*i.hi) > 0); };
  auto holdsZero = [](const Interval& i) { return i.contains(Rational(0)); };
  bool diag = false, horiz = false, vert = false;
  for (const auto& b : u.boxes()) {
    diag = diag || (startsAtZero(b.x) && startsAtZero(b.y));
    horiz = horiz || (startsAtZero(b.x) && holdsZero(b.y));
    vert = vert || (holdsZero(b.x) && startsAtZero(b.y));
  }
  // Shrinking (x, y) towards theta eventually stays inside one box, so each
  // ray type needs a single box touching theta from that side.
  auto escape = [&](Rational x, Rational y) {
    return CheckOutcome::refuted({{DictElem{std::move(x), std::move(y)}}, {},
                                  "t x leaves A for arbitrarily small t > 0"},
                                 1, seed);
  };
  if (!diag) return escape(Rational(1), Rational(1));
  if (!horiz) return escape(Rational(1), zero);
  if (!vert) return escape(zero, Rational(1));
  return CheckOutcome::proven(1, seed, "boxes cover theta from every direction");
}

CheckOutcome absorbingSlice(const ProductSlice& s, std::uint64_t seed) {
  const ScalarVector origin(s.dim()), e1 = unitVector(s.dim());
  if (!s.contains({Rational(0), origin})) {
    return CheckOutcome::refuted({{ConeElem{Rational(1), e1}}, {Scalar(0)}, "0 x = theta is not in A"},
                                 1, seed);
  }
  // Radii r whose piece holds a whole ball around the origin.
  IntervalUnion nb;
  for (const auto& p : s.pieces()) {
    if (p.a.isNeighborhood()) nb = nb.unite(p.r);
  }
  if (!nb.contains(Rational(0))) {
    return CheckOutcome::refuted(
        {{ConeElem{Rational(0), e1}}, {}, "mu (0, a) = (0, mu a) needs a ball of vectors at r = 0"},
        1, seed);
  }
  const Interval& first = nb.components().front();
  if (first.hi && isZero(*first.hi)) {
    return CheckOutcome::refuted(
        {{ConeElem{Rational(1), e1}}, {}, "no ball of vectors for small r > 0"}, 1, seed);
  }
  return CheckOutcome::proven(1, seed, "a ball of vectors over [0, d) for some d > 0");
}

CheckOutcome balancedSlice(const ProductSlice& s, std::uint64_t budget, std::uint64_t seed) {
  bool allBalanced = true;
  for (const auto& p : s.pieces()) {
    const auto& c = p.r.components();
    allBalanced = allBalanced && c.size() == 1 && isZero(c.front().lo) && c.front().loClosed &&
                  p.a.balanced();
  }
  if (allBalanced) return CheckOutcome::proven(1, seed, "every piece is balanced");
  Rng rng = Rng::forCheck(seed, "balanced.slice");
  std::vector<Scalar> alphas =
      sampleScalars(Rational(1), std::max<std::uint64_t>(budget / 8, 8), rng,
                    ScalarMode::PythagoreanOnly, FieldMode::Complex);
  for (long k = 1; k < 8; ++k) alphas.emplace_back(makeRational(k, 8));
  std::uint64_t tried = 0;
  for (const auto& x : representativePoints(s, seed)) {
    const auto& c = x.as<ConeElem>();
    for (const auto& a : alphas) {
      ++tried;
      ScalarVector v;
      for (const auto& ai : c.a) v.push_back(a * ai);
      ConeElem y{modulusOf(a) * c.r, std::move(v)};
      if (!s.contains(y)) {
        return CheckOutcome::refuted({{x}, {a}, "alpha x = " + toString(Element(y)) + " is not in A"},
                                     tried, seed);
      }
    }
  }
  return CheckOutcome::unfalsified(tried, seed);
}

CheckOutcome balancedPredicate(const PredicateSet& p, std::uint64_t budget, std::uint64_t seed) {
  Rng rng = Rng::forCheck(seed, "balanced.predicate");
  const std::size_t n = samplesPerVariable(budget, 2);
  const auto xs = p.witnesses(rng.next(), n);
  const auto alphas = p.space->scalars(rng, Rational(1), n);
  std::uint64_t tried = 0;
  for (const auto& x : xs) {
    for (const auto& a : alphas) {
      ++tried;
      if (!p.member(p.space->scale(a, x))) {
        return CheckOutcome::refuted({{x}, {a}, "alpha x is not in A"}, tried, seed);
      }
    }
  }
  return CheckOutcome::unfalsified(tried, seed);
}

CheckOutcome absorbingPredicate(const PredicateSet& p, const EvsDescriptor& e, std::uint64_t budget,
                                std::uint64_t seed) {
  if (!p.member(e.zero)) {
    Rng rng = Rng::forCheck(seed, "absorbing.predicate");
    return CheckOutcome::refuted({{e.sampleOne(rng)}, {Scalar(0)}, "0 x = theta is not in A"}, 1,
                                 seed);
  }
  // Escapes at a finite scale never refute absorption, so this only reports
  // points where mu x kept leaving A down to the finest scale tried.
  Rng rng = Rng::forCheck(seed, "absorbing.predicate");
  const std::size_t n = samplesPerVariable(budget, 2);
  std::uint64_t tried = 0;
  std::string suspects;
  for (const auto& x : e.sample(rng, n)) {
    bool escapesEverywhere = true;
    for (int k = 1; k <= 24 && escapesEverywhere; ++k) {
      const Rational scale(mpq_class(1, 1) / (mpz_class(1) << k));
      bool escaped = false;
      for (const auto& u : e.scalars(rng, Rational(1), 4)) {
        ++tried;
        escaped = escaped || !p.member(e.scale(u * Scalar(scale), x));
      }
      escapesEverywhere = escaped;
    }
    if (escapesEverywhere && suspects.size() < 200) suspects += " " + toString(x);
  }
  return CheckOutcome::unfalsified(
      tried, seed, suspects.empty() ? std::string() : "escapes down to 2^-24 at" + suspects);
}

}  // namespace

CheckOutcome isBalanced(const SetRep& a, std::uint64_t budget, std::uint64_t seed) {
  if (isEmpty(a)) throw std::invalid_argument("isBalanced: empty set");
  return std::visit(
      Overloaded{
          [&](const IntervalUnion& u) { return balancedIntervals(u, seed); },
          [&](const BoxUnion& u) {
            if (auto v = shrinkViolation(u)) {
              return CheckOutcome::refuted({{v->first}, {Scalar(v->second)}, "t x is not in A"}, 1,
                                           seed);
            }
            return CheckOutcome::proven(1, seed, "closed under every shrink");
          },
          [&](const LatticeFamily& f) {
            const Subspace zero = Subspace::zero(2);
            if (f.contains(zero)) return CheckOutcome::proven(1, seed, "zero subspace is a member");
            Subspace y = f.mode() == LatticeFamily::Mode::Finite ? f.listed().front()
                                                                  : *f.someLine();
            return CheckOutcome::refuted({{y}, {Scalar(0)}, "0 Y = zero is not in A"}, 1, seed);
          },
          [&](const ProductSlice& s) { return balancedSlice(s, budget, seed); },
          [&](const PredicateSet& p) { return balancedPredicate(p, budget, seed); }},
      a);
}

CheckOutcome isAbsorbing(const SetRep& a, const EvsDescriptor& e, std::uint64_t budget,
                         std::uint64_t seed) {
  return std::visit(
      Overloaded{
          [&](const IntervalUnion& u) {
            requireKind(e, SetKind::IntervalUnion);
            return absorbingIntervals(u, seed);
          },
          [&](const BoxUnion& u) {
            requireKind(e, SetKind::BoxUnion);
            return absorbingBoxes(u, seed);
          },
          [&](const LatticeFamily& f) {
            requireKind(e, SetKind::LatticeFamily);
            if (f.isAll()) return CheckOutcome::proven(1, seed, "family holds every subspace");
            return CheckOutcome::refuted(
                {{f.missing()}, {}, "mu Y = Y for every mu != 0 and Y is not in A"}, 1, seed);
          },
          [&](const ProductSlice& s) {
            requireKind(e, SetKind::ProductSlice);
            return absorbingSlice(s, seed);
          },
          [&](const PredicateSet& p) { return absorbingPredicate(p, e, budget, seed); }},
      a);
}

}  // namespace evs
