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

#include "evs/topology.hpp"

#include <algorithm>
#include <stdexcept>

#include "evs/set_laws.hpp"

namespace evs {

namespace {

Rational pow2inv(unsigned k) {
  Rational q(1);
  q /= Rational(mpz_class(1) << k);
  return q;
}

Rational exactModulusOrThrow(const Scalar& s) {
  auto m = exactModulus(s);
  if (!m) throw std::domain_error("scalar " + toString(s) + " has irrational modulus");
  return *m;
}

void requireUsualOpen(const IntervalUnion& g) {
  if (!isUsualOpen(g)) throw std::invalid_argument(toString(g) + " is not usual-open");
}

IntervalUnion from0(const std::optional<Rational>& hi) {
  if (!hi) return IntervalUnion::whole();
  return IntervalUnion{Interval::closedOpen(Rational(0), *hi)};
}

std::size_t capped(std::uint64_t budget, std::size_t cap) {
  return static_cast<std::size_t>(std::clamp<std::uint64_t>(budget, 1, cap));
}

Rational sampleHalfLine(Rng& rng) { return rng.smallRational(24, 8, false); }

}  // namespace

Interval modulusRange(const ScalarDisc& d) {
  if (sgn(d.radius) <= 0) throw std::invalid_argument("disc radius must be positive");
  const Rational c = exactModulusOrThrow(d.center);
  const Rational lo = c - d.radius, hi = c + d.radius;
  if (!d.open) return Interval::closed(sgn(lo) > 0 ? lo : Rational(0), hi);
  if (sgn(lo) < 0) return Interval::closedOpen(Rational(0), hi);
  return Interval::open(lo, hi);  // lo = 0 is not reached when |center| = radius
}

Interval productInterval(const Interval& m, const Interval& r) {
  if (m.empty() || r.empty()) throw std::invalid_argument("productInterval: empty factor");
  auto zeroPoint = [](const Interval& i) { return i.hi && isZero(*i.hi); };
  if (zeroPoint(m) || zeroPoint(r)) return Interval::point(Rational(0));
  Interval out;
  out.lo = m.lo * r.lo;
  out.loClosed = (m.loClosed && r.loClosed) || (isZero(m.lo) && m.loClosed) ||
                 (isZero(r.lo) && r.loClosed);
  if (m.hi && r.hi) {
    out.hi = Rational(*m.hi * *r.hi);
    out.hiClosed = m.hiClosed && r.hiClosed;
  }
  return out;
}

IntervalUnion discTimes(const ScalarDisc& d, const IntervalUnion& s) {
  const Interval m = modulusRange(d);
  std::vector<Interval> parts;
  for (const auto& c : s.components()) parts.push_back(productInterval(m, c));
  return IntervalUnion(std::move(parts));
}

bool isUsualOpen(const IntervalUnion& a) {
  for (const auto& c : a.components()) {
    if (c.hi && c.hiClosed) return false;
    if (c.loClosed && !isZero(c.lo)) return false;
  }
  return true;
}

bool isCompact(const IntervalUnion& a) {
  return std::all_of(a.components().begin(), a.components().end(),
                     [](const Interval& c) { return c.loClosed && c.hi && c.hiClosed; });
}

IntervalUnion balancedNbhdInside(const IntervalUnion& u) {
  requireUsualOpen(u);
  if (!u.contains(Rational(0))) throw std::invalid_argument(toString(u) + " misses 0");
  IntervalUnion w = from0(u.components().front().hi);
  if (!w.isSubsetOf(u) || !isBalanced(w).proven() || !isAbsorbing(w, halfLine()).proven()) {
    throw std::logic_error("balancedNbhdInside: " + toString(w) + " failed re-verification");
  }
  return w;
}

IntervalUnion halvingNbhd(const IntervalUnion& u) {
  const IntervalUnion v = balancedNbhdInside(u);
  const auto& hi = v.components().front().hi;
  IntervalUnion w = hi ? from0(Rational(*hi / 2)) : IntervalUnion::whole();
  if (!minkowskiSum(w, w).isSubsetOf(u)) {
    throw std::logic_error("halvingNbhd: W + W escapes " + toString(u));
  }
  return w;
}

IntervalUnion translateNbhdAt(const IntervalUnion& g, const Rational& x) {
  requireUsualOpen(g);
  const Interval* c = g.componentContaining(x);
  if (!c) throw std::invalid_argument(toString(x) + " is not in " + toString(g));
  IntervalUnion u = c->hi ? from0(Rational(*c->hi - x)) : IntervalUnion::whole();
  if (!translate(u, x).isSubsetOf(g)) {
    throw std::logic_error("translateNbhdAt: x + U escapes " + toString(g));
  }
  return u;
}

OpenDecomposition openDecomposition(const IntervalUnion& g, std::uint64_t budget,
                                    std::uint64_t seed) {
  requireUsualOpen(g);
  if (g.empty()) throw std::invalid_argument("openDecomposition: empty set");
  Rng rng = Rng::forCheck(seed, "topology.decomposition");
  std::vector<Rational> xs;
  for (const auto& c : g.components()) {
    if (c.contains(c.lo)) xs.push_back(c.lo);
    xs.push_back(c.interiorPoint());
  }
  const auto& cs = g.components();
  for (std::size_t i = 0, n = capped(budget, 64); i < n; ++i) {
    const Interval& c = cs[rng.below(cs.size())];
    // Points strictly inside c: lo + w (hi - lo) for w in (0,1), or lo + w'
    // on an unbounded component.
    const Rational w = makeRational(rng.between(1, 15), 16);
    xs.push_back(c.hi ? Rational(c.lo + w * (*c.hi - c.lo)) : Rational(c.lo + w * 16));
  }
  OpenDecomposition out;
  IntervalUnion covered;
  for (const auto& x : xs) {
    IntervalUnion u = translateNbhdAt(g, x);
    covered = covered.unite(translate(u, x));
    out.steps.push_back({x, std::move(u)});
  }
  if (!covered.isSubsetOf(g)) throw std::logic_error("openDecomposition: union escapes G");
  out.outcome = CheckOutcome::unfalsified(
      out.steps.size(), seed,
      "union of " + std::to_string(out.steps.size()) + " translates is " + toString(covered) +
          ", inside G; equality with G is an infinite union");
  return out;
}

Separation separationWitness(const Rational& x, const Rational& y) {
  if (sgn(y) < 0 || x <= y) throw std::invalid_argument("separationWitness needs x > y >= 0");
  IntervalUnion u = from0(Rational((x - y) / 2));
  if (!upSet(translate(u, x)).intersect(downSet(translate(u, y))).empty()) {
    throw std::logic_error("separationWitness: sets meet");
  }
  return {u, u};
}

ContinuityWitness scalarContinuityWitness(const IntervalUnion& g, const Rational& x,
                                          const Scalar& alpha) {
  requireUsualOpen(g);
  const Interval* c = g.componentContaining(x);
  if (!c) throw std::invalid_argument(toString(x) + " is not in " + toString(g));
  if (alpha.isZero()) throw std::invalid_argument("scalarContinuityWitness: alpha = 0");
  const Rational a = exactModulusOrThrow(alpha);

  // Lower end: (|a| - eps) x must stay above |a| lo; upper: (|a| + eps)(x + u)
  // at most |a| hi. Halving the slack keeps both strict.
  Rational eps = a / 2;
  if (sgn(x) > 0) {
    eps = std::min(eps, Rational(a * (x - c->lo) / (2 * x)));
    if (c->hi) eps = std::min(eps, Rational(a * (*c->hi - x) / (2 * x)));
  }
  Rational u(1);
  if (c->hi) u = a * *c->hi / (a + eps) - x;

  ContinuityWitness w{eps, from0(u), {}};
  w.image = discTimes(ScalarDisc{alpha, eps}, translate(w.u, x));
  if (!w.image.isSubsetOf(scaleBy(g, a))) {
    throw std::logic_error("scalarContinuityWitness: image escapes alpha G");
  }
  return w;
}

SequenceTest sequenceTest(const IntervalUnion& a, const Rational& radius, std::size_t maxN) {
  SequenceTest out;
  if (a.empty()) return out;
  const Interval& last = a.components().back();
  for (std::size_t n = 1; n <= maxN; ++n) {
    Rational xn;
    if (!last.hi) {
      xn = last.lo + static_cast<long>(n);
    } else {
      xn = last.hiClosed ? *last.hi : last.interiorPoint();
    }
    const bool escapes = xn / static_cast<long>(n) >= radius;
    if (escapes) out.lastEscape = n;
    if (n == maxN) {
      out.escapesAtEnd = escapes;
      out.xAtEnd = xn;
    }
  }
  return out;
}

CheckOutcome isBoundedSet(const SetRep& a, const EvsDescriptor& e, std::uint64_t budget,
                          std::uint64_t seed) {
  const auto has = [&](SetKind k) {
    return std::find(e.exactSets.begin(), e.exactSets.end(), k) != e.exactSets.end();
  };
  if (const auto* u = std::get_if<IntervalUnion>(&a); u && has(SetKind::IntervalUnion)) {
    if (u->bounded()) {
      const std::string sup = u->empty() ? "0" : toString(*u->components().back().hi);
      return CheckOutcome::proven(1, seed, "sup = " + sup + " is finite");
    }
    constexpr std::size_t kMaxN = 1000;
    const SequenceTest t = sequenceTest(*u, Rational(1), kMaxN);
    return CheckOutcome::refuted(
        {{t.xAtEnd},
         {Scalar(makeRational(1, kMaxN))},
         "x_n = " + toString(u->components().back().lo) + " + n lies in A and (1/n) x_n >= 1 " +
             "for every n <= 1000, so lambda_n x_n stays outside [0,1)"},
        kMaxN, seed);
  }
  if (const auto* s = std::get_if<ProductSlice>(&a); s && has(SetKind::ProductSlice)) {
    const std::size_t dim = s->dim();
    for (const auto& p : s->pieces()) {
      if (!p.r.bounded()) {
        const Rational r = p.r.components().back().lo + 1000;
        return CheckOutcome::refuted(
            {{ConeElem{r, p.a.samplePoint()}},
             {Scalar(makeRational(1, 1000))},
             "radial part unbounded: (1/1000) x keeps r >= 1, outside [0,1) x ball(1)"},
            1, seed);
      }
      if (!p.a.bounded()) {
        ScalarVector v(dim);
        v[0] = Scalar(1000);
        return CheckOutcome::refuted(
            {{ConeElem{p.r.components().front().interiorPoint(), v}},
             {Scalar(makeRational(1, 1000))},
             "vector part unbounded: (1/1000) x has norm 1, outside [0,1) x ball(1)"},
            1, seed);
      }
    }
    return CheckOutcome::proven(1, seed, "every piece has bounded radial and vector parts");
  }
  if (const auto* p = std::get_if<PredicateSet>(&a)) {
    const auto xs = p->witnesses(seed, capped(budget, 1000));
    return CheckOutcome::unfalsified(xs.size(), seed,
                                     "sampled members cannot refute boundedness of a predicate set");
  }
  throw std::invalid_argument("isBoundedSet: unsupported set " + std::string(kindName(a)) +
                              " on " + e.name);
}

// The union of mu A over 0 <= mu <= m is down(m A): every value below m sup A
// is reached by some smaller mu.
bool boundedByScalingGrid(const IntervalUnion& a) {
  if (a.empty()) return true;
  for (long k = 1; k <= 16; ++k) {
    const IntervalUnion v = from0(makeRational(1, k));
    bool absorbed = false;
    for (unsigned j = 0; j <= 40 && !absorbed; ++j) {
      absorbed = downSet(scaleBy(a, pow2inv(j))).isSubsetOf(v);
    }
    if (!absorbed) return false;
  }
  return true;
}

bool boundedByDilation(const IntervalUnion& a) {
  for (long k = 1; k <= 16; ++k) {
    const IntervalUnion v = from0(makeRational(1, k));
    bool inside = false;
    for (unsigned j = 0; j <= 40 && !inside; ++j) {
      inside = a.isSubsetOf(scaleBy(v, 1 / pow2inv(j)));
    }
    if (!inside) return false;
  }
  return true;
}

OutcomeMap checkBoundedLaws(const EvsDescriptor& e, std::uint64_t budget, std::uint64_t seed) {
  OutcomeMap out;
  const char* ids[] = {"bounded.a", "bounded.b", "bounded.c", "bounded.d", "bounded.e"};
  if (std::find(e.exactSets.begin(), e.exactSets.end(), SetKind::IntervalUnion) ==
      e.exactSets.end()) {
    for (const char* id : ids) out[id] = CheckOutcome::unfalsified(0, seed, "half line only");
    return out;
  }
  const std::size_t n = capped(budget, 1000);
  Rng rng = Rng::forCheck(seed, "bounded.corpus");
  auto bounded = [&](const IntervalUnion& s) { return isBoundedSet(s, e, 1, seed).proven(); };
  std::uint64_t tried[5] = {};
  std::optional<Witness> bad[5];
  auto record = [&](int law, bool ok, const std::string& what) {
    ++tried[law];
    if (!ok && !bad[law]) bad[law] = Witness{{}, {}, what};
  };

  std::vector<IntervalUnion> corpus, boundedSets;
  for (std::size_t i = 0; i < n; ++i) corpus.push_back(randomIntervalUnion(rng));
  for (const auto& a : corpus) {
    const bool grid = boundedByScalingGrid(a), dil = boundedByDilation(a), dec = bounded(a);
    record(0, grid == dil && dil == dec, toString(a) + ": characterizations disagree");
    record(2, !isCompact(a) || dec, toString(a) + " is compact but not bounded");
    if (dec) boundedSets.push_back(a);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> pts;
    for (long k = rng.between(1, 4); k > 0; --k) pts.push_back(sampleHalfLine(rng));
    const IntervalUnion f = IntervalUnion::points(pts);
    record(1, bounded(f), toString(f) + " is finite but not bounded");
    std::vector<Interval> closed;
    for (long k = rng.between(1, 3); k > 0; --k) {
      const Rational lo = sampleHalfLine(rng);
      closed.push_back(Interval::closed(lo, lo + sampleHalfLine(rng)));
    }
    const IntervalUnion c(std::move(closed));
    record(2, bounded(c), toString(c) + " is compact but not bounded");
  }
  for (std::size_t i = 0; i < boundedSets.size(); ++i) {
    const IntervalUnion& a = boundedSets[i];
    const IntervalUnion& b = boundedSets[(i + 1) % boundedSets.size()];
    record(3, bounded(minkowskiSum(a, b)), toString(a) + " + " + toString(b) + " is not bounded");
    for (const auto& lambda : e.scalars(rng, Rational(8), 2)) {
      const SetRep scaled = scaleSet(lambda, a);
      record(3, isBoundedSet(scaled, e, 1, seed).proven(),
             "(" + toString(lambda) + ") " + toString(a) + " is not bounded");
    }
    const IntervalUnion sub = a.intersect(corpus[rng.below(corpus.size())]);
    record(4, bounded(sub), toString(sub) + " sits in bounded " + toString(a) + " but is not bounded");
  }
  for (int law = 0; law < 5; ++law) {
    out[ids[law]] = bad[law] ? CheckOutcome::refuted(*bad[law], tried[law], seed)
                             : CheckOutcome::unfalsified(tried[law], seed, "decided exactly per set");
  }
  return out;
}

bool separatedByFamily(const NbhdFamily& f, const Rational& x, const Rational& y) {
  for (const auto& u : f.members) {
    const IntervalUnion up = upSet(translate(u, x));
    for (const auto& v : f.members) {
      if (up.intersect(downSet(translate(v, y))).empty()) return true;
    }
  }
  return false;
}

bool continuousInFamily(const NbhdFamily& f, const IntervalUnion& w, const Rational& x,
                        const Scalar& alpha) {
  const Rational a = exactModulusOrThrow(alpha);
  const IntervalUnion target = translate(w, a * x);
  for (unsigned k = 0; k <= 12; ++k) {
    const ScalarDisc disc{alpha, pow2inv(k)};
    for (const auto& u : f.members) {
      if (discTimes(disc, translate(u, x)).isSubsetOf(target)) return true;
    }
  }
  return false;
}

namespace {

void validateFamily(const NbhdFamily& f) {
  if (f.members.empty()) throw std::invalid_argument("neighborhood family is empty");
  for (const auto& u : f.members) {
    if (!u.contains(Rational(0))) {
      throw std::invalid_argument("family member " + toString(u) + " misses 0");
    }
  }
}

std::vector<std::pair<Rational, Rational>> samplePairs(std::uint64_t budget, std::uint64_t seed) {
  Rng rng = Rng::forCheck(seed, "localbase.iv");
  std::vector<std::pair<Rational, Rational>> out;
  while (out.size() < capped(budget, 200)) {
    Rational x = sampleHalfLine(rng), y = sampleHalfLine(rng);
    if (x == y) continue;
    if (x < y) std::swap(x, y);
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

struct Triple {
  std::size_t w;
  Rational x;
  Scalar alpha;
};

// (W, x, alpha) probes; the first one is (first member, 1, 1) so that the
// headline refutation of (v) does not move with the seed.
std::vector<Triple> sampleTriples(const NbhdFamily& f, std::uint64_t budget, std::uint64_t seed) {
  Rng rng = Rng::forCheck(seed, "localbase.v");
  const EvsDescriptor h = halfLine();
  std::vector<Triple> out{{0, Rational(1), Scalar(1)}};
  while (out.size() < capped(budget, 200)) {
    Scalar alpha = out.size() % 4 == 0 ? Scalar(0) : h.randomScalar(rng, Rational(4));
    out.push_back({rng.below(f.members.size()), sampleHalfLine(rng), std::move(alpha)});
  }
  return out;
}

}  // namespace

OutcomeMap checkLocalBaseConditions(const NbhdFamily& f, std::uint64_t budget, std::uint64_t seed) {
  validateFamily(f);
  OutcomeMap out;
  const EvsDescriptor h = halfLine();
  const auto& fs = f.members;

  out["localbase.i"] = CheckOutcome::proven(fs.size(), seed, "every member balanced and absorbing");
  for (const auto& u : fs) {
    for (const auto& verdict : {isBalanced(u, budget, seed), isAbsorbing(u, h, budget, seed)}) {
      if (verdict.proven()) continue;
      Witness w = verdict.witness.value_or(Witness{});
      w.description = "member " + toString(u) + ": " + w.description;
      out["localbase.i"] = CheckOutcome::refuted(std::move(w), fs.size(), seed);
      break;
    }
    if (out["localbase.i"].refuted()) break;
  }

  out["localbase.ii"] = CheckOutcome::proven(fs.size(), seed, "each member has a halving member");
  for (const auto& u : fs) {
    const bool found = std::any_of(fs.begin(), fs.end(), [&](const IntervalUnion& v) {
      return minkowskiSum(v, v).isSubsetOf(u);
    });
    if (!found) {
      out["localbase.ii"] = CheckOutcome::refuted(
          {{}, {}, "no V in the family has V + V inside " + toString(u)}, fs.size(), seed);
      break;
    }
  }

  out["localbase.iii"] = CheckOutcome::proven(fs.size() * fs.size(), seed,
                                              "every pairwise intersection contains a member");
  for (std::size_t i = 0; i < fs.size() && !out["localbase.iii"].refuted(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const IntervalUnion meet = fs[i].intersect(fs[j]);
      const bool found = std::any_of(fs.begin(), fs.end(),
                                     [&](const IntervalUnion& w) { return w.isSubsetOf(meet); });
      if (!found) {
        out["localbase.iii"] = CheckOutcome::refuted(
            {{}, {}, "no member inside " + toString(fs[i]) + " n " + toString(fs[j])},
            fs.size() * fs.size(), seed);
        break;
      }
    }
  }

  std::uint64_t tried = 0;
  out["localbase.iv"] = CheckOutcome{};
  for (const auto& [x, y] : samplePairs(budget, seed)) {
    ++tried;
    if (!separatedByFamily(f, x, y)) {
      out["localbase.iv"] = CheckOutcome::refuted(
          {{x, y}, {}, "no U, V in the family give up(x + U) n down(y + V) empty"}, tried, seed);
      break;
    }
  }
  if (!out["localbase.iv"].refuted()) {
    out["localbase.iv"] = CheckOutcome::unfalsified(tried, seed, "every sampled pair separated");
  }

  tried = 0;
  for (const auto& t : sampleTriples(f, budget, seed)) {
    ++tried;
    if (continuousInFamily(f, fs[t.w], t.x, t.alpha)) continue;
    std::string why = "W = " + toString(fs[t.w]) + ": no eps = 2^-k (k <= 12) and U in the family";
    if (sgn(t.x) > 0 && !t.alpha.isZero()) {
      why += "; for every eps > 0 some |lambda| in (|alpha| - eps, |alpha|) sends x below alpha x";
    }
    out["localbase.v"] = CheckOutcome::refuted({{t.x}, {t.alpha}, why}, tried, seed);
    break;
  }
  if (!out.count("localbase.v")) {
    out["localbase.v"] = CheckOutcome::unfalsified(tried, seed, "every sampled triple continuous");
  }
  return out;
}

CheckOutcome checkFamilyTransport(const ShippedMorphism& phi, const NbhdFamily& f,
                                  std::uint64_t budget, std::uint64_t seed) {
  const CheckOutcome morphism = checkOrderMorphism(phi.map, phi.source, phi.target, budget, seed);
  if (morphism.refuted()) {
    Witness w = *morphism.witness;
    w.description = phi.map.name + " is not an order-morphism: " + w.description;
    return CheckOutcome::refuted(std::move(w), morphism.samplesTried, seed);
  }
  if (!phi.map.hasInverse()) throw std::invalid_argument(phi.map.name + " has no inverse");
  if (phi.target.name != "halfline") {
    throw std::invalid_argument("family transport needs a half-line target");
  }
  NbhdFamily g{f.instance, {}};
  for (const auto& u : f.members) g.members.push_back(std::get<IntervalUnion>(transportSet(phi, u)));

  const OutcomeMap before = checkLocalBaseConditions(f, budget, seed);
  const OutcomeMap after = checkLocalBaseConditions(g, budget, seed);
  std::string vector;
  for (const char* id : {"localbase.i", "localbase.ii", "localbase.iii"}) {
    if (before.at(id).verdict != after.at(id).verdict) {
      return CheckOutcome::refuted({{}, {}, std::string(id) + " changes under " + phi.map.name}, 1,
                                   seed);
    }
    vector += std::string(vector.empty() ? "" : ", ") + id + "=" +
              std::string(toString(before.at(id).verdict));
  }
  auto image = [&](const Rational& r) { return phi.map(r).as<Rational>(); };
  std::uint64_t tried = 0;
  for (const auto& [x, y] : samplePairs(budget, seed)) {
    ++tried;
    if (separatedByFamily(f, x, y) != separatedByFamily(g, image(x), image(y))) {
      return CheckOutcome::refuted({{x, y}, {}, "(iv) verdict moves under " + phi.map.name}, tried,
                                   seed);
    }
  }
  for (const auto& t : sampleTriples(f, budget, seed)) {
    ++tried;
    if (continuousInFamily(f, f.members[t.w], t.x, t.alpha) !=
        continuousInFamily(g, g.members[t.w], image(t.x), t.alpha)) {
      return CheckOutcome::refuted({{t.x}, {t.alpha}, "(v) verdict moves under " + phi.map.name},
                                   tried, seed);
    }
  }
  return CheckOutcome::unfalsified(tried, seed, vector + " preserved; (iv), (v) agree on images");
}

CheckOutcome openBalancedAbsorbingForm(const IntervalUnion& a) {
  bool lhs = false;
  if (!a.empty()) {
    lhs = isUsualOpen(a) && isBalanced(a).proven() && isAbsorbing(a, halfLine()).proven();
  }
  const auto& cs = a.components();
  const bool rhs = cs.size() == 1 && isZero(cs[0].lo) && cs[0].loClosed &&
                   (!cs[0].hi || (!cs[0].hiClosed && sgn(*cs[0].hi) > 0));
  if (lhs != rhs) {
    return CheckOutcome::refuted(
        {{}, {}, toString(a) + (lhs ? " is open, balanced and absorbing but not [0,a)"
                                    : " has the form [0,a) but fails a property")},
        1, 0);
  }
  std::string note = "not of the form [0,a)";
  if (rhs) note = "a = " + (cs[0].hi ? toString(*cs[0].hi) : std::string("inf"));
  return CheckOutcome::proven(1, 0, note);
}

IntervalFormReport checkBalancedAbsorbingForm(const std::vector<IntervalUnion>& corpus,
                                              std::uint64_t seed) {
  IntervalFormReport rep;
  const EvsDescriptor h = halfLine();
  for (const auto& a : corpus) {
    if (a.empty()) continue;
    ++rep.checked;
    const bool lhs = isBalanced(a).proven() && isAbsorbing(a, h).proven();
    const auto& cs = a.components();
    const bool anchored = cs.size() == 1 && isZero(cs[0].lo) && cs[0].loClosed;
    const bool amended = anchored && (!cs[0].hi || sgn(*cs[0].hi) > 0);
    if (lhs != amended) rep.disagreements.push_back(a);
    if (anchored && !lhs &&
        std::find(rep.degenerate.begin(), rep.degenerate.end(), a) == rep.degenerate.end()) {
      rep.degenerate.push_back(a);
    }
  }
  if (!rep.disagreements.empty()) {
    rep.outcome = CheckOutcome::refuted(
        {{}, {}, toString(rep.disagreements.front()) + " breaks the amended equivalence"},
        rep.checked, seed);
    return rep;
  }
  std::string note = "balanced and absorbing iff [0,a> with a > 0";
  for (const auto& d : rep.degenerate) {
    note += "; " + toString(d) + " is an interval from 0 but not absorbing";
  }
  rep.outcome = CheckOutcome::unfalsified(rep.checked, seed, note);
  return rep;
}

namespace {

CheckOutcome auditGenerator(const IntervalUnion& g) {
  const auto& cs = g.components();
  const Rational half = makeRational(1, 2);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Interval& c = cs[i];
    const Rational prevHi = i ? *cs[i - 1].hi : Rational(0);
    const std::optional<Rational> nextLo =
        i + 1 < cs.size() ? std::optional<Rational>(cs[i + 1].lo) : std::nullopt;
    // t slightly above 1 pushes a right end b into the gap after it.
    auto above = [&](const Rational& b) {
      return Rational(1 + (nextLo ? std::min(half, Rational((*nextLo - b) / (2 * b))) : half));
    };
    Witness w;
    if (c.contains(Rational(0))) {
      if (!c.hi || !c.hiClosed) continue;
      if (isZero(*c.hi)) {
        const Rational mu = nextLo ? std::min(half, Rational(*nextLo / 2)) : half;
        w = {{Rational(1)}, {Scalar(mu)},
             "component {0}: open sets holding theta are absorbing, yet " + toString(mu) +
                 " . 1 is outside G"};
      } else {
        const Rational t = above(*c.hi);
        w = {{*c.hi}, {Scalar(t)},
             "component " + toString(c) + " is closed at its right end; t . a = " +
                 toString(Rational(t * *c.hi)) + " leaves G"};
      }
    } else if (c.loClosed) {
      const Rational t = 1 - std::min(half, Rational((c.lo - prevHi) / (2 * c.lo)));
      w = {{c.lo}, {Scalar(t)},
           "component " + toString(c) + " is closed at its left end " + toString(c.lo) +
               " > 0; t . a = " + toString(Rational(t * c.lo)) + " leaves G"};
    } else if (c.hi && c.hiClosed) {
      const Rational t = above(*c.hi);
      w = {{*c.hi}, {Scalar(t)},
           "component " + toString(c) + " is closed at its right end; t . b = " +
               toString(Rational(t * *c.hi)) + " leaves G"};
    } else {
      continue;
    }
    const Rational moved = w.scalars[0].re() * w.elements[0].as<Rational>();
    if (g.contains(moved)) throw std::logic_error("audit escape scalar stays in G");
    return CheckOutcome::refuted(std::move(w), i + 1, 0);
  }
  return CheckOutcome::proven(cs.size(), 0, "usual-open");
}

}  // namespace

AuditReport finestTopologyAudit(const std::vector<IntervalUnion>& generators) {
  AuditReport rep;
  for (const auto& g : generators) rep.generators.push_back(auditGenerator(g));
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    if (!rep.generators[i].refuted()) continue;
    Witness w = *rep.generators[i].witness;
    w.description = "generator " + std::to_string(i + 1) + " " + toString(generators[i]) + ": " +
                    w.description;
    rep.overall = CheckOutcome::refuted(std::move(w), generators.size(), 0);
    return rep;
  }
  rep.overall = CheckOutcome::proven(generators.size(), 0,
                                     "every generator is usual-open, so the topology is coarser");
  return rep;
}

}  // namespace evs
