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

#include "evs/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "evs/instances.hpp"
#include "evs/set_expr.hpp"
#include "evs/set_laws.hpp"
#include "evs/topology.hpp"

namespace evs {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::json;

class Recorder {
 public:
  explicit Recorder(std::string instance) : instance_(std::move(instance)) {}

  void one(const std::string& check, const std::function<CheckOutcome()>& run) {
    const auto t0 = Clock::now();
    CheckOutcome o = run();
    records_.push_back({check, instance_, std::move(o), ms(t0)});
  }
  // Every record of the map shares the map's elapsed time.
  void many(const std::function<OutcomeMap()>& run) {
    const auto t0 = Clock::now();
    OutcomeMap m = run();
    const double elapsed = ms(t0);
    for (auto& [id, o] : m) records_.push_back({id, instance_, std::move(o), elapsed});
  }
  std::vector<ReportRecord> take() { return std::move(records_); }

 private:
  static double ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
  std::string instance_;
  std::vector<ReportRecord> records_;
};

std::string readInput(const RunConfig& c) {
  if (!c.inputPath) throw InputError("this suite needs --input <file>");
  std::ifstream in(*c.inputPath, std::ios::binary);
  if (!in) throw InputError("cannot read " + *c.inputPath);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<SetRep> readSets(const RunConfig& c, const std::string& instance) {
  const std::string text = readInput(c);
  try {
    return parseSetFile(text, instance);
  } catch (const ParseError& e) {
    throw InputError(*c.inputPath + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::vector<IntervalUnion> readIntervalSets(const RunConfig& c) {
  std::vector<IntervalUnion> out;
  for (auto& s : readSets(c, "halfline")) out.push_back(std::get<IntervalUnion>(std::move(s)));
  return out;
}

EvsDescriptor instanceOrThrow(const std::string& spec) {
  try {
    return makeInstance(spec);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string indexed(const std::string& prefix, std::size_t i, const std::string& what) {
  return prefix + "[" + std::to_string(i + 1) + "]" + (what.empty() ? "" : "." + what);
}

void axioms(Recorder& r, const EvsDescriptor& e, const RunConfig& c) {
  r.many([&] { return checkAxioms(e, c.budget, c.seed); });
}

void radial(Recorder& r, const EvsDescriptor& e, const RunConfig& c) {
  r.one("radial", [&] { return checkRadial(e, c.budget, c.seed); });
  if (e.name.rfind("product:(", 0) == 0) {
    std::vector<EvsDescriptor> parts;
    for (const auto& p : splitTopLevel(e.name.substr(9, e.name.size() - 10), ',')) {
      parts.push_back(makeInstance(p));
    }
    r.one("radial.product", [&] { return checkRadialProductAndHereditary(parts, {}, c.budget, c.seed); });
  }
  if (e.name == "cone:1") {
    r.one("radial.hereditary", [&] {
      return checkRadialProductAndHereditary({}, {coneAxisSubevs()}, c.budget, c.seed);
    });
  }
}

void setLaws(Recorder& r, const EvsDescriptor& e, const RunConfig& c) {
  r.many([&] { return checkAbsorbingClosureLaws(e, c.budget, c.seed); });
  r.many([&] { return checkBalancedClosureLaws(e, c.budget, c.seed); });
}

void sets(Recorder& r, const EvsDescriptor& e, const RunConfig& c) {
  if (c.inputPath) {
    const auto input = readSets(c, e.name);
    for (std::size_t i = 0; i < input.size(); ++i) {
      const SetRep& a = input[i];
      if (!isEmpty(a)) {
        r.one(indexed("set", i, "balanced"), [&] { return isBalanced(a, c.budget, c.seed); });
      }
      r.one(indexed("set", i, "absorbing"), [&] { return isAbsorbing(a, e, c.budget, c.seed); });
    }
  }
  setLaws(r, e, c);
}

void bounded(Recorder& r, const EvsDescriptor& e, const RunConfig& c) {
  if (c.inputPath) {
    const auto input = readSets(c, e.name);
    for (std::size_t i = 0; i < input.size(); ++i) {
      const SetRep& a = input[i];
      r.one(indexed("set", i, "bounded"), [&] { return isBoundedSet(a, e, c.budget, c.seed); });
    }
  }
  r.many([&] { return checkBoundedLaws(e, c.budget, c.seed); });
}

void localBase(Recorder& r, const EvsDescriptor& e, const RunConfig& c) {
  if (e.name != "halfline") throw InputError("localbase runs on halfline only");
  NbhdFamily f{"halfline", readIntervalSets(c)};
  try {
    r.many([&] { return checkLocalBaseConditions(f, c.budget, c.seed); });
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
}

void audit(Recorder& r, const RunConfig& c) {
  const auto gens = readIntervalSets(c);
  const AuditReport rep = finestTopologyAudit(gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    r.one(indexed("audit", i, ""), [&] { return rep.generators[i]; });
  }
  r.one("audit", [&] { return rep.overall; });
}

void morphism(Recorder& r, const RunConfig& c) {
  ShippedMorphism phi = [&] {
    try {
      return shippedMorphism(c.target);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  r.one("morphism", [&] {
    return checkOrderMorphism(phi.map, phi.source, phi.target, c.budget, c.seed);
  });
  if (!phi.map.hasInverse()) return;
  r.one("transport.absorbing", [&] { return checkAbsorbingTransport(phi, c.budget, c.seed); });
  r.one("transport.radial", [&] { return checkRadialTransport(phi, c.budget, c.seed); });
  if (phi.target.name == "halfline") {
    NbhdFamily f;
    for (long n = 1; n <= 8; ++n) {
      f.members.push_back(IntervalUnion{Interval::closedOpen(Rational(0), makeRational(1, n))});
    }
    r.one("transport.family", [&] { return checkFamilyTransport(phi, f, c.budget, c.seed); });
  }
}

json witnessJson(const Witness& w) {
  json els = json::array(), scs = json::array();
  for (const auto& x : w.elements) els.push_back(toString(x));
  for (const auto& s : w.scalars) scs.push_back(toString(s));
  return {{"elements", els}, {"scalars", scs}, {"description", w.description}};
}

}  // namespace

std::optional<Suite> parseSuite(std::string_view name) {
  static const std::pair<std::string_view, Suite> kNames[] = {
      {"axioms", Suite::Axioms},       {"sets", Suite::Sets},   {"radial", Suite::Radial},
      {"bounded", Suite::Bounded},     {"localbase", Suite::LocalBase},
      {"audit", Suite::Audit},         {"morphism", Suite::Morphism}, {"all", Suite::All}};
  for (const auto& [n, s] : kNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

RunResult runSuite(const RunConfig& c) {
  if (c.budget < 1) throw InputError("budget must be at least 1");
  const std::string instance =
      c.suite == Suite::Audit ? "halfline" : (c.suite == Suite::Morphism ? "morphism:" + c.target : c.target);
  Recorder r(instance);
  switch (c.suite) {
    case Suite::Audit:
      audit(r, c);
      break;
    case Suite::Morphism:
      morphism(r, c);
      break;
    default: {
      const EvsDescriptor e = instanceOrThrow(c.target);
      switch (c.suite) {
        case Suite::Axioms: axioms(r, e, c); break;
        case Suite::Sets: sets(r, e, c); break;
        case Suite::Radial: radial(r, e, c); break;
        case Suite::Bounded: bounded(r, e, c); break;
        case Suite::LocalBase: localBase(r, e, c); break;
        default:
          axioms(r, e, c);
          r.one("order.partial", [&] { return checkPartialOrder(e, c.budget, c.seed); });
          r.one("primitive.scaling", [&] { return checkPrimitiveScaling(e, c.budget, c.seed); });
          setLaws(r, e, c);
          radial(r, e, c);
          r.many([&] { return checkBoundedLaws(e, c.budget, c.seed); });
      }
    }
  }
  RunResult out{r.take(), 0};
  const bool findings = c.suite == Suite::LocalBase || c.suite == Suite::Audit;
  for (const auto& rec : out.records) {
    if (rec.outcome.refuted() && !(findings && c.findingsOk)) out.exitStatus = 1;
  }
  return out;
}

std::string formatRecord(const ReportRecord& r, Format f) {
  const CheckOutcome& o = r.outcome;
  if (f == Format::JsonLines) {
    json j = {{"check", r.check},
              {"instance", r.instance},
              {"verdict", std::string(toString(o.verdict))},
              {"witness", o.witness ? witnessJson(*o.witness) : json(nullptr)},
              {"samplesTried", o.samplesTried},
              {"seed", o.seed},
              {"note", o.note},
              {"elapsed", r.elapsedMs}};
    return j.dump();
  }
  std::string line = r.check + ": " + std::string(toString(o.verdict)) + " (" +
                     std::to_string(o.samplesTried) + " samples, seed " + std::to_string(o.seed) + ")";
  if (o.witness) line += " witness: " + render(*o.witness);
  if (!o.note.empty()) line += " [" + o.note + "]";
  return line;
}

}  // namespace evs
