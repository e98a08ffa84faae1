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

#ifndef EVS_OUTCOME_HPP_
#define EVS_OUTCOME_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evs/element.hpp"
#include "evs/scalar.hpp"

namespace evs {

enum class Verdict { Proven, Refuted, Unfalsified };

std::string_view toString(Verdict v);

/// Structured counterexample. The elements and scalars are the bindings of
/// the violated law, in the order the law declares them.
struct Witness {
  std::vector<Element> elements;
  std::vector<Scalar> scalars;
  std::string description;
};

std::string render(const Witness& w);

/// Result of one check. Refuted always carries a witness; Proven is only
/// produced by exact decision procedures.
struct CheckOutcome {
  Verdict verdict = Verdict::Unfalsified;
  std::optional<Witness> witness;
  std::uint64_t samplesTried = 0;
  std::uint64_t seed = 0;
  // Free-form remark (assumptions, extracted parameters).
  std::string note;

  bool refuted() const { return verdict == Verdict::Refuted; }
  bool proven() const { return verdict == Verdict::Proven; }

  static CheckOutcome proven(std::uint64_t samples, std::uint64_t seed, std::string note = {});
  static CheckOutcome unfalsified(std::uint64_t samples, std::uint64_t seed, std::string note = {});
  static CheckOutcome refuted(Witness w, std::uint64_t samples, std::uint64_t seed,
                              std::string note = {});
};

using OutcomeMap = std::map<std::string, CheckOutcome>;

}  // namespace evs

#endif  // EVS_OUTCOME_HPP_
