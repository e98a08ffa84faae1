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

#include "evs/outcome.hpp"

namespace evs {

std::string_view toString(Verdict v) {
  switch (v) {
    case Verdict::Proven:
      return "Proven";
    case Verdict::Refuted:
      return "Refuted";
    case Verdict::Unfalsified:
      return "Unfalsified";
  }
  return "?";
}

std::string render(const Witness& w) {
  std::string out;
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    out += (i ? ", x" : "x") + std::to_string(i) + "=" + toString(w.elements[i]);
  }
  for (std::size_t i = 0; i < w.scalars.size(); ++i) {
    out += (out.empty() ? "a" : ", a") + std::to_string(i) + "=" + toString(w.scalars[i]);
  }
  if (!w.description.empty()) {
    out += (out.empty() ? "" : "; ") + w.description;
  }
  return out;
}

CheckOutcome CheckOutcome::proven(std::uint64_t samples, std::uint64_t seed, std::string note) {
  return {Verdict::Proven, std::nullopt, samples, seed, std::move(note)};
}

CheckOutcome CheckOutcome::unfalsified(std::uint64_t samples, std::uint64_t seed,
                                       std::string note) {
  return {Verdict::Unfalsified, std::nullopt, samples, seed, std::move(note)};
}

CheckOutcome CheckOutcome::refuted(Witness w, std::uint64_t samples, std::uint64_t seed,
                                   std::string note) {
  return {Verdict::Refuted, std::move(w), samples, seed, std::move(note)};
}

}  // namespace evs
