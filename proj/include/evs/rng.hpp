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

#ifndef EVS_RNG_HPP_
#define EVS_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "evs/rational.hpp"

namespace evs {

inline constexpr std::uint64_t kDefaultSeed = 42;

// Seeded generator with platform independent draws. The standard
// distributions are implementation defined, so bounded draws are done by
// rejection on the raw engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent substream for a named check; adding checks never perturbs
  // the draws seen by existing ones.
  static Rng forCheck(std::uint64_t seed, std::string_view checkId);

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  // Uniform in [lo, hi].
  long between(long lo, long hi);

  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  // p/q with |p| <= maxNum, 1 <= q <= maxDen.
  Rational smallRational(long maxNum, long maxDen, bool allowNegative);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t substreamSeed(std::uint64_t seed, std::string_view checkId);

}  // namespace evs

#endif  // EVS_RNG_HPP_
