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

// Suite dispatch and report records behind the evs-lab tool.

#ifndef EVS_REPORT_HPP_
#define EVS_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evs/outcome.hpp"

namespace evs {

inline constexpr std::uint64_t kCliDefaultSeed = 42;

enum class Suite { Axioms, Sets, Radial, Bounded, LocalBase, Audit, Morphism, All };
enum class Format { Text, JsonLines };

std::optional<Suite> parseSuite(std::string_view name);

struct RunConfig {
  Suite suite = Suite::All;
  // Instance spec, or the morphism name for Suite::Morphism.
  std::string target;
  std::uint64_t budget = 1000;
  std::uint64_t seed = kCliDefaultSeed;
  std::optional<std::string> inputPath;
  Format format = Format::Text;
  bool findingsOk = false;
};

struct ReportRecord {
  std::string check;
  std::string instance;
  CheckOutcome outcome;
  double elapsedMs = 0;
};

struct RunResult {
  std::vector<ReportRecord> records;
  int exitStatus = 0;
};

// Bad configuration or input (unknown instance, unreadable file, parse error).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs the suite. Exit status is 0 when no record is Refuted, 1 otherwise;
/// Refuted records of localbase and audit are findings and keep status 0
/// under findingsOk. Throws InputError.
RunResult runSuite(const RunConfig& config);

// One line, no trailing newline. Witness elements and scalars render exactly.
std::string formatRecord(const ReportRecord& r, Format f);

}  // namespace evs

#endif  // EVS_REPORT_HPP_
