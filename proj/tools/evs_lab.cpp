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

// evs-lab: runs the check suites and prints one record per check.
//
//   evs-lab axioms halfline --budget 10000
//   evs-lab radial lattice2 --format jsonlines
//   evs-lab audit --input gens.txt --findings-ok
//
// Exit status: 0 clean, 1 some check Refuted, 2 bad usage or input.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "evs/report.hpp"

namespace {

std::uint64_t defaultSeed() {
  if (const char* env = std::getenv("EVS_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring EVS_LAB_SEED=" << env << "\n";
    }
  }
  return evs::kCliDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for exponential vector spaces"};
  app.require_subcommand(1);

  evs::RunConfig config;
  config.seed = defaultSeed();
  std::string format = "text";
  std::string input;

  struct Entry {
    const char* name;
    const char* help;
    const char* positional;  // nullptr when the suite takes none
  };
  const Entry entries[] = {
      {"axioms", "axioms A1-A6 on an instance", "instance"},
      {"sets", "set deciders and closure laws (--input: sets to decide)", "instance"},
      {"radial", "radial separation", "instance"},
      {"bounded", "bounded sets (--input: sets to decide)", "instance"},
      {"localbase", "local base conditions for the family in --input", "instance"},
      {"audit", "finest-topology audit of the generators in --input", nullptr},
      {"morphism", "order-morphism and transport checks", "name"},
      {"all", "every suite that needs no input file", "instance"},
  };
  std::map<CLI::App*, evs::Suite> suites;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    if (e.positional) sub->add_option(e.positional, config.target)->required();
    sub->add_option("--budget", config.budget, "samples per check")->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "random seed (default 42, or EVS_LAB_SEED)");
    sub->add_option("--format", format)->check(CLI::IsMember({"text", "jsonlines"}));
    sub->add_option("--input", input, "file with one set expression per line");
    sub->add_flag("--findings-ok", config.findingsOk,
                  "exit 0 when localbase or audit only report findings");
    suites[sub] = *evs::parseSuite(e.name);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  config.suite = suites.at(app.get_subcommands().front());
  config.format = format == "jsonlines" ? evs::Format::JsonLines : evs::Format::Text;
  if (!input.empty()) config.inputPath = input;

  try {
    const evs::RunResult result = evs::runSuite(config);
    for (const auto& r : result.records) std::cout << evs::formatRecord(r, config.format) << "\n";
    return result.exitStatus;
  } catch (const evs::InputError& e) {
    std::cerr << "evs-lab: " << e.what() << "\n";
    return 2;
  }
}
