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

// Text form of exact sets.
//
//   halfline   [0,1/2) U (3/4,2] U {5,7}        {} is the empty set
//   dict2      [0,1)x[0,inf) U [1,1]x[0,2)
//   lattice2   ALL | ALL\{zero,span(1,2)} | {zero,full}
//   cone:n     [0,1)xball(1/2) U ([0,1) U (2,3))x{(0,1/2+i)} U [0,1]xall
//
// Whitespace is free between tokens.

#ifndef EVS_SET_EXPR_HPP_
#define EVS_SET_EXPR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "evs/set_rep.hpp"

namespace evs {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Domain };
  ParseError(Kind kind, std::size_t offset, const std::string& what)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + what),
        kind_(kind),
        offset_(offset) {}
  Kind kind() const { return kind_; }
  // Byte offset into the parsed text.
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// Parses `text` as a set of the instance named `instance` ("halfline",
/// "dict2", "lattice2", "cone:n"). Throws ParseError, or
/// std::invalid_argument for instances without a set grammar.
SetRep parseSetExpression(std::string_view text, std::string_view instance);

// Inverse of parseSetExpression up to canonical form.
std::string renderSetExpression(const SetRep& a);

/// One expression per line; blank lines and lines starting with '#' are
/// skipped. Errors carry the line number in their message.
std::vector<SetRep> parseSetFile(std::string_view contents, std::string_view instance);

}  // namespace evs

#endif  // EVS_SET_EXPR_HPP_
