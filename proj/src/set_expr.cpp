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

#include "evs/set_expr.hpp"

#include <cctype>
#include <optional>

namespace evs {

namespace {

enum class Grammar { HalfLine, Dict, Lattice, Cone };

class Parser {
 public:
  Parser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  SetRep parse(Grammar g, std::size_t dim) {
    SetRep out = parseSet(g, dim);
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, base_ + pos_, what);
  }
  [[noreturn]] void failDomain(std::size_t at, const std::string& what) const {
    throw ParseError(ParseError::Kind::Domain, base_ + at, what);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(std::string_view lit) {
    skipSpace();
    return text_.substr(pos_, lit.size()) == lit;
  }
  bool accept(std::string_view lit) {
    if (!peek(lit)) return false;
    pos_ += lit.size();
    return true;
  }
  void expect(std::string_view lit) {
    if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
  }

  // Maximal run of characters that can appear in a number.
  std::string_view numberToken(bool allowImaginary) {
    skipSpace();
    std::size_t end = pos_;
    while (end < text_.size()) {
      const char c = text_[end];
      const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' ||
                      c == '+' || (allowImaginary && c == 'i');
      if (!ok) break;
      ++end;
    }
    return text_.substr(pos_, end - pos_);
  }

  Rational rational() {
    std::string_view tok = numberToken(false);
    auto q = parseRational(tok);
    if (!q) fail("expected a rational");
    pos_ += tok.size();
    return *q;
  }

  Scalar scalar() {
    std::string_view tok = numberToken(true);
    auto s = parseScalar(tok);
    if (!s) fail("expected a scalar");
    pos_ += tok.size();
    return *s;
  }

  Interval interval() {
    skipSpace();
    Interval iv;
    if (accept("[")) {
      iv.loClosed = true;
    } else if (accept("(")) {
      iv.loClosed = false;
    } else {
      fail("expected '[' or '('");
    }
    skipSpace();
    const std::size_t loAt = pos_;
    iv.lo = rational();
    if (sgn(iv.lo) < 0) failDomain(loAt, "left endpoint below 0");
    expect(",");
    if (accept("inf")) {
      iv.hi.reset();
    } else {
      skipSpace();
      const std::size_t hiAt = pos_;
      iv.hi = rational();
      if (*iv.hi < iv.lo) failDomain(hiAt, "right endpoint below left endpoint");
    }
    if (accept("]")) {
      if (!iv.hi) fail("inf cannot be a closed end");
      iv.hiClosed = true;
    } else if (accept(")")) {
      iv.hiClosed = false;
    } else {
      fail("expected ']' or ')'");
    }
    return iv;
  }

  std::vector<Interval> halfLineTerm() {
    if (accept("{")) {
      std::vector<Interval> pts;
      if (accept("}")) return pts;
      do {
        skipSpace();
        const std::size_t at = pos_;
        Rational r = rational();
        if (sgn(r) < 0) failDomain(at, "point below 0");
        pts.push_back(Interval::point(r));
      } while (accept(","));
      expect("}");
      return pts;
    }
    return {interval()};
  }

  // "(" opens either an interval or a parenthesized union of intervals.
  IntervalUnion radialPart() {
    skipSpace();
    const std::size_t save = pos_;
    if (accept("(") && (peek("[") || peek("("))) {
      std::vector<Interval> parts{interval()};
      while (accept("U")) parts.push_back(interval());
      expect(")");
      return IntervalUnion(std::move(parts));
    }
    pos_ = save;
    return IntervalUnion{interval()};
  }

  ScalarVector vec(std::size_t dim) {
    expect("(");
    ScalarVector v{scalar()};
    while (accept(",")) v.push_back(scalar());
    if (v.size() != dim) fail("vector of length " + std::to_string(v.size()) + ", expected " +
                              std::to_string(dim));
    expect(")");
    return v;
  }

  VectorRegion region(std::size_t dim) {
    if (accept("all")) return VectorRegion::whole(dim);
    if (accept("ball")) {
      const bool closed = accept("[");
      if (!closed) expect("(");
      skipSpace();
      const std::size_t at = pos_;
      Rational t = rational();
      if (sgn(t) < 0) failDomain(at, "negative radius");
      expect(closed ? "]" : ")");
      return VectorRegion::ball(dim, t, closed);
    }
    expect("{");
    std::vector<ScalarVector> pts{vec(dim)};
    while (accept(",")) pts.push_back(vec(dim));
    expect("}");
    return VectorRegion::finite(dim, std::move(pts));
  }

  Subspace subspace() {
    if (accept("zero")) return Subspace::zero(2);
    if (accept("full")) return Subspace::full(2);
    expect("span(");
    RationalMatrix rows;
    do {
      std::vector<Rational> row{rational()};
      expect(",");
      row.push_back(rational());
      rows.push_back(std::move(row));
    } while (accept(";"));
    expect(")");
    return Subspace::span(2, rows);
  }

  std::vector<Subspace> subspaceList() {
    expect("{");
    std::vector<Subspace> out;
    if (accept("}")) return out;
    do {
      out.push_back(subspace());
    } while (accept(","));
    expect("}");
    return out;
  }

  SetRep parseSet(Grammar g, std::size_t dim) {
    switch (g) {
      case Grammar::Lattice:
        if (accept("ALL")) {
          if (accept("\\")) return LatticeFamily::cofinite(subspaceList());
          return LatticeFamily::all();
        }
        return LatticeFamily::finite(subspaceList());
      case Grammar::HalfLine: {
        std::vector<Interval> parts = halfLineTerm();
        while (accept("U")) {
          for (auto& p : halfLineTerm()) parts.push_back(std::move(p));
        }
        return IntervalUnion(std::move(parts));
      }
      case Grammar::Dict: {
        if (accept("{}")) return BoxUnion{};
        std::vector<Box> boxes;
        do {
          Interval x = interval();
          expect("x");
          boxes.push_back({std::move(x), interval()});
        } while (accept("U"));
        return BoxUnion(std::move(boxes));
      }
      case Grammar::Cone: {
        if (accept("{}")) return ProductSlice(dim, {});
        std::vector<SlicePiece> pieces;
        do {
          IntervalUnion r = radialPart();
          expect("x");
          pieces.push_back({std::move(r), region(dim)});
        } while (accept("U"));
        return ProductSlice(dim, std::move(pieces));
      }
    }
    fail("unknown grammar");
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::pair<Grammar, std::size_t> grammarFor(std::string_view instance) {
  if (instance == "halfline") return {Grammar::HalfLine, 0};
  if (instance == "dict2") return {Grammar::Dict, 0};
  if (instance == "lattice2") return {Grammar::Lattice, 0};
  if (instance.rfind("cone:", 0) == 0) {
    const std::string n(instance.substr(5));
    if (!n.empty() && n.find_first_not_of("0123456789") == std::string::npos) {
      return {Grammar::Cone, std::stoul(n)};
    }
  }
  throw std::invalid_argument("no set grammar for instance " + std::string(instance));
}

SetRep parseAt(std::string_view text, std::string_view instance, std::size_t base) {
  const auto [g, dim] = grammarFor(instance);
  return Parser(text, base).parse(g, dim);
}

}  // namespace

SetRep parseSetExpression(std::string_view text, std::string_view instance) {
  return parseAt(text, instance, 0);
}

std::string renderSetExpression(const SetRep& a) {
  if (std::holds_alternative<PredicateSet>(a)) {
    throw std::invalid_argument("predicate sets have no text form");
  }
  return render(a);
}

std::vector<SetRep> parseSetFile(std::string_view contents, std::string_view instance) {
  std::vector<SetRep> out;
  std::size_t start = 0, line = 1;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view text = contents.substr(start, end - start);
    const auto first = text.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && text[first] != '#') {
      if (text.back() == '\r') text.remove_suffix(1);
      try {
        out.push_back(parseAt(text, instance, start));
      } catch (const ParseError& e) {
        throw ParseError(e.kind(), e.offset(), "line " + std::to_string(line) + ": " +
                                                   std::string(e.what()).substr(
                                                       std::string(e.what()).find(": ") + 2));
      }
    }
    if (end == contents.size()) break;
    start = end + 1;
    ++line;
  }
  return out;
}

}  // namespace evs
