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

#include <gtest/gtest.h>

#include "evs/set_expr.hpp"
#include "evs/set_laws.hpp"
#include "oracle.hpp"

namespace evs {
namespace {

Rational q(long n, long d = 1) { return makeRational(n, d); }

std::size_t errorOffset(std::string_view text, std::string_view instance,
                        ParseError::Kind* kind = nullptr) {
  try {
    parseSetExpression(text, instance);
  } catch (const ParseError& e) {
    if (kind) *kind = e.kind();
    return e.offset();
  }
  ADD_FAILURE() << "no error for " << text;
  return 0;
}

TEST(ParseTest, HalfLine) {
  const SetRep a = parseSetExpression("[0,1/2) U (3/4,2]", "halfline");
  ASSERT_TRUE(std::holds_alternative<IntervalUnion>(a));
  EXPECT_EQ(std::get<IntervalUnion>(a).components().size(), 2u);
  EXPECT_EQ(render(parseSetExpression("[0,1) U [1,2)", "halfline")), testing::expected("[0,1) U [1,2)"));
  EXPECT_EQ(render(parseSetExpression("  [ 2 , inf ) ", "halfline")), "[2,inf)");
  EXPECT_EQ(render(parseSetExpression("{3, 1/2} U [0,1/4]", "halfline")), "[0,1/4] U [1/2,1/2] U [3,3]");
  EXPECT_EQ(render(parseSetExpression("{}", "halfline")), "{}");
}

TEST(ParseTest, NegativeEndpointIsDomainError) {
  ParseError::Kind kind = ParseError::Kind::Syntax;
  EXPECT_EQ(errorOffset("[-1,0)", "halfline", &kind), 1u);
  EXPECT_EQ(kind, ParseError::Kind::Domain);
  EXPECT_EQ(errorOffset("[0,1) U (-3,2)", "halfline", &kind), 9u);
  EXPECT_EQ(kind, ParseError::Kind::Domain);
}

TEST(ParseTest, SyntaxErrorOffsets) {
  ParseError::Kind kind = ParseError::Kind::Domain;
  EXPECT_EQ(errorOffset("[0,1", "halfline", &kind), 4u);
  EXPECT_EQ(kind, ParseError::Kind::Syntax);
  EXPECT_EQ(errorOffset("[0;1)", "halfline"), 2u);
  EXPECT_EQ(errorOffset("[0,1) junk", "halfline"), 6u);
  EXPECT_EQ(errorOffset("[0,inf]", "halfline"), 7u);
  EXPECT_EQ(errorOffset("[0,x)", "halfline"), 3u);
  EXPECT_EQ(errorOffset("[2,1]", "halfline", &kind), 3u);
  EXPECT_EQ(kind, ParseError::Kind::Domain);
}

TEST(ParseTest, Dictionary) {
  const SetRep a = parseSetExpression("[0,1)x[0,2] U [3,4]x(0,inf)", "dict2");
  ASSERT_TRUE(std::holds_alternative<BoxUnion>(a));
  EXPECT_TRUE(contains(a, DictElem{q(1, 2), q(2)}));
  EXPECT_TRUE(contains(a, DictElem{q(3), q(100)}));
  EXPECT_FALSE(contains(a, DictElem{q(3), q(0)}));
}

TEST(ParseTest, Lattice) {
  EXPECT_TRUE(std::get<LatticeFamily>(parseSetExpression("ALL", "lattice2")).isAll());
  const SetRep f = parseSetExpression("ALL\\{zero, span(1,2)}", "lattice2");
  EXPECT_FALSE(contains(f, Subspace::zero(2)));
  EXPECT_FALSE(contains(f, Subspace::span(2, {{q(2), q(4)}})));
  EXPECT_TRUE(contains(f, Subspace::full(2)));
  const SetRep g = parseSetExpression("{full, span(1,0;0,1)}", "lattice2");
  EXPECT_EQ(render(g), "{full}");
}

TEST(ParseTest, ConeSlices) {
  const SetRep s = parseSetExpression("[0,1)xball(2) U ([1,2] U [3,4))x{(0,1+i)}", "cone:2");
  ASSERT_TRUE(std::holds_alternative<ProductSlice>(s));
  EXPECT_TRUE(contains(s, ConeElem{q(1, 2), {Scalar(1), Scalar(-1)}}));
  EXPECT_TRUE(contains(s, ConeElem{q(3), {Scalar(0), Scalar(1, 1)}}));
  EXPECT_FALSE(contains(s, ConeElem{q(5, 2), {Scalar(0), Scalar(1, 1)}}));
  EXPECT_THROW(parseSetExpression("[0,1)x{(1)}", "cone:2"), ParseError);
}

TEST(ParseTest, UnknownInstance) {
  EXPECT_THROW(parseSetExpression("[0,1)", "twisted:2"), std::invalid_argument);
}

template <class Gen>
void roundTrip(const char* instance, Gen gen) {
  Rng rng = Rng::forCheck(42, instance);
  for (int i = 0; i < 300; ++i) {
    const SetRep a = gen(rng);
    const std::string text = renderSetExpression(a);
    const SetRep b = parseSetExpression(text, instance);
    EXPECT_TRUE(sameSet(a, b)) << instance << ": " << text;
    EXPECT_EQ(renderSetExpression(b), text);
  }
}

TEST(RoundTripTest, EveryKind) {
  roundTrip("halfline", [](Rng& r) { return SetRep(randomIntervalUnion(r)); });
  roundTrip("dict2", [](Rng& r) { return SetRep(randomBoxUnion(r)); });
  roundTrip("lattice2", [](Rng& r) { return SetRep(randomLatticeFamily(r)); });
  roundTrip("cone:2", [](Rng& r) { return SetRep(randomProductSlice(r, 2)); });
}

TEST(RoundTripTest, PredicateSetsHaveNoText) {
  PredicateSet p;
  p.label = "p";
  EXPECT_THROW(renderSetExpression(p), std::invalid_argument);
}

TEST(FileTest, SkipsCommentsAndReportsLines) {
  const std::string text = "# generators\n[0,1)\n\n  (1,2)\r\n";
  const auto sets = parseSetFile(text, "halfline");
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_EQ(render(sets[1]), "(1,2)");
  try {
    parseSetFile("[0,1)\n[0,2) U [-1,3)\n", "halfline");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 15u);
    EXPECT_EQ(e.kind(), ParseError::Kind::Domain);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

}  // namespace
}  // namespace evs
