// Copyright 2026 The hdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "hdec/desugar.hpp"
#include "hdec/error.hpp"
#include "hdec/oracle.hpp"
#include "hdec/parser.hpp"
#include "support/gen.hpp"

namespace hdec {
namespace {

const char* kEmployees = R"(
# employee example
schema Emp(x:3, y:2)
mode utvpi
cdc: x2 = ICT -> y1 + y2 <= 5
cdc: x3 = Manager -> y2 >= 2
cdc: top -> y1 - y2 >= 0
view V1: x2 != ICT & x3 = Manager
view V2: y2 < 4
view V3: x3 != Manager
)";

TEST(Parser, EmployeeExample) {
  Problem p = parse_problem(kEmployees);
  EXPECT_EQ(p.schema, Schema::make("Emp", 3, 2));
  ASSERT_EQ(p.cdcs.size(), 3u);
  ASSERT_EQ(p.views.size(), 3u);
  EXPECT_EQ(p.cdcs[0].consequent, CFormula::single(Utvpi::make(1, 1, 1, 2, 5)));
  EXPECT_EQ(p.cdcs[1].consequent, CFormula::single(Utvpi::unary(-1, 2, -2)));
  EXPECT_TRUE(p.cdcs[2].antecedent.is_top());
  EXPECT_EQ(p.views[1].y_condition, CFormula::single(Utvpi::unary(1, 2, 3)));
  EXPECT_FALSE(p.views[0].y_condition.has_value());
}

TEST(Parser, TopCdc) {
  Problem p = parse_problem("schema R(x:0, y:1)\ncdc: top -> y1 >= 0\n");
  ASSERT_EQ(p.cdcs.size(), 1u);
  EXPECT_EQ(p.cdcs[0], (Cdc{BoolExpr::top(), CFormula::single(Utvpi::unary(-1, 1, 0))}));
}

TEST(Parser, ConjunctiveConsequentIsSplit) {
  Problem p = parse_problem("schema R(x:2, y:1)\ncdc: x2 = a -> y1 <= 0 & y1 > 0\n");
  ASSERT_EQ(p.cdcs.size(), 2u);
  EXPECT_EQ(p.cdcs[1].consequent, CFormula::single(Utvpi::unary(-1, 1, -1)));
}

TEST(Parser, EqualityViewIsKeptAndFailsLazily) {
  Problem p = parse_problem("schema R(x:0, y:1)\nview V: y1 = 0\n");
  ASSERT_EQ(p.views.size(), 1u);
  EXPECT_EQ(p.views[0].y_condition->atoms().size(), 2u);
  try {
    negate_cformula(*p.views[0].y_condition);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNegationNotSingleAtom);
  }
}

TEST(Parser, DisjunctiveViewSplits) {
  Problem p = parse_problem("schema R(x:1, y:1)\nview V: x1 = a | y1 > 0\n");
  ASSERT_EQ(p.views.size(), 2u);
  EXPECT_EQ(p.views[0].name, "V'");
  EXPECT_EQ(p.views[1].name, "V''");
  EXPECT_FALSE(p.views[0].y_condition.has_value());
  EXPECT_TRUE(p.views[1].x_condition.is_top());
}

TEST(Parser, Errors) {
  auto code_of = [](const char* text) {
    try {
      parse_problem(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kInvalidArgument;
  };
  EXPECT_EQ(code_of("schema R(x:1, y:1)\ncdc: x1 = a -> 2*y1 <= 0\n"),
            Errc::kCoefficientOutOfRange);
  EXPECT_EQ(code_of("schema R(x:1, y:1)\ncdc: x1 = a -> y3 <= 0\n"), Errc::kUnknownVariable);
  EXPECT_EQ(code_of("schema R(x:1, y:1)\ncdc: x1 = a -> y1 <= 0 | y1 >= 2\n"),
            Errc::kModeViolation);
  EXPECT_EQ(code_of("schema R(x:1, y:1)\ncdc x1 = a\n"), Errc::kParse);
  EXPECT_EQ(code_of("cdc: top -> y1 <= 0\n"), Errc::kParse);
  EXPECT_EQ(code_of("schema R(x:2, y:2)\nuind: R[x1] <= R[y1]\n"), Errc::kMixedUind);
  try {
    parse_problem("schema R(x:1, y:1)\n\ncdc: x1 = = a -> y1 <= 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(Parser, ButvpiAndConstraints) {
  Problem p = parse_problem(R"(
schema R(x:2, y:2)
mode butvpi
cdc: x1 = "a b" | !(x2 = c) -> y1 <= 0 | !(y2 > 3 & y1 = 2)
uind: R[x1] <= R[x2]
fd: {3} -> {4}
view V: x1 != a & (y1 > 1 | y2 < 0)
)");
  EXPECT_EQ(p.mode, LanguageMode::kButvpi);
  ASSERT_EQ(p.cdcs.size(), 1u);
  EXPECT_FALSE(p.cdcs[0].consequent.is_conjunction());
  EXPECT_EQ(p.uinds, (std::vector<Uind>{{1, 2}}));
  EXPECT_EQ(p.fds, (std::vector<Fd>{{{3}, {4}}}));
  Tuple t{{DomConstant("a b"), DomConstant("c")}, {0, 9}};
  EXPECT_TRUE(p.cdcs[0].holds_on(t));
}

TEST(Parser, RoundTripIsFixpoint) {
  testgen::Gen g(11);
  for (int n = 0; n < 200; ++n) {
    LanguageMode mode = n % 2 ? LanguageMode::kButvpi : LanguageMode::kUtvpi;
    // The first parse canonicalizes (UTVPI conjunctions are split per atom).
    Problem p = parse_problem(print_problem(testgen::random_cdc_problem(g, {}, mode)));
    std::string once = print_problem(p);
    Problem back = parse_problem(once);
    EXPECT_EQ(print_problem(back), once);
    EXPECT_EQ(back, p) << once;
  }
  Problem run = parse_problem(kEmployees);
  EXPECT_EQ(parse_problem(print_problem(run)), run);
}

TEST(Desugar, ConjunctiveCdc) {
  Cdc c{BoolExpr::eq(1, "a"),
        CFormula::conjunction({Utvpi::unary(1, 1, 0), Utvpi::unary(-1, 1, 0),
                               Utvpi::unary(-1, 2, -2)})};
  auto parts = split_conjunctive_cdc(c);
  ASSERT_EQ(parts.size(), 3u);
  for (const auto& p : parts) EXPECT_EQ(p.antecedent, c.antecedent);
  Cdc single{BoolExpr::top(), CFormula::single(Utvpi::make(-1, 1, 1, 2, 0))};
  EXPECT_EQ(split_conjunctive_cdc(single), std::vector<Cdc>{single});
}

TEST(Desugar, DisjunctiveView) {
  ViewSpec v{"V", BoolExpr::eq(1, "a"), CFormula::single(Utvpi::unary(-1, 1, -1)),
             ViewSpec::Join::kOr};
  auto views = split_disjunctive_view(v);
  ASSERT_EQ(views.size(), 2u);
  EXPECT_EQ(views[0].x_condition, BoolExpr::eq(1, "a"));
  EXPECT_FALSE(views[0].y_condition);
  EXPECT_TRUE(views[1].x_condition.is_top());
  v.join = ViewSpec::Join::kAnd;
  EXPECT_EQ(split_disjunctive_view(v).size(), 1u);
}

TEST(Desugar, DomainConstraint) {
  Schema s = Schema::make("R", 1, 1);
  auto [pos, neg] = desugar_domain_constraint(s, 1, {DomConstant("a"), DomConstant("b")},
                                              LanguageMode::kUtvpi);
  EXPECT_EQ(pos.consequent, CFormula::single(Utvpi::unary(1, 1, 0)));
  EXPECT_EQ(neg.consequent, CFormula::single(Utvpi::unary(-1, 1, -1)));
  std::vector<Cdc> cdcs{pos, neg};
  for (const char* c : {"a", "b", "z"}) {
    bool some_model = false;
    for (int y = -3; y <= 3; ++y) {
      some_model = some_model || satisfies_cdcs(cdcs, Tuple{{DomConstant(c)}, {y}});
    }
    EXPECT_EQ(some_model, std::string(c) != "z") << c;
  }
  try {
    desugar_domain_constraint(Schema::make("R", 1, 0), 1, {DomConstant("a")}, LanguageMode::kUtvpi);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNoInterpretedPosition);
  }
}

// Splitting a conjunctive consequent does not change which tuples are legal.
TEST(Desugar, SplitPreservesModels) {
  testgen::Gen g(5);
  for (int n = 0; n < 100; ++n) {
    Cdc c{testgen::random_x_condition(g, 2, 2, 2),
          CFormula::conjunction(testgen::random_utvpi_set(g, 2, 3, 3))};
    auto parts = split_conjunctive_cdc(c);
    for (const char* x : {"a", "b", "q"}) {
      for (int y1 = -4; y1 <= 4; ++y1) {
        for (int y2 = -4; y2 <= 4; ++y2) {
          Tuple t{{DomConstant(x), DomConstant("a")}, {y1, y2}};
          ASSERT_EQ(c.holds_on(t), satisfies_cdcs(parts, t));
        }
      }
    }
  }
}

}  // namespace
}  // namespace hdec
