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

#include "hdec/decision.hpp"
#include "hdec/error.hpp"
#include "hdec/oracle.hpp"
#include "hdec/parser.hpp"
#include "support/gen.hpp"

namespace hdec {
namespace {

TEST(Oracle, CformulaSat) {
  std::vector<CFormula> sat{CFormula::single(Utvpi::make(1, 1, 1, 2, 5)),
                            CFormula::single(Utvpi::make(-1, 1, 1, 2, 0))};
  SatResult r = brute_force_cformula_sat(sat, 10);
  ASSERT_TRUE(r.sat);
  EXPECT_TRUE(check_model(sat, r.model));
  std::vector<CFormula> unsat{CFormula::single(Utvpi::unary(1, 1, 0)),
                              CFormula::single(Utvpi::unary(-1, 1, -1))};
  EXPECT_FALSE(brute_force_cformula_sat(unsat, 2).sat);
}

TEST(Oracle, SmallModelBound) {
  std::vector<CFormula> fs{CFormula::single(Utvpi::make(1, 1, 1, 2, 5)),
                           CFormula::single(Utvpi::unary(-1, 3, -2))};
  // (variables + 1) * (max |d| + 2)
  EXPECT_EQ(small_model_bound(fs), 4 * 7);
}

TEST(Oracle, ConstPoolHasOneFreshConstantPerPosition) {
  Problem p = parse_problem("schema R(x:2, y:1)\ncdc: x1 = a -> y1 > 0\nview V: x2 = b\n");
  auto pool = default_const_pool(p.schema, p);
  EXPECT_EQ(pool.size(), 4u);
  EXPECT_EQ(pool, default_const_pool(p.schema, p.cdcs, p.views));
}

TEST(Oracle, InstanceModelsIncludeEmptyAndRespectConstraints) {
  Problem p = parse_problem("schema R(x:0, y:2)\ncdc: top -> y1 >= 0\nuind: R[y1] <= R[y2]\nfd: {1} -> {2}\n");
  int count = 0;
  bool saw_empty = false;
  brute_force_instance_models(p, 2, {}, 1, [&](const Instance& inst) {
    ++count;
    saw_empty = saw_empty || inst.size() == 0;
    EXPECT_TRUE(satisfies_all(inst, p));
    return true;
  });
  EXPECT_TRUE(saw_empty);
  EXPECT_GT(count, 1);
}

TEST(Dimacs, ParseAndPrint) {
  Cnf c = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n3 0\n");
  EXPECT_EQ(c.num_vars, 3);
  EXPECT_EQ(c.clauses, (std::vector<std::vector<int>>{{1, -2}, {3}}));
  EXPECT_EQ(parse_dimacs(print_dimacs(c)).clauses, c.clauses);
  EXPECT_THROW(parse_dimacs("1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
}

TEST(Reduction, Shapes) {
  Problem p = sat_to_consistency(Cnf{2, {{1, -2}}});
  EXPECT_EQ(p.schema.k, 2);
  EXPECT_EQ(p.schema.m, 1);
  ASSERT_EQ(p.cdcs.size(), 2u);
  EXPECT_EQ(p.cdcs[0].antecedent,
            BoolExpr::conjunction({BoolExpr::neq(1, kSatConstant), BoolExpr::eq(2, kSatConstant)}));
  EXPECT_EQ(p.cdcs[1], (Cdc{BoolExpr::top(), CFormula::single(Utvpi::unary(1, 1, 0))}));
  EXPECT_TRUE(check_consistency(p.schema, p.cdcs).consistent);

  Problem e = sat_to_consistency(Cnf{0, {}});
  EXPECT_EQ(e.cdcs.size(), 1u);
  EXPECT_TRUE(check_consistency(e.schema, e.cdcs).consistent);

  Problem l = unsat_to_losslessness(Cnf{1, {{1}}});
  ASSERT_EQ(l.views.size(), 1u);
  EXPECT_FALSE(check_losslessness(l.schema, l.views, l.cdcs).lossless);
  Problem le = unsat_to_losslessness(Cnf{0, {}});
  EXPECT_FALSE(check_losslessness(le.schema, le.views, le.cdcs).lossless);
}

TEST(Property, ReductionRoundTrip) {
  testgen::Gen g(23);
  for (int n = 0; n < 150; ++n) {
    Cnf cnf = testgen::random_3cnf(g, 8, 12);
    bool sat = truth_table_sat(cnf);
    Problem c = sat_to_consistency(cnf);
    EXPECT_EQ(check_consistency(c.schema, c.cdcs).consistent, sat);
    Problem l = unsat_to_losslessness(cnf);
    EXPECT_EQ(check_losslessness(l.schema, l.views, l.cdcs).lossless, !sat);
    // The generated problems survive a print/parse round trip.
    EXPECT_EQ(parse_problem(print_problem(c)), c);
  }
}

}  // namespace
}  // namespace hdec
