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

#include <algorithm>

#include "hdec/encoding.hpp"
#include "hdec/parser.hpp"
#include "support/gen.hpp"

namespace hdec {
namespace {

const char* kEmployees = R"(
schema Emp(x:3, y:2)
cdc: x2 = a -> y1 + y2 <= 5
cdc: x3 = b -> y2 >= 2
cdc: top -> y1 - y2 >= 0
view V1: x2 != a & x3 = b
view V2: y2 < 4
view V3: x3 != b
)";

PosConst pc(int pos, const char* c) { return {pos, DomConstant(c)}; }

TEST(Encoding, EmployeeCdcs) {
  Problem p = parse_problem(kEmployees);
  Encoding e = encode_cdcs(p.cdcs);
  ASSERT_EQ(e.theory.formulas.size(), 3u);
  EXPECT_EQ(e.theory.formulas[0].to_string(), "p2^a -> v1");
  EXPECT_EQ(e.theory.formulas[1].to_string(), "p3^b -> v2");
  EXPECT_EQ(e.theory.formulas[2].to_string(), "top -> v3");
  EXPECT_EQ(e.idf.at(CVar{2, false}), CFormula::single(Utvpi::unary(-1, 2, -2)));
  EXPECT_EQ(e.theory.var_p, (std::set<PosConst>{pc(2, "a"), pc(3, "b")}));
  EXPECT_TRUE(aux_theory(e.theory).formulas.empty());
  EXPECT_TRUE(encode_cdcs({}).theory.formulas.empty());
}

TEST(Encoding, DistinctVariablesForEqualConsequents) {
  Cdc c{BoolExpr::top(), CFormula::single(Utvpi::unary(1, 1, 0))};
  Encoding e = encode_cdcs({c, c});
  EXPECT_EQ(e.theory.var_v.size(), 2u);
}

TEST(Encoding, EmployeeViews) {
  Problem p = parse_problem(kEmployees);
  Encoding e = encode_views(p.views);
  ASSERT_EQ(e.theory.formulas.size(), 3u);
  EXPECT_EQ(e.theory.formulas[0].to_string(), "!p2^a & p3^b -> bot");
  EXPECT_EQ(e.theory.formulas[1].to_string(), "top -> v'2");
  EXPECT_EQ(e.theory.formulas[2].to_string(), "!p3^b -> bot");
  EXPECT_EQ(e.idf.size(), 1u);
  PropTheory aux = aux_theory(merge(encode_cdcs(p.cdcs).theory, e.theory));
  ASSERT_EQ(aux.formulas.size(), 2u);
  EXPECT_EQ(aux.formulas[0], e.theory.formulas[0]);
  EXPECT_EQ(aux.formulas[1], e.theory.formulas[2]);
}

TEST(Encoding, UniqueValueAxioms) {
  PropTheory pi;
  pi.var_p = {pc(1, "a"), pc(1, "b"), pc(2, "a")};
  PropTheory aux = aux_theory(pi);
  ASSERT_EQ(aux.formulas.size(), 1u);
  EXPECT_EQ(aux.formulas[0].to_string(), "p1^a & p1^b -> bot");
  EXPECT_EQ(enumerate_valuations({pc(1, "a"), pc(1, "b")}, aux).size(), 3u);
  auto none = enumerate_valuations({}, PropTheory{});
  ASSERT_EQ(none.size(), 1u);
  EXPECT_TRUE(none[0].empty());
}

TEST(Encoding, EmployeeLosslessnessValuation) {
  Problem p = parse_problem(kEmployees);
  Encoding c = encode_cdcs(p.cdcs);
  Encoding v = encode_views(p.views);
  PropTheory pi = merge(c.theory, v.theory);
  auto vals = enumerate_valuations(pi.var_p, aux_theory(pi));
  ASSERT_EQ(vals.size(), 1u);
  Valuation tt{{pc(2, "a"), true}, {pc(3, "b"), true}};
  EXPECT_EQ(vals[0], tt);
  EXPECT_EQ(alpha_filter_views(v.theory, v.idf, tt),
            std::vector<CFormula>{CFormula::single(Utvpi::unary(-1, 2, -4))});
  EXPECT_EQ(alpha_filter_cdc(c.theory, c.idf, tt).size(), 3u);
  Valuation tf{{pc(2, "a"), true}, {pc(3, "b"), false}};
  EXPECT_EQ(alpha_filter_cdc(c.theory, c.idf, tf),
            (std::vector<CFormula>{CFormula::single(Utvpi::make(1, 1, 1, 2, 5)),
                                   CFormula::single(Utvpi::make(-1, 1, 1, 2, 0))}));
  EXPECT_TRUE(alpha_filter_cdc(PropTheory{}, {}, tt).empty());
  Valuation ff{{pc(2, "a"), false}, {pc(3, "b"), false}};
  EXPECT_TRUE(alpha_filter_views(PropTheory{{v.theory.formulas[0]}, {}, {}}, v.idf, ff).empty());
}

// The position-wise enumeration equals brute force over all 2^n assignments
// filtered by the aux theory.
TEST(Property, EnumerationMatchesExhaustiveSearch) {
  testgen::Gen g(7);
  for (int n = 0; n < 60; ++n) {
    std::vector<ViewDef> views;
    std::vector<Cdc> cdcs;
    for (int c = g.uniform(1, 4); c > 0; --c) {
      cdcs.push_back({testgen::random_x_condition(g, 3, 2, 3), CFormula::single(Utvpi::unary(1, 1, 0))});
    }
    for (int c = g.uniform(1, 3); c > 0; --c) {
      views.push_back({"V" + std::to_string(c), testgen::random_x_condition(g, 3, 2, 3),
                       std::nullopt});
    }
    PropTheory pi = merge(encode_cdcs(cdcs).theory, encode_views(views).theory);
    if (pi.var_p.size() > 12) continue;
    PropTheory aux = aux_theory(pi);
    std::vector<PosConst> vars(pi.var_p.begin(), pi.var_p.end());
    std::vector<Valuation> expect;
    for (std::uint32_t mask = 0; mask < (1u << vars.size()); ++mask) {
      Valuation a;
      for (std::size_t b = 0; b < vars.size(); ++b) a[vars[b]] = (mask >> b) & 1u;
      if (satisfies_theory(aux, a)) expect.push_back(a);
    }
    auto got = enumerate_valuations(pi.var_p, aux);
    for (const auto& a : got) EXPECT_TRUE(satisfies_theory(aux, a));
    std::sort(expect.begin(), expect.end());
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, expect);
  }
}

// A tuple consistent with alpha satisfies a CDC iff its y-part satisfies the
// filtering.
TEST(Property, TupleAgreesWithFiltering) {
  testgen::Gen g(8);
  for (int n = 0; n < 100; ++n) {
    std::vector<Cdc> cdcs;
    for (int c = g.uniform(1, 4); c > 0; --c) {
      cdcs.push_back({testgen::random_x_condition(g, 2, 2, 2),
                      testgen::random_consequent(g, 2, 3, LanguageMode::kUtvpi)});
    }
    Encoding e = encode_cdcs(cdcs);
    for (const auto& alpha : enumerate_valuations(e.theory.var_p, aux_theory(e.theory))) {
      Tuple t;
      for (int pos = 1; pos <= 2; ++pos) {
        t.x.push_back(fresh_constant(pos));
        for (const auto& [p, v] : alpha) {
          if (v && p.position == pos) t.x.back() = p.constant;
        }
      }
      auto filtered = alpha_filter_cdc(e.theory, e.idf, alpha);
      for (int y1 = -3; y1 <= 3; ++y1) {
        for (int y2 = -3; y2 <= 3; ++y2) {
          t.y = {y1, y2};
          bool direct = satisfies_cdcs(cdcs, t);
          bool via = std::all_of(filtered.begin(), filtered.end(), [&](const CFormula& f) {
            return f.evaluate(t.y_assignment());
          });
          ASSERT_EQ(direct, via);
        }
      }
    }
  }
}

}  // namespace
}  // namespace hdec
