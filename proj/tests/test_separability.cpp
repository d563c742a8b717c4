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

#include "hdec/error.hpp"
#include "hdec/oracle.hpp"
#include "hdec/parser.hpp"
#include "hdec/separability.hpp"
#include "support/gen.hpp"

namespace hdec {
namespace {

Cdc top_cdc(Utvpi u) { return {BoolExpr::top(), CFormula::single(u)}; }

TEST(DpControllable, Examples) {
  Schema s = Schema::make("R", 0, 2);
  EXPECT_TRUE(check_dp_controllable(s, {top_cdc(Utvpi::unary(-1, 2, -4))}, {{1, 2}}).controllable);
  Cdc cond{BoolExpr::eq(1, "a"), CFormula::single(Utvpi::unary(-1, 2, -3))};
  Schema s2 = Schema::make("R", 1, 2);
  DpCheck bad = check_dp_controllable(s2, {cond}, {{2, 3}});
  EXPECT_FALSE(bad.controllable);
  EXPECT_EQ(bad.cdc, 0u);
  EXPECT_TRUE(check_dp_controllable(s2, {cond}, {}).controllable);
  Cdc binary = top_cdc(Utvpi::make(1, 1, 1, 2, 3));
  EXPECT_FALSE(check_dp_controllable(s, {binary}, {{1, 2}}).controllable);
}

TEST(DpClosure, Examples) {
  Schema s = Schema::make("R", 0, 2);
  auto closed = dp_closure(s, {top_cdc(Utvpi::unary(-1, 2, -4))}, {{1, 2}});
  EXPECT_EQ(closed, (std::vector<Cdc>{top_cdc(Utvpi::unary(-1, 2, -4)),
                                      top_cdc(Utvpi::unary(-1, 1, -4))}));
  EXPECT_EQ(dp_closure(s, {top_cdc(Utvpi::unary(1, 1, 0))}, {}).size(), 1u);

  Schema s3 = Schema::make("R", 0, 3);
  auto chain = dp_closure(s3, {top_cdc(Utvpi::unary(1, 1, 5))}, {{2, 1}, {3, 2}});
  EXPECT_EQ(chain, (std::vector<Cdc>{top_cdc(Utvpi::unary(1, 1, 5)), top_cdc(Utvpi::unary(1, 2, 5)),
                                     top_cdc(Utvpi::unary(1, 3, 5))}));
  Cdc cond{BoolExpr::eq(1, "a"), CFormula::single(Utvpi::unary(-1, 2, -3))};
  try {
    dp_closure(Schema::make("R", 1, 2), {cond}, {{2, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotDpControllable);
  }
}

TEST(Disjoint, Examples) {
  Problem d1 = parse_problem(
      "schema R(x:2, y:1)\ncdc: x1 = a -> y1 < 0\ncdc: x1 = a -> y1 > 0\n");
  EXPECT_TRUE(check_disjoint(d1.cdcs, {1, 2}).disjoint);
  Problem d2 = parse_problem(
      "schema R(x:2, y:1)\ncdc: x1 = a -> y1 > 0\ncdc: x2 = a -> y1 > 1\n");
  DisjointCheck c = check_disjoint(d2.cdcs, {1, 2});
  EXPECT_FALSE(c.disjoint);
  EXPECT_EQ(c.first, 1u);
  EXPECT_EQ(c.second, 0u);
  Problem one = parse_problem("schema R(x:2, y:1)\ncdc: x2 = a -> y1 > 0\n");
  EXPECT_TRUE(check_disjoint(one.cdcs, {1, 2}).disjoint);
  Problem dead = parse_problem("schema R(x:2, y:1)\nmode butvpi\ncdc: x2 = a -> y1 > 0 & y1 < 0\n");
  EXPECT_FALSE(check_disjoint(dead.cdcs, {1, 2}).disjoint);
}

TEST(Pipeline, DecisionTable) {
  Problem a = parse_problem("schema R(x:1, y:1)\ncdc: x1 = a -> y1 > 0\nfd: {1} -> {2}\nview V: top\n");
  SeparabilityOutcome sa = separability_pipeline(a);
  EXPECT_TRUE(sa.supported);
  EXPECT_EQ(sa.tag, TheoremTag::kFdOnly);
  EXPECT_EQ(sa.cdcs, a.cdcs);

  Problem b = parse_problem("schema R(x:0, y:2)\ncdc: top -> y2 > 3\nuind: R[y1] <= R[y2]\nview V: y1 > 3\n");
  SeparabilityOutcome sb = separability_pipeline(b);
  ASSERT_TRUE(sb.supported);
  EXPECT_EQ(sb.tag, TheoremTag::kYUindDp);
  EXPECT_EQ(sb.cdcs.size(), 2u);

  Problem bf = parse_problem("schema R(x:1, y:2)\ncdc: top -> y2 > 3\nuind: R[y1] <= R[y2]\nfd: {2} -> {1}\nview V: y1 > 3\n");
  SeparabilityOutcome sbf = separability_pipeline(bf);
  EXPECT_TRUE(sbf.supported);
  EXPECT_EQ(sbf.tag, TheoremTag::kXfdYxfdYuind);
  bf.fds = {{{1}, {2}}};
  EXPECT_FALSE(separability_pipeline(bf).supported);

  Problem ns = parse_problem(R"(schema R(x:2, y:1)
cdc: x2 = a -> y1 <= 0 & y1 > 0
uind: R[x1] <= R[x2]
view V: top
)");
  SeparabilityOutcome sn = separability_pipeline(ns);
  EXPECT_FALSE(sn.supported);
  EXPECT_EQ(sn.reason, "X-UIND present; CDCs neither globally consistent nor disjoint");
  ASSERT_TRUE(sn.gc && sn.gc->failing);
  EXPECT_EQ(sn.globally_consistent, false);
  EXPECT_EQ(sn.disjoint, false);

  Problem gc = parse_problem(R"(schema R(x:2, y:1)
cdc: x1 = a -> y1 > 0
cdc: x2 = a -> y1 > 1
uind: R[x1] <= R[x2]
view V: top
)");
  EXPECT_EQ(separability_pipeline(gc).tag, TheoremTag::kXUindGc);

  Problem both = parse_problem(R"(schema R(x:2, y:2)
cdc: x1 = a -> y1 > 0
cdc: top -> y2 > 0
uind: R[x1] <= R[x2]
view V: top
)");
  SeparabilityOutcome sd = separability_pipeline(both);
  EXPECT_EQ(sd.tag, TheoremTag::kXUindDisj);
  EXPECT_EQ(sd.globally_consistent, true);

  Problem u = parse_problem(R"(schema R(x:2, y:2)
cdc: top -> y2 > 0
uind: R[x1] <= R[x2]
uind: R[y1] <= R[y2]
view V: top
)");
  SeparabilityOutcome su = separability_pipeline(u);
  EXPECT_EQ(su.tag, TheoremTag::kUindDisj);
  EXPECT_EQ(su.cdcs.size(), 2u);

  Problem yfd = parse_problem(R"(schema R(x:2, y:2)
uind: R[x1] <= R[x2]
fd: {3} -> {4}
view V: top
)");
  EXPECT_EQ(separability_pipeline(yfd).reason, "Y-FD with X-UIND");
  Problem xfd = parse_problem(R"(schema R(x:2, y:2)
uind: R[x1] <= R[x2]
fd: {1} -> {2}
view V: top
)");
  EXPECT_FALSE(separability_pipeline(xfd).supported);
  Problem yy = parse_problem(R"(schema R(x:2, y:2)
uind: R[y1] <= R[y2]
fd: {3} -> {4}
view V: top
)");
  EXPECT_FALSE(separability_pipeline(yy).supported);
  Problem mixed = parse_problem(R"(schema R(x:2, y:2)
fd: {1, 3} -> {4}
view V: top
)");
  EXPECT_FALSE(separability_pipeline(mixed).supported);
  Problem self = parse_problem("schema R(x:1, y:1)\nuind: R[x1] <= R[x1]\nview V: top\n");
  SeparabilityOutcome ss = separability_pipeline(self);
  EXPECT_TRUE(ss.supported);
  EXPECT_EQ(ss.tag, TheoremTag::kFdOnly);
  EXPECT_FALSE(ss.notes.empty());
}

TEST(Extend, Examples) {
  Schema s = Schema::make("R", 0, 2);
  Instance inst("R");
  inst.insert(Tuple{{}, {1, 0}});
  Instance out = extend_to_uind_model(s, inst, {}, {{1, 2}});
  Instance want("R");
  want.insert(Tuple{{}, {1, 0}});
  want.insert(Tuple{{}, {1, 1}});
  EXPECT_EQ(out, want);
  EXPECT_EQ(extend_to_uind_model(s, want, {}, {{1, 2}}), want);
}

TEST(Extend, XUindRepairsInterpretedValues) {
  Problem p = parse_problem(R"(schema R(x:2, y:1)
cdc: x1 = a -> y1 > 0
cdc: x2 = a -> y1 > 1
uind: R[x1] <= R[x2]
view V: top
)");
  Instance inst("R");
  inst.insert(Tuple{{DomConstant("a"), DomConstant("b")}, {1}});
  Instance out = extend_to_uind_model(p.schema, inst, p.cdcs, p.uinds);
  EXPECT_TRUE(out.contains(*inst.tuples().begin()));
  EXPECT_TRUE(satisfies_all(out, p));
}

// Every CDC the closure adds holds on every bounded model of the input.
TEST(Property, DpClosureIsSound) {
  testgen::Gen g(17);
  for (int n = 0; n < 40; ++n) {
    Problem p;
    p.schema = Schema::make("R", 0, 2);
    p.uinds = {g.coin() ? Uind{1, 2} : Uind{2, 1}};
    for (int c = g.uniform(1, 2); c > 0; --c) {
      p.cdcs.push_back(top_cdc(Utvpi::unary(testgen::nonzero_coef(g), g.uniform(1, 2), g.uniform(-2, 2))));
    }
    auto closed = dp_closure(p.schema, p.cdcs, p.uinds);
    std::vector<Cdc> derived;
    for (const auto& c : closed) {
      if (std::find(p.cdcs.begin(), p.cdcs.end(), c) == p.cdcs.end()) derived.push_back(c);
    }
    brute_force_instance_models(p, 2, {}, 3, [&](const Instance& inst) {
      for (const auto& t : inst.tuples()) EXPECT_TRUE(satisfies_cdcs(derived, t));
      return true;
    });
  }
}

// extend_to_uind_model always yields a superset satisfying every constraint.
TEST(Property, ExtensionSatisfiesEverything) {
  testgen::Gen g(19);
  int tried = 0;
  for (int n = 0; n < 200 && tried < 60; ++n) {
    Problem p;
    p.schema = Schema::make("R", 2, 2);
    p.uinds = {{1, 2}};
    if (g.coin()) p.uinds.push_back({2, 1});
    if (g.coin()) p.uinds.push_back({3, 4});
    for (int c = g.uniform(0, 3); c > 0; --c) {
      bool y_free = p.uinds.back().lhs < 3;
      p.cdcs.push_back({y_free ? testgen::random_x_condition(g, 2, 1, 2) : BoolExpr::top(),
                        y_free ? testgen::random_consequent(g, 2, 3, LanguageMode::kUtvpi)
                               : CFormula::single(Utvpi::unary(testgen::nonzero_coef(g),
                                                               g.uniform(1, 2), g.uniform(-3, 3)))});
    }
    SeparabilityOutcome s = separability_pipeline(p);
    if (!s.supported) continue;
    ConsistencyVerdict c = check_consistency(p.schema, s.cdcs);
    if (!c.consistent) continue;
    ++tried;
    Instance inst("R");
    inst.insert(*c.witness);
    std::vector<Uind> all = s.xuinds;
    all.insert(all.end(), s.yuinds.begin(), s.yuinds.end());
    Instance out = extend_to_uind_model(p.schema, inst, s.cdcs, all);
    EXPECT_TRUE(out.contains(*c.witness));
    EXPECT_TRUE(satisfies_all(out, p)) << print_problem(p);
  }
  EXPECT_GT(tried, 10);
}

}  // namespace
}  // namespace hdec
