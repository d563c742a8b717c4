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

// Seeded random generators shared by the property tests and the acceptance
// binary. Everything is driven by one mt19937_64 so runs are reproducible.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hdec/model.hpp"
#include "hdec/oracle.hpp"

namespace hdec::testgen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline int nonzero_coef(Gen& g) { return g.coin() ? 1 : -1; }

// a*y_i + b*y_j <= d over variables 1..vars; unary when vars == 1 or by chance.
inline Utvpi random_utvpi(Gen& g, int vars, int dmax) {
  int i = g.uniform(1, vars);
  int d = g.uniform(-dmax, dmax);
  if (vars == 1 || g.coin(0.35)) return Utvpi::unary(nonzero_coef(g), i, d);
  int j = g.uniform(1, vars - 1);
  if (j >= i) ++j;
  return Utvpi::make(nonzero_coef(g), i, nonzero_coef(g), j, d);
}

inline std::vector<Utvpi> random_utvpi_set(Gen& g, int vars, int max_atoms, int dmax) {
  std::vector<Utvpi> out;
  int n = g.uniform(1, max_atoms);
  for (int k = 0; k < n; ++k) out.push_back(random_utvpi(g, vars, dmax));
  return out;
}

// A Boolean tree of depth at most `depth` (an atom has depth 0).
inline Butvpi random_butvpi(Gen& g, int vars, int dmax, int depth) {
  if (depth == 0 || g.coin(0.3)) return Butvpi::atom(random_utvpi(g, vars, dmax));
  switch (g.uniform(0, 2)) {
    case 0:
      return Butvpi::negation(random_butvpi(g, vars, dmax, depth - 1));
    case 1: {
      std::vector<Butvpi> kids;
      for (int n = g.uniform(2, 3); n > 0; --n) kids.push_back(random_butvpi(g, vars, dmax, depth - 1));
      return Butvpi::conjunction(std::move(kids));
    }
    default: {
      std::vector<Butvpi> kids;
      for (int n = g.uniform(2, 3); n > 0; --n) kids.push_back(random_butvpi(g, vars, dmax, depth - 1));
      return Butvpi::disjunction(std::move(kids));
    }
  }
}

inline const std::vector<std::string>& constant_names() {
  static const std::vector<std::string> names{"a", "b", "c"};
  return names;
}

// Conjunction of up to `max_atoms` (in)equalities x_p = c; top when empty.
inline BoolExpr random_x_condition(Gen& g, int k, int max_atoms, int constants) {
  if (k == 0) return BoolExpr::top();
  std::vector<BoolExpr> atoms;
  for (int n = g.uniform(0, max_atoms); n > 0; --n) {
    int pos = g.uniform(1, k);
    const std::string& c = constant_names()[g.uniform(0, constants - 1)];
    atoms.push_back(g.coin(0.7) ? BoolExpr::eq(pos, c) : BoolExpr::neq(pos, c));
  }
  if (atoms.empty()) return BoolExpr::top();
  return BoolExpr::conjunction(std::move(atoms));
}

// Consequents range over y1..ym.
inline CFormula random_consequent(Gen& g, int m, int dmax, LanguageMode mode) {
  if (mode == LanguageMode::kButvpi && g.coin(0.6)) {
    return CFormula::boolean(random_butvpi(g, m, dmax, 2));
  }
  std::vector<Utvpi> atoms;
  for (int n = g.uniform(1, 2); n > 0; --n) atoms.push_back(random_utvpi(g, m, dmax));
  CFormula f = CFormula::conjunction(std::move(atoms));
  return mode == LanguageMode::kButvpi ? CFormula::boolean(f.as_butvpi()) : f;
}

inline CFormula random_view_condition(Gen& g, int m, int dmax, LanguageMode mode) {
  if (mode == LanguageMode::kButvpi) return random_consequent(g, m, dmax, mode);
  // Negation of a UTVPI-mode view condition has to stay a single atom.
  return CFormula::single(random_utvpi(g, m, dmax));
}

struct ProblemBounds {
  int max_k = 3;
  int max_m = 3;
  int constants = 3;  // per position
  int dmax = 5;
  int max_cdcs = 6;
  int max_views = 4;
};

inline Problem random_cdc_problem(Gen& g, const ProblemBounds& b, LanguageMode mode) {
  Problem p;
  int k = g.uniform(0, b.max_k);
  int m = g.uniform(1, b.max_m);
  p.schema = Schema::make("R", k, m);
  p.mode = mode;
  for (int n = g.uniform(0, b.max_cdcs); n > 0; --n) {
    p.cdcs.push_back({random_x_condition(g, k, 2, b.constants),
                      random_consequent(g, m, b.dmax, mode)});
  }
  int views = g.uniform(1, b.max_views);
  for (int n = 0; n < views; ++n) {
    ViewDef v;
    v.name = "V" + std::to_string(n + 1);
    v.x_condition = random_x_condition(g, k, 2, b.constants);
    if (g.coin(0.7)) v.y_condition = random_view_condition(g, m, b.dmax, mode);
    p.views.push_back(std::move(v));
  }
  return p;
}

inline Cnf random_3cnf(Gen& g, int max_vars, int max_clauses) {
  Cnf cnf;
  cnf.num_vars = g.uniform(1, max_vars);
  for (int n = g.uniform(1, max_clauses); n > 0; --n) {
    std::vector<int> clause;
    for (int l = g.uniform(1, 3); l > 0; --l) {
      int v = g.uniform(1, cnf.num_vars);
      clause.push_back(g.coin() ? v : -v);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

}  // namespace hdec::testgen
