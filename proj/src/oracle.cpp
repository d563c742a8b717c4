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

#include "hdec/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "hdec/error.hpp"

namespace hdec {
namespace {

// Values indexed by variable number; independent of the solver's data
// structures on purpose.
bool eval_atom(const Utvpi& u, const std::vector<std::int64_t>& val) {
  __int128 lhs = 0;
  if (u.a() != 0) lhs += static_cast<__int128>(u.a()) * val[u.i()];
  if (u.b() != 0) lhs += static_cast<__int128>(u.b()) * val[u.j()];
  return lhs <= u.d();
}

bool eval_tree(const Butvpi& f, const std::vector<std::int64_t>& val) {
  switch (f.kind()) {
    case Butvpi::Kind::kAtom:
      return eval_atom(f.utvpi(), val);
    case Butvpi::Kind::kNot:
      return !eval_tree(f.children().front(), val);
    case Butvpi::Kind::kAnd:
      for (const auto& c : f.children()) {
        if (!eval_tree(c, val)) return false;
      }
      return true;
    case Butvpi::Kind::kOr:
      for (const auto& c : f.children()) {
        if (eval_tree(c, val)) return true;
      }
      return false;
  }
  return false;
}

std::int64_t max_abs_bound(const CFormula& f) {
  std::vector<Utvpi> atoms;
  f.as_butvpi().collect_atoms(atoms);
  std::int64_t d = 0;
  for (const auto& u : atoms) {
    d = std::max<std::int64_t>(d, u.d() == INT64_MIN ? INT64_MAX : std::llabs(u.d()));
  }
  return d;
}

std::int64_t bound_from(std::size_t vars, std::int64_t max_d) {
  __int128 b = static_cast<__int128>(vars + 1) * (static_cast<__int128>(max_d) + 2);
  if (b > INT64_MAX / 4) throw Error(Errc::kResourceLimit, "small-model bound too large");
  return static_cast<std::int64_t>(b);
}

class BoxSearch {
 public:
  BoxSearch(std::vector<Butvpi> formulas, std::int64_t bound)
      : formulas_(std::move(formulas)), bound_(bound) {
    std::set<int> vars;
    for (const auto& f : formulas_) {
      auto v = f.variables();
      vars.insert(v.begin(), v.end());
    }
    vars_.assign(vars.begin(), vars.end());
    val_.assign(vars_.empty() ? 1 : vars_.back() + 1, 0);
    at_level_.resize(vars_.size() + 1);
    for (std::size_t n = 0; n < formulas_.size(); ++n) {
      auto v = formulas_[n].variables();
      std::size_t level = 0;
      if (!v.empty()) {
        level = std::lower_bound(vars_.begin(), vars_.end(), *v.rbegin()) - vars_.begin() + 1;
      }
      at_level_[level].push_back(n);
    }
  }

  std::optional<IntAssignment> run() {
    if (!check(0)) return std::nullopt;
    if (!descend(0)) return std::nullopt;
    IntAssignment out;
    for (int v : vars_) out[v] = val_[v];
    return out;
  }

 private:
  bool check(std::size_t level) const {
    for (std::size_t n : at_level_[level]) {
      if (!eval_tree(formulas_[n], val_)) return false;
    }
    return true;
  }

  bool descend(std::size_t depth) {
    if (depth == vars_.size()) return true;
    int v = vars_[depth];
    for (std::int64_t x = -bound_; x <= bound_; ++x) {
      val_[v] = x;
      if (check(depth + 1) && descend(depth + 1)) return true;
    }
    return false;
  }

  std::vector<Butvpi> formulas_;
  std::int64_t bound_;
  std::vector<int> vars_;
  std::vector<std::int64_t> val_;
  std::vector<std::vector<std::size_t>> at_level_;
};

std::vector<Tuple> x_tuples(int k, const std::vector<DomConstant>& pool) {
  std::vector<Tuple> out;
  std::vector<std::size_t> idx(k, 0);
  if (k > 0 && pool.empty()) return out;
  while (true) {
    Tuple t;
    for (int i = 0; i < k; ++i) t.x.push_back(pool[idx[i]]);
    out.push_back(std::move(t));
    int p = k - 1;
    while (p >= 0 && ++idx[p] == pool.size()) idx[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

// A tuple over the universe that satisfies `required` and is selected by no
// view, searched x-pattern by x-pattern.
std::optional<Tuple> single_tuple_search(const Schema& schema, const std::vector<ViewDef>& views,
                                         const std::vector<Cdc>& cdcs,
                                         const std::vector<DomConstant>& pool,
                                         std::int64_t bound) {
  std::map<std::vector<bool>, std::optional<IntAssignment>> memo;
  for (auto& t : x_tuples(schema.k, pool)) {
    t.y.assign(schema.m, 0);
    std::vector<bool> key;
    for (const auto& c : cdcs) key.push_back(eval_bool_expr(c.antecedent, t));
    bool selected_by_x = false;
    for (const auto& v : views) {
      bool on = eval_bool_expr(v.x_condition, t);
      if (on && !v.y_condition) selected_by_x = true;
      key.push_back(on);
    }
    if (selected_by_x) continue;
    auto it = memo.find(key);
    if (it == memo.end()) {
      std::vector<Butvpi> required;
      for (std::size_t n = 0; n < cdcs.size(); ++n) {
        if (key[n]) required.push_back(cdcs[n].consequent.as_butvpi());
      }
      for (std::size_t n = 0; n < views.size(); ++n) {
        if (key[cdcs.size() + n] && views[n].y_condition) {
          required.push_back(Butvpi::negation(views[n].y_condition->as_butvpi()));
        }
      }
      it = memo.emplace(key, BoxSearch(std::move(required), bound).run()).first;
    }
    if (!it->second) continue;
    for (int j = 1; j <= schema.m; ++j) t.y[j - 1] = value_of(*it->second, j);
    return t;
  }
  return std::nullopt;
}

}  // namespace

std::int64_t small_model_bound(std::span<const CFormula> formulas) {
  std::set<int> vars;
  std::int64_t d = 0;
  for (const auto& f : formulas) {
    auto v = f.variables();
    vars.insert(v.begin(), v.end());
    d = std::max(d, max_abs_bound(f));
  }
  return bound_from(vars.size(), d);
}

std::int64_t small_model_bound(const std::vector<Cdc>& cdcs, const std::vector<ViewDef>& views) {
  std::vector<CFormula> all;
  for (const auto& c : cdcs) all.push_back(c.consequent);
  for (const auto& v : views) {
    if (v.y_condition) all.push_back(*v.y_condition);
  }
  return small_model_bound(all);
}

SatResult brute_force_cformula_sat(std::span<const CFormula> formulas, std::int64_t bound) {
  std::vector<Butvpi> trees;
  for (const auto& f : formulas) trees.push_back(f.as_butvpi());
  auto model = BoxSearch(std::move(trees), bound).run();
  if (!model) {
    std::vector<std::size_t> core(formulas.size());
    for (std::size_t k = 0; k < core.size(); ++k) core[k] = k;
    return SatResult::unsatisfiable(std::move(core));
  }
  return SatResult::satisfiable(std::move(*model));
}

std::vector<DomConstant> default_const_pool(const Schema& schema, const std::vector<Cdc>& cdcs,
                                            const std::vector<ViewDef>& views) {
  std::set<DomConstant> pool;
  std::vector<EqAtom> atoms;
  for (const auto& c : cdcs) c.antecedent.collect_atoms(atoms);
  for (const auto& v : views) v.x_condition.collect_atoms(atoms);
  for (const auto& a : atoms) pool.insert(a.constant);
  for (int i = 1; i <= schema.k; ++i) pool.insert(fresh_constant(i));
  return {pool.begin(), pool.end()};
}

std::vector<DomConstant> default_const_pool(const Schema& schema, const Problem& p) {
  return default_const_pool(schema, p.cdcs, p.views);
}

ConsistencyVerdict brute_force_consistency(const Schema& schema, const std::vector<Cdc>& cdcs,
                                           const std::vector<DomConstant>& pool,
                                           std::int64_t bound) {
  ConsistencyVerdict v;
  v.witness = single_tuple_search(schema, {}, cdcs, pool, bound);
  v.consistent = v.witness.has_value();
  return v;
}

LosslessnessVerdict brute_force_losslessness(const Schema& schema,
                                             const std::vector<ViewDef>& views,
                                             const std::vector<Cdc>& cdcs,
                                             const std::vector<DomConstant>& pool,
                                             std::int64_t bound) {
  LosslessnessVerdict v;
  v.witness = single_tuple_search(schema, views, cdcs, pool, bound);
  v.lossless = !v.witness.has_value();
  return v;
}

GlobalConsistencyVerdict brute_force_global_consistency(const Schema& schema,
                                                        const std::vector<Cdc>& cdcs,
                                                        const std::vector<DomConstant>& pool,
                                                        std::int64_t bound) {
  GlobalConsistencyVerdict v;
  v.globally_consistent = true;
  std::map<std::vector<bool>, bool> memo;
  for (const auto& t : x_tuples(schema.k, pool)) {
    Tuple probe = t;
    probe.y.assign(schema.m, 0);
    std::vector<bool> key;
    std::vector<Butvpi> required;
    for (const auto& c : cdcs) {
      key.push_back(eval_bool_expr(c.antecedent, probe));
      if (key.back()) required.push_back(c.consequent.as_butvpi());
    }
    auto it = memo.find(key);
    if (it == memo.end()) {
      it = memo.emplace(key, BoxSearch(std::move(required), bound).run().has_value()).first;
    }
    if (it->second) continue;
    v.globally_consistent = false;
    Valuation alpha;
    for (const auto& c : cdcs) {
      std::vector<EqAtom> atoms;
      c.antecedent.collect_atoms(atoms);
      for (const auto& a : atoms) {
        alpha[PosConst{a.position, a.constant}] = t.x[a.position - 1] == a.constant;
      }
    }
    v.failing = std::move(alpha);
    return v;
  }
  return v;
}

void brute_force_instance_models(const Problem& p, int max_tuples,
                                 const std::vector<DomConstant>& pool, std::int64_t bound,
                                 const std::function<bool(const Instance&)>& visit) {
  const Schema& s = p.schema;
  std::vector<Tuple> universe;
  for (auto& t : x_tuples(s.k, pool)) {
    std::vector<std::int64_t> y(s.m, -bound);
    while (true) {
      t.y = y;
      if (satisfies_cdcs(p.cdcs, t)) universe.push_back(t);
      int j = s.m - 1;
      while (j >= 0 && ++y[j] > bound) y[j--] = -bound;
      if (j < 0) break;
    }
  }
  std::vector<Uind> uinds;
  for (const auto& u : p.uinds) {
    if (!u.is_trivial()) uinds.push_back(u);
  }

  std::vector<std::size_t> chosen;
  Instance inst(s.relation_name);
  auto fds_ok_with = [&](const Tuple& t) {
    for (const auto& f : p.fds) {
      Instance pair(s.relation_name);
      for (std::size_t c : chosen) pair.insert(universe[c]);
      pair.insert(t);
      if (!satisfies_fd(pair, f)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    bool uinds_ok = std::all_of(uinds.begin(), uinds.end(),
                                [&](const Uind& u) { return satisfies_uind(inst, u, s); });
    if (uinds_ok && !visit(inst)) return false;
    if (static_cast<int>(chosen.size()) >= max_tuples) return true;
    for (std::size_t n = from; n < universe.size(); ++n) {
      if (!fds_ok_with(universe[n])) continue;
      chosen.push_back(n);
      Instance saved = inst;
      inst.insert(universe[n]);
      bool go_on = rec(n + 1);
      inst = std::move(saved);
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  rec(0);
}

Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  bool header = false;
  std::vector<int> clause;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    std::istringstream in(line);
    std::string first;
    if (!(in >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (header || !(in >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0 ||
          vars > 1000000) {
        throw ParseError(line_no, 1, "malformed DIMACS header");
      }
      cnf.num_vars = static_cast<int>(vars);
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, 1, "clause before the 'p cnf' header");
    std::istringstream lits(line);
    std::string tok;
    while (lits >> tok) {
      char* endp = nullptr;
      long long lit = std::strtoll(tok.c_str(), &endp, 10);
      if (*endp != '\0') throw ParseError(line_no, 1, "bad literal '" + tok + "'");
      if (lit == 0) {
        cnf.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      if (std::llabs(lit) > cnf.num_vars) {
        throw ParseError(line_no, 1, "literal " + tok + " exceeds the declared variable count");
      }
      clause.push_back(static_cast<int>(lit));
    }
  }
  if (!header) throw ParseError(1, 1, "missing 'p cnf' header");
  if (!clause.empty()) cnf.clauses.push_back(clause);
  return cnf;
}

std::string print_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& c : cnf.clauses) {
    for (int l : c) out << l << " ";
    out << "0\n";
  }
  return out.str();
}

bool truth_table_sat(const Cnf& cnf) {
  if (cnf.num_vars > 30) throw Error(Errc::kResourceLimit, "truth table over more than 30 variables");
  const std::uint64_t rows = std::uint64_t{1} << cnf.num_vars;
  for (std::uint64_t row = 0; row < rows; ++row) {
    bool all = std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const std::vector<int>& c) {
      return std::any_of(c.begin(), c.end(), [&](int lit) {
        bool v = (row >> (std::abs(lit) - 1)) & 1;
        return lit > 0 ? v : !v;
      });
    });
    if (all) return true;
  }
  return false;
}

namespace {

std::vector<Cdc> clause_cdcs(const Cnf& cnf) {
  std::vector<Cdc> out;
  for (const auto& c : cnf.clauses) {
    std::vector<BoolExpr> parts;
    for (int lit : c) {
      parts.push_back(lit > 0 ? BoolExpr::neq(lit, kSatConstant) : BoolExpr::eq(-lit, kSatConstant));
    }
    out.push_back(Cdc{BoolExpr::conjunction(std::move(parts)),
                      CFormula::single(Utvpi::unary(-1, 1, -1))});
  }
  return out;
}

}  // namespace

Problem sat_to_consistency(const Cnf& cnf) {
  Problem p;
  p.schema = Schema::make("R", cnf.num_vars, 1);
  p.cdcs = clause_cdcs(cnf);
  p.cdcs.push_back(Cdc{BoolExpr::top(), CFormula::single(Utvpi::unary(1, 1, 0))});
  return p;
}

Problem unsat_to_losslessness(const Cnf& cnf) {
  Problem p;
  p.schema = Schema::make("R", cnf.num_vars, 1);
  p.cdcs = clause_cdcs(cnf);
  p.views.push_back(ViewDef{"V", BoolExpr::top(), CFormula::single(Utvpi::unary(-1, 1, -1))});
  return p;
}

}  // namespace hdec
