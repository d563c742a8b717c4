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

#include "hdec/separability.hpp"

#include <algorithm>
#include <set>

#include "hdec/error.hpp"

namespace hdec {

std::string to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::kFdOnly: return "FD-only";
    case TheoremTag::kYUindDp: return "Y-UIND-dp";
    case TheoremTag::kXUindGc: return "X-UIND-gc";
    case TheoremTag::kXUindDisj: return "X-UIND-disj";
    case TheoremTag::kUindGc: return "UIND-gc";
    case TheoremTag::kUindDisj: return "UIND-disj";
    case TheoremTag::kXfdYxfdYuind: return "XFD-YXFD-YUIND";
  }
  return "?";
}

DpCheck check_dp_controllable(const Schema& schema, const std::vector<Cdc>& cdcs,
                              const std::vector<Uind>& yuinds) {
  for (const auto& u : yuinds) {
    if (u.is_trivial()) continue;
    std::set<int> watched = {u.lhs - schema.k, u.rhs - schema.k};
    for (std::size_t n = 0; n < cdcs.size(); ++n) {
      std::set<int> vars = cdcs[n].consequent.variables();
      bool hit = std::any_of(vars.begin(), vars.end(), [&](int v) { return watched.count(v); });
      if (!hit) continue;
      if (!cdcs[n].antecedent.is_top() || vars.size() != 1) {
        DpCheck out;
        out.controllable = false;
        out.cdc = n;
        out.uind = u;
        out.explanation = "CDC '" + cdcs[n].to_string() + "' is affected by " +
                          u.to_string(schema) + " but is not of the form top -> delta(y)";
        return out;
      }
    }
  }
  return {};
}

std::vector<Cdc> dp_closure(const Schema& schema, const std::vector<Cdc>& cdcs,
                            const std::vector<Uind>& yuinds) {
  DpCheck dp = check_dp_controllable(schema, cdcs, yuinds);
  if (!dp.controllable) throw Error(Errc::kNotDpControllable, dp.explanation);

  std::vector<Cdc> out;
  auto add = [&](Cdc c) {
    if (std::find(out.begin(), out.end(), c) != out.end()) return false;
    out.push_back(std::move(c));
    return true;
  };
  for (const auto& c : cdcs) add(c);
  // Each derived CDC is unconditional over one variable, so at most
  // (#unconditional CDCs) * m additions happen.
  for (std::size_t n = 0; n < out.size(); ++n) {
    if (!out[n].antecedent.is_top()) continue;
    std::set<int> vars = out[n].consequent.variables();
    if (vars.size() != 1) continue;
    int yi = *vars.begin();
    for (const auto& u : yuinds) {
      if (u.is_trivial() || u.rhs - schema.k != yi) continue;
      int yj = u.lhs - schema.k;
      add(Cdc{BoolExpr::top(), out[n].consequent.rename(yi, yj)});
    }
  }
  return out;
}

DisjointCheck check_disjoint(const std::vector<Cdc>& cdcs, const Uind& xuind,
                             const SolverOptions& opts) {
  const int j = xuind.rhs;
  for (std::size_t a = 0; a < cdcs.size(); ++a) {
    if (!cdcs[a].antecedent.positions().count(j)) continue;
    std::vector<CFormula> single = {cdcs[a].consequent};
    if (!solve(single, opts).sat) {
      DisjointCheck out;
      out.disjoint = false;
      out.first = a;
      out.explanation = "CDC '" + cdcs[a].to_string() + "' mentions x" + std::to_string(j) +
                        " and has an unsatisfiable consequent";
      return out;
    }
    std::set<int> va = cdcs[a].consequent.variables();
    for (std::size_t b = 0; b < cdcs.size(); ++b) {
      if (b == a || cdcs[b] == cdcs[a]) continue;
      std::set<int> vb = cdcs[b].consequent.variables();
      bool shared = std::any_of(va.begin(), va.end(), [&](int v) { return vb.count(v) > 0; });
      if (shared) {
        DisjointCheck out;
        out.disjoint = false;
        out.first = a;
        out.second = b;
        out.explanation = "CDC '" + cdcs[a].to_string() + "' mentions x" + std::to_string(j) +
                          " and shares a y-variable with '" + cdcs[b].to_string() + "'";
        return out;
      }
    }
  }
  return {};
}

SeparabilityOutcome separability_pipeline(const Problem& p, const DecisionOptions& opts) {
  SeparabilityOutcome out;
  auto unsupported = [&](std::string reason) {
    out.supported = false;
    out.cdcs.clear();
    out.reason = std::move(reason);
    return out;
  };

  for (const auto& u : p.uinds) {
    if (u.is_trivial()) {
      out.notes.push_back("dropped trivial UIND " + u.to_string(p.schema));
      continue;
    }
    (classify_uind(u, p.schema) == UindKind::kX ? out.xuinds : out.yuinds).push_back(u);
  }
  std::vector<FdClass> fd_classes;
  for (const auto& f : p.fds) {
    try {
      fd_classes.push_back(classify_fd(f, p.schema));
    } catch (const Error& e) {
      if (e.code() != Errc::kMixedFd) throw;
      return unsupported("FD " + f.to_string() + " mixes interpreted and non-interpreted positions");
    }
  }
  auto first_fd_of = [&](std::initializer_list<FdClass> classes) -> std::optional<FdClass> {
    for (FdClass c : fd_classes) {
      if (std::find(classes.begin(), classes.end(), c) != classes.end()) return c;
    }
    return std::nullopt;
  };
  const bool has_x = !out.xuinds.empty();
  const bool has_y = !out.yuinds.empty();

  if (!has_x && !has_y) {
    if (!p.fds.empty()) out.notes.push_back(std::to_string(p.fds.size()) + " FD(s) dropped");
    out.supported = true;
    out.tag = TheoremTag::kFdOnly;
    out.cdcs = p.cdcs;
    return out;
  }

  if (!has_x) {
    if (auto bad = first_fd_of({FdClass::kY, FdClass::kXY})) {
      return unsupported(to_string(*bad) + " with Y-UIND");
    }
    DpCheck dp = check_dp_controllable(p.schema, p.cdcs, out.yuinds);
    if (!dp.controllable) return unsupported("CDCs and Y-UINDs not dp-controllable: " + dp.explanation);
    out.supported = true;
    out.tag = p.fds.empty() ? TheoremTag::kYUindDp : TheoremTag::kXfdYxfdYuind;
    out.cdcs = dp_closure(p.schema, p.cdcs, out.yuinds);
    if (!p.fds.empty()) out.notes.push_back(std::to_string(p.fds.size()) + " FD(s) dropped");
    return out;
  }

  if (!fd_classes.empty()) {
    if (first_fd_of({FdClass::kY})) return unsupported("Y-FD with X-UIND");
    return unsupported(to_string(fd_classes.front()) + " with X-UIND");
  }
  if (has_y) {
    DpCheck dp = check_dp_controllable(p.schema, p.cdcs, out.yuinds);
    if (!dp.controllable) return unsupported("CDCs and Y-UINDs not dp-controllable: " + dp.explanation);
  }

  bool disjoint = true;
  for (const auto& u : out.xuinds) {
    DisjointCheck d = check_disjoint(p.cdcs, u, opts.solver);
    if (!d.disjoint) {
      disjoint = false;
      out.notes.push_back("not disjoint w.r.t. " + u.to_string(p.schema) + ": " + d.explanation);
      break;
    }
  }
  out.disjoint = disjoint;
  out.gc = check_global_consistency(p.cdcs, opts);
  out.globally_consistent = out.gc->globally_consistent;
  if (out.gc->failing) {
    out.notes.push_back("global consistency fails at " + to_string(*out.gc->failing));
  }
  if (!disjoint && !*out.globally_consistent) {
    return unsupported("X-UIND present; CDCs neither globally consistent nor disjoint");
  }
  out.supported = true;
  if (has_y) {
    out.tag = disjoint ? TheoremTag::kUindDisj : TheoremTag::kUindGc;
    out.cdcs = dp_closure(p.schema, p.cdcs, out.yuinds);
  } else {
    out.tag = disjoint ? TheoremTag::kXUindDisj : TheoremTag::kXUindGc;
    out.cdcs = p.cdcs;
  }
  return out;
}

namespace {

std::set<std::string> x_column(const std::set<Tuple>& tuples, int pos) {
  std::set<std::string> out;
  for (const auto& t : tuples) out.insert(t.x[pos - 1].name());
  return out;
}

std::set<std::int64_t> y_column(const std::set<Tuple>& tuples, int idx) {
  std::set<std::int64_t> out;
  for (const auto& t : tuples) out.insert(t.y[idx - 1]);
  return out;
}

CFormula pin(int var, std::int64_t value) {
  return CFormula::conjunction(normalize_comparison(Comparison::kEq, 1, var, 0, 0, value));
}

// Interpreted values for x-part `x` satisfying the applicable CDCs, keeping
// as many of `old` as possible (earlier variables first).
std::vector<std::int64_t> resolve_y(const Schema& schema, const std::vector<DomConstant>& x,
                                    const std::vector<std::int64_t>& old,
                                    const std::vector<Cdc>& cdcs, const SolverOptions& opts) {
  Tuple probe{x, old};
  std::vector<CFormula> applicable;
  for (const auto& c : cdcs) {
    if (eval_bool_expr(c.antecedent, probe)) applicable.push_back(c.consequent);
  }
  if (check_model(applicable, probe.y_assignment())) return old;
  if (!solve(applicable, opts).sat) {
    throw Error(Errc::kPreconditionViolated,
                "no interpreted values satisfy the CDCs applicable to " + probe.to_string());
  }
  std::vector<CFormula> pinned = applicable;
  for (int v = 1; v <= schema.m; ++v) {
    pinned.push_back(pin(v, old[v - 1]));
    if (!solve(pinned, opts).sat) pinned.pop_back();
  }
  SatResult r = solve(pinned, opts);
  std::vector<std::int64_t> out(schema.m);
  for (int v = 1; v <= schema.m; ++v) out[v - 1] = value_of(r.model, v);
  return out;
}

}  // namespace

Instance extend_to_uind_model(const Schema& schema, const Instance& inst,
                              const std::vector<Cdc>& cdcs, const std::vector<Uind>& uinds,
                              const SolverOptions& opts) {
  std::vector<Uind> xu;
  std::vector<Uind> yu;
  for (const auto& u : uinds) {
    if (u.is_trivial()) continue;
    (classify_uind(u, schema) == UindKind::kX ? xu : yu).push_back(u);
  }
  Instance out = inst;
  const std::size_t m0 = out.size();
  const std::size_t k = schema.k;
  const std::size_t r = schema.m;

  // X phase.
  std::size_t budget = m0 * k * (k > 0 ? k - 1 : 0);
  for (std::size_t added = 0;; ++added) {
    std::optional<Tuple> repair;
    for (const auto& u : xu) {
      auto target = x_column(out.tuples(), u.rhs);
      for (const auto& t : out.tuples()) {
        if (target.count(t.x[u.lhs - 1].name())) continue;
        Tuple t2 = t;
        t2.x[u.rhs - 1] = t.x[u.lhs - 1];
        t2.y = resolve_y(schema, t2.x, t.y, cdcs, opts);
        repair = std::move(t2);
        break;
      }
      if (repair) break;
    }
    if (!repair) break;
    if (added >= budget) {
      throw Error(Errc::kPreconditionViolated, "X-UIND repair exceeded its tuple bound");
    }
    out.insert(*repair);
  }

  // Y phase; copies keep the x-part, so the X-UINDs stay satisfied.
  const std::size_t m1 = out.size();
  budget = m1 * r * (r > 0 ? r - 1 : 0);
  for (std::size_t added = 0;; ++added) {
    std::optional<Tuple> repair;
    for (const auto& u : yu) {
      int i = u.lhs - schema.k;
      int j = u.rhs - schema.k;
      auto target = y_column(out.tuples(), j);
      for (const auto& t : out.tuples()) {
        if (target.count(t.y[i - 1])) continue;
        Tuple t2 = t;
        t2.y[j - 1] = t.y[i - 1];
        repair = std::move(t2);
        break;
      }
      if (repair) break;
    }
    if (!repair) break;
    if (added >= budget) {
      throw Error(Errc::kPreconditionViolated, "Y-UIND repair exceeded its tuple bound");
    }
    if (!satisfies_cdcs(cdcs, *repair)) {
      throw Error(Errc::kPreconditionViolated,
                  "copied tuple " + repair->to_string() + " violates a CDC (is the set dp-closed?)");
    }
    out.insert(*repair);
  }

  for (const auto& t : out.tuples()) {
    if (!satisfies_cdcs(cdcs, t)) {
      throw Error(Errc::kPreconditionViolated, "tuple " + t.to_string() + " violates a CDC");
    }
  }
  for (const auto& u : uinds) {
    if (!satisfies_uind(out, u, schema)) {
      throw Error(Errc::kPreconditionViolated, "UIND " + u.to_string(schema) + " still violated");
    }
  }
  return out;
}

}  // namespace hdec
