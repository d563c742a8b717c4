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

#include "hdec/solver.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

#include "hdec/error.hpp"

namespace hdec {
namespace {

using W = __int128;
constexpr W kInf = W(1) << 120;

W floor_div(W a, W b) {
  W q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Edge {
  int from;
  int to;
  W w;
  std::size_t atom;
};

// Doubled-variable graph where node 2k is +y and node 2k+1 is -y.
// W[u][v] bounds val(v) - val(u).
class Octagon {
 public:
  explicit Octagon(int nodes) : n_(nodes), w_(static_cast<std::size_t>(nodes) * nodes, kInf),
                                next_(w_.size(), -1) {
    for (int u = 0; u < n_; ++u) at(u, u) = 0;
  }

  W& at(int u, int v) { return w_[static_cast<std::size_t>(u) * n_ + v]; }
  int& next(int u, int v) { return next_[static_cast<std::size_t>(u) * n_ + v]; }

  void add_edge(const Edge& e, int id) {
    if (e.w < at(e.from, e.to)) {
      at(e.from, e.to) = e.w;
      next(e.from, e.to) = id;
    }
  }

  void close() {
    for (int k = 0; k < n_; ++k) {
      for (int i = 0; i < n_; ++i) {
        W ik = at(i, k);
        if (ik >= kInf) continue;
        for (int j = 0; j < n_; ++j) {
          W kj = at(k, j);
          if (kj >= kInf) continue;
          if (ik + kj < at(i, j)) {
            at(i, j) = ik + kj;
            next(i, j) = next(i, k);
          }
        }
      }
    }
  }

  // Paths through a single new edge s -> t.
  void relax_through(int s, int t, W w) {
    for (int a = 0; a < n_; ++a) {
      W as = at(a, s);
      if (as >= kInf) continue;
      for (int b = 0; b < n_; ++b) {
        W tb = at(t, b);
        if (tb >= kInf) continue;
        at(a, b) = std::min(at(a, b), as + w + tb);
      }
    }
  }

  // Integral tightening of the unary bounds followed by strengthening.
  void tighten() {
    for (int u = 0; u < n_; ++u) {
      W& wu = at(u ^ 1, u);
      if (wu < kInf) wu = 2 * floor_div(wu, 2);
    }
    for (int a = 0; a < n_; ++a) {
      W aa = at(a, a ^ 1);
      if (aa >= kInf) continue;
      for (int b = 0; b < n_; ++b) {
        W bb = at(b ^ 1, b);
        if (bb >= kInf) continue;
        at(a, b) = std::min(at(a, b), floor_div(aa + bb, 2));
      }
    }
  }

 private:
  int n_;
  std::vector<W> w_;
  std::vector<int> next_;
};

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SatResult utvpi_sat(std::span<const Utvpi> atoms) {
  std::vector<int> vars;
  for (const auto& u : atoms) {
    for (int v : u.variables()) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  auto index_of = [&](int v) {
    return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };
  auto node = [&](int coef, int v) { return 2 * index_of(v) + (coef > 0 ? 0 : 1); };

  std::vector<Edge> edges;
  for (std::size_t idx = 0; idx < atoms.size(); ++idx) {
    const Utvpi& u = atoms[idx];
    if (u.is_constant()) {
      if (u.d() < 0) return SatResult::unsatisfiable({idx});
      continue;
    }
    int p = node(u.a(), u.i());
    if (u.is_unary()) {
      edges.push_back({p ^ 1, p, 2 * W(u.d()), idx});
    } else {
      int q = node(u.b(), u.j());
      edges.push_back({q ^ 1, p, W(u.d()), idx});
      edges.push_back({p ^ 1, q, W(u.d()), idx});
    }
  }
  const int n = 2 * static_cast<int>(vars.size());

  // Bellman-Ford from a virtual source; a relaxation in the last round
  // exposes a negative cycle.
  {
    std::vector<W> dist(n, 0);
    std::vector<int> pred(n, -1);
    int relaxed = -1;
    for (int round = 0; round <= n; ++round) {
      relaxed = -1;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const Edge& ed = edges[e];
        if (dist[ed.from] + ed.w < dist[ed.to]) {
          dist[ed.to] = dist[ed.from] + ed.w;
          pred[ed.to] = static_cast<int>(e);
          relaxed = ed.to;
        }
      }
      if (relaxed < 0) break;
    }
    if (relaxed >= 0) {
      int v = relaxed;
      for (int s = 0; s < n; ++s) v = edges[pred[v]].from;
      std::vector<std::size_t> core;
      int u = v;
      do {
        const Edge& ed = edges[pred[u]];
        core.push_back(ed.atom);
        u = ed.from;
      } while (u != v);
      return SatResult::unsatisfiable(sorted_unique(std::move(core)));
    }
  }

  Octagon g(n);
  for (std::size_t e = 0; e < edges.size(); ++e) g.add_edge(edges[e], static_cast<int>(e));
  g.close();

  // Rational feasibility holds; integer infeasibility shows up as a variable
  // whose two unary bounds cross after rounding.
  for (int p = 0; p < n; p += 2) {
    int q = p + 1;
    W up = g.at(q, p);
    W down = g.at(p, q);
    if (up >= kInf || down >= kInf) continue;
    if (floor_div(up, 2) + floor_div(down, 2) < 0) {
      std::vector<std::size_t> core;
      auto walk = [&](int from, int to) {
        for (int steps = 0; from != to && steps <= n; ++steps) {
          const Edge& ed = edges[g.next(from, to)];
          core.push_back(ed.atom);
          from = ed.to;
        }
      };
      walk(q, p);
      walk(p, q);
      return SatResult::unsatisfiable(sorted_unique(std::move(core)));
    }
  }

  // Tight closure keeps every value inside a variable's bounds extendable, so
  // the variables can be fixed one at a time.
  g.tighten();
  IntAssignment model;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    int p = 2 * static_cast<int>(k);
    int q = p + 1;
    W hi = g.at(q, p) >= kInf ? kInf : floor_div(g.at(q, p), 2);
    W lo = g.at(p, q) >= kInf ? -kInf : -floor_div(g.at(p, q), 2);
    if (lo > hi) throw std::logic_error("utvpi_sat: tight closure lost a model");
    W v = std::clamp<W>(0, lo, hi);
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
      throw Error(Errc::kBoundOverflow, "model value for y" + std::to_string(vars[k]) +
                                            " does not fit in 64 bits");
    }
    model[vars[k]] = static_cast<std::int64_t>(v);
    g.relax_through(q, p, 2 * v);
    g.relax_through(p, q, -2 * v);
    g.tighten();
  }
  if (!check_model(atoms, model)) throw std::logic_error("utvpi_sat: model check failed");
  return SatResult::satisfiable(std::move(model));
}

namespace {

// Boolean skeleton: an atom and its negation share one variable.
class BoolSearch {
 public:
  BoolSearch(std::span<const Butvpi> formulas, const SolverOptions& opts) : opts_(opts) {
    for (const auto& f : formulas) roots_.push_back(compile(f));
    for (int r : roots_) {
      std::vector<int> vs;
      collect_vars(r, vs);
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      root_vars_.push_back(std::move(vs));
    }
    value_.assign(keys_.size(), -1);
  }

  std::optional<IntAssignment> run() {
    if (dfs()) return model_;
    return std::nullopt;
  }

 private:
  struct CNode {
    Butvpi::Kind kind;
    int var = -1;       // kAtom on a non-constant atom
    bool positive = true;
    int fixed = -1;     // kAtom on a constant atom: 0 or 1
    std::vector<int> kids;
  };

  int compile(const Butvpi& f) {
    CNode n{f.kind(), -1, true, -1, {}};
    if (f.kind() == Butvpi::Kind::kAtom) {
      const Utvpi& u = f.utvpi();
      if (u.is_constant()) {
        n.fixed = u.d() >= 0 ? 1 : 0;
      } else {
        Utvpi neg = negate_utvpi(u);
        Utvpi key = std::min(u, neg);
        auto [it, fresh] = key_index_.try_emplace(key, static_cast<int>(keys_.size()));
        if (fresh) keys_.push_back(key);
        n.var = it->second;
        n.positive = (u == key);
      }
    } else {
      for (const auto& c : f.children()) n.kids.push_back(compile(c));
    }
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  void collect_vars(int id, std::vector<int>& out) const {
    const CNode& n = nodes_[id];
    if (n.var >= 0) out.push_back(n.var);
    for (int k : n.kids) collect_vars(k, out);
  }

  // 0 false, 1 true, 2 unknown.
  int eval(int id) const {
    const CNode& n = nodes_[id];
    switch (n.kind) {
      case Butvpi::Kind::kAtom: {
        if (n.fixed >= 0) return n.fixed;
        int v = value_[n.var];
        if (v < 0) return 2;
        return n.positive ? v : 1 - v;
      }
      case Butvpi::Kind::kNot: {
        int v = eval(n.kids.front());
        return v == 2 ? 2 : 1 - v;
      }
      case Butvpi::Kind::kAnd: {
        int r = 1;
        for (int k : n.kids) {
          int v = eval(k);
          if (v == 0) return 0;
          if (v == 2) r = 2;
        }
        return r;
      }
      case Butvpi::Kind::kOr: {
        int r = 0;
        for (int k : n.kids) {
          int v = eval(k);
          if (v == 1) return 1;
          if (v == 2) r = 2;
        }
        return r;
      }
    }
    return 2;
  }

  SatResult theory() const {
    std::vector<Utvpi> lits;
    for (std::size_t v = 0; v < keys_.size(); ++v) {
      if (value_[v] == 1) lits.push_back(keys_[v]);
      if (value_[v] == 0) lits.push_back(negate_utvpi(keys_[v]));
    }
    return utvpi_sat(lits);
  }

  bool dfs() {
    if (++nodes_used_ > opts_.node_budget) {
      throw Error(Errc::kResourceLimit, "BUTVPI search exceeded the budget of " +
                                            std::to_string(opts_.node_budget) + " nodes");
    }
    std::vector<int> trail;
    auto undo = [&] {
      for (int v : trail) value_[v] = -1;
    };
    bool all_true = false;
    for (bool changed = true; changed;) {
      changed = false;
      all_true = true;
      for (std::size_t r = 0; r < roots_.size(); ++r) {
        int v = eval(roots_[r]);
        if (v == 0) {
          undo();
          return false;
        }
        if (v == 1) continue;
        all_true = false;
        int open = -1;
        int count = 0;
        for (int x : root_vars_[r]) {
          if (value_[x] < 0) {
            open = x;
            ++count;
          }
        }
        if (count != 1) continue;
        value_[open] = 1;
        bool t_ok = eval(roots_[r]) != 0;
        value_[open] = 0;
        bool f_ok = eval(roots_[r]) != 0;
        if (!t_ok && !f_ok) {
          value_[open] = -1;
          undo();
          return false;
        }
        if (t_ok && f_ok) {
          value_[open] = -1;
          continue;
        }
        value_[open] = t_ok ? 1 : 0;
        trail.push_back(open);
        changed = true;
      }
    }
    if (all_true || opts_.eager_theory) {
      SatResult t = theory();
      if (!t.sat) {
        undo();
        return false;
      }
      if (all_true) {
        model_ = std::move(t.model);
        return true;
      }
    }
    int pick = -1;
    for (std::size_t r = 0; r < roots_.size() && pick < 0; ++r) {
      if (eval(roots_[r]) != 2) continue;
      for (int x : root_vars_[r]) {
        if (value_[x] < 0) {
          pick = x;
          break;
        }
      }
    }
    if (pick < 0) throw std::logic_error("butvpi_sat: undetermined formula without open variable");
    for (int val : {1, 0}) {
      value_[pick] = val;
      if (dfs()) return true;
      value_[pick] = -1;
    }
    undo();
    return false;
  }

  SolverOptions opts_;
  std::vector<CNode> nodes_;
  std::vector<int> roots_;
  std::vector<std::vector<int>> root_vars_;
  std::vector<Utvpi> keys_;
  std::map<Utvpi, int> key_index_;
  std::vector<int> value_;
  std::uint64_t nodes_used_ = 0;
  IntAssignment model_;
};

}  // namespace

SatResult butvpi_sat(std::span<const Butvpi> formulas, const SolverOptions& opts) {
  BoolSearch search(formulas, opts);
  auto model = search.run();
  if (!model) {
    std::vector<std::size_t> core(formulas.size());
    for (std::size_t k = 0; k < core.size(); ++k) core[k] = k;
    return SatResult::unsatisfiable(std::move(core));
  }
  for (const auto& f : formulas) {
    for (int v : f.variables()) model->try_emplace(v, 0);
  }
  for (const auto& f : formulas) {
    if (!f.evaluate(*model)) throw std::logic_error("butvpi_sat: model check failed");
  }
  return SatResult::satisfiable(std::move(*model));
}

SatResult solve(std::span<const CFormula> formulas, const SolverOptions& opts) {
  bool all_conjunctions = std::all_of(formulas.begin(), formulas.end(),
                                      [](const CFormula& f) { return f.is_conjunction(); });
  if (all_conjunctions) {
    std::vector<Utvpi> atoms;
    std::vector<std::size_t> owner;
    for (std::size_t k = 0; k < formulas.size(); ++k) {
      for (const auto& u : formulas[k].atoms()) {
        atoms.push_back(u);
        owner.push_back(k);
      }
    }
    SatResult r = utvpi_sat(atoms);
    if (!r.sat) {
      std::vector<std::size_t> core;
      for (std::size_t a : r.core) core.push_back(owner[a]);
      r.core = sorted_unique(std::move(core));
    }
    return r;
  }
  std::vector<Butvpi> trees;
  for (const auto& f : formulas) trees.push_back(f.as_butvpi());
  return butvpi_sat(trees, opts);
}

bool check_model(std::span<const Utvpi> atoms, const IntAssignment& beta) {
  return std::all_of(atoms.begin(), atoms.end(),
                     [&](const Utvpi& u) { return u.evaluate(beta); });
}

bool check_model(std::span<const CFormula> formulas, const IntAssignment& beta) {
  return std::all_of(formulas.begin(), formulas.end(),
                     [&](const CFormula& f) { return f.evaluate(beta); });
}

}  // namespace hdec
