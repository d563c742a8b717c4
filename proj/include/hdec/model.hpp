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

// The data model over a single relation. Its first k positions hold opaque
// constants; the remaining m positions hold integers.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hdec/formula.hpp"

namespace hdec {

struct Schema {
  std::string relation_name = "R";
  int k = 0;  // non-interpreted positions 1..k
  int m = 0;  // interpreted positions k+1..k+m

  // Throws Error(kArity) unless k, m >= 0 and k + m >= 1.
  static Schema make(std::string name, int k, int m);

  int arity() const { return k + m; }
  bool is_x_position(int pos) const { return pos >= 1 && pos <= k; }
  bool is_y_position(int pos) const { return pos > k && pos <= k + m; }

  friend bool operator==(const Schema&, const Schema&) = default;
};

// Opaque constant; equality is name identity.
class DomConstant {
 public:
  DomConstant() = default;
  explicit DomConstant(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  friend auto operator<=>(const DomConstant&, const DomConstant&) = default;

 private:
  std::string name_;
};

// "⋆i": the reserved constant for x-position i. User constants may not start
// with the reserved prefix, so it differs from every constant in a problem.
inline constexpr const char* kFreshPrefix = "⋆";
DomConstant fresh_constant(int position);
bool is_reserved_constant(const std::string& name);

struct Tuple {
  std::vector<DomConstant> x;
  std::vector<std::int64_t> y;

  // beta(y_j) = y[j-1].
  IntAssignment y_assignment() const;
  std::string to_string() const;

  friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

void check_tuple(const Schema& schema, const Tuple& t);

// Finite relation extensions keyed by relation symbol (the source relation
// or a view name).
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::string relation) : relation_(std::move(relation)) {}

  const std::string& relation() const { return relation_; }
  const std::set<Tuple>& tuples() const;  // tuples of the source relation
  const std::set<Tuple>& extension(const std::string& symbol) const;

  bool insert(const Tuple& t) { return extensions_[relation_].insert(t).second; }
  void insert(const std::string& symbol, const Tuple& t) { extensions_[symbol].insert(t); }

  std::size_t size() const { return tuples().size(); }
  bool contains(const Tuple& t) const { return tuples().count(t) > 0; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::string relation_ = "R";
  std::map<std::string, std::set<Tuple>> extensions_;
};

// x_position = constant (or != when equal is false).
struct EqAtom {
  int position = 1;
  DomConstant constant;
  bool equal = true;

  friend auto operator<=>(const EqAtom&, const EqAtom&) = default;
};

// Boolean combination of EqAtoms over the x-positions.
class BoolExpr {
 public:
  enum class Kind { kTrue, kAtom, kNot, kAnd, kOr };

  static BoolExpr top();
  static BoolExpr atom(EqAtom a);
  static BoolExpr eq(int position, std::string constant) {
    return atom({position, DomConstant(std::move(constant)), true});
  }
  static BoolExpr neq(int position, std::string constant) {
    return atom({position, DomConstant(std::move(constant)), false});
  }
  static BoolExpr negation(BoolExpr e);
  static BoolExpr conjunction(std::vector<BoolExpr> children);
  static BoolExpr disjunction(std::vector<BoolExpr> children);

  Kind kind() const { return node_->kind; }
  bool is_top() const { return kind() == Kind::kTrue; }
  const EqAtom& eq_atom() const { return node_->atom; }
  const std::vector<BoolExpr>& children() const { return node_->children; }

  // `holds(position, constant)` decides the positive equality x_position =
  // constant; atom polarity is applied here.
  template <class Pred>
  bool evaluate(const Pred& holds) const {
    switch (kind()) {
      case Kind::kTrue:
        return true;
      case Kind::kAtom: {
        bool v = holds(eq_atom().position, eq_atom().constant);
        return eq_atom().equal ? v : !v;
      }
      case Kind::kNot:
        return !children().front().evaluate(holds);
      case Kind::kAnd:
        for (const auto& c : children()) {
          if (!c.evaluate(holds)) return false;
        }
        return true;
      case Kind::kOr:
        for (const auto& c : children()) {
          if (c.evaluate(holds)) return true;
        }
        return false;
    }
    return false;
  }

  void collect_atoms(std::vector<EqAtom>& out) const;
  std::set<int> positions() const;
  std::string to_string() const;

  friend bool operator==(const BoolExpr& lhs, const BoolExpr& rhs);
  friend std::strong_ordering operator<=>(const BoolExpr& lhs, const BoolExpr& rhs);

 private:
  struct Node {
    Kind kind = Kind::kTrue;
    EqAtom atom;
    std::vector<BoolExpr> children;
  };
  explicit BoolExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

bool eval_bool_expr(const BoolExpr& e, const Tuple& t);

// antecedent(x) -> consequent(y)
struct Cdc {
  BoolExpr antecedent = BoolExpr::top();
  CFormula consequent = CFormula::conjunction({});

  bool holds_on(const Tuple& t) const;
  std::string to_string() const;

  friend bool operator==(const Cdc&, const Cdc&) = default;
  friend std::strong_ordering operator<=>(const Cdc& lhs, const Cdc& rhs);
};

// V: x_condition(x) & y_condition(y); an absent y_condition selects on x only.
struct ViewDef {
  std::string name;
  BoolExpr x_condition = BoolExpr::top();
  std::optional<CFormula> y_condition;

  bool selects(const Tuple& t) const;
  std::string to_string() const;

  friend bool operator==(const ViewDef&, const ViewDef&) = default;
};

enum class UindKind { kX, kY };

// R[lhs] <= R[rhs], absolute positions 1..n.
struct Uind {
  int lhs = 1;
  int rhs = 1;

  bool is_trivial() const { return lhs == rhs; }
  std::string to_string(const Schema& schema) const;

  friend auto operator<=>(const Uind&, const Uind&) = default;
};

enum class FdClass { kX, kY, kXY, kYX };

std::string to_string(UindKind kind);
std::string to_string(FdClass cls);

// lhs -> rhs over absolute positions.
struct Fd {
  std::set<int> lhs;
  std::set<int> rhs;

  std::string to_string() const;

  friend auto operator<=>(const Fd&, const Fd&) = default;
};

// Throws Error(kMixedUind) when the positions straddle the k boundary and
// Error(kArity) for out-of-range positions.
UindKind classify_uind(const Uind& u, const Schema& s);
// Throws Error(kMixedFd) when lhs or rhs spans both sides.
FdClass classify_fd(const Fd& f, const Schema& s);

struct Problem {
  Schema schema;
  LanguageMode mode = LanguageMode::kUtvpi;
  std::vector<Cdc> cdcs;
  std::vector<ViewDef> views;
  std::vector<Uind> uinds;
  std::vector<Fd> fds;

  // Position references, view-name uniqueness, mode homogeneity.
  void validate() const;

  friend bool operator==(const Problem&, const Problem&) = default;
};

// Constants appearing in the problem's antecedents and view conditions.
std::set<DomConstant> problem_constants(const Problem& p);

bool satisfies_cdcs(const std::vector<Cdc>& cdcs, const Tuple& t);
bool satisfies_uind(const Instance& inst, const Uind& u, const Schema& s);
bool satisfies_fd(const Instance& inst, const Fd& f);
// Every CDC tuple-wise, every FD pairwise and every UIND column-wise.
bool satisfies_all(const Instance& inst, const Problem& p);

}  // namespace hdec
