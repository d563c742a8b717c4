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

#include "hdec/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hdec/error.hpp"

namespace hdec {

Schema Schema::make(std::string name, int k, int m) {
  if (k < 0 || m < 0 || k + m < 1) {
    throw Error(Errc::kArity, "schema needs k >= 0, m >= 0 and k + m >= 1 (got x:" +
                                  std::to_string(k) + ", y:" + std::to_string(m) + ")");
  }
  return Schema{std::move(name), k, m};
}

DomConstant fresh_constant(int position) {
  return DomConstant(std::string(kFreshPrefix) + std::to_string(position));
}

bool is_reserved_constant(const std::string& name) {
  return name.rfind(kFreshPrefix, 0) == 0;
}

IntAssignment Tuple::y_assignment() const {
  IntAssignment beta;
  for (std::size_t j = 0; j < y.size(); ++j) beta[static_cast<int>(j) + 1] = y[j];
  return beta;
}

std::string Tuple::to_string() const {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const auto& c : x) {
    out << (first ? "" : ", ") << '"' << c.name() << '"';
    first = false;
  }
  for (auto v : y) {
    out << (first ? "" : ", ") << v;
    first = false;
  }
  out << ')';
  return out.str();
}

void check_tuple(const Schema& schema, const Tuple& t) {
  if (static_cast<int>(t.x.size()) != schema.k || static_cast<int>(t.y.size()) != schema.m) {
    throw Error(Errc::kArity, "tuple " + t.to_string() + " does not match schema arity (x:" +
                                  std::to_string(schema.k) + ", y:" + std::to_string(schema.m) +
                                  ")");
  }
}

const std::set<Tuple>& Instance::tuples() const { return extension(relation_); }

const std::set<Tuple>& Instance::extension(const std::string& symbol) const {
  static const std::set<Tuple> kEmpty;
  auto it = extensions_.find(symbol);
  return it == extensions_.end() ? kEmpty : it->second;
}

// ---------------------------------------------------------------------------

BoolExpr BoolExpr::top() {
  static const BoolExpr kTop(std::make_shared<Node>());
  return kTop;
}

BoolExpr BoolExpr::atom(EqAtom a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAtom;
  node->atom = std::move(a);
  return BoolExpr(std::move(node));
}

BoolExpr BoolExpr::negation(BoolExpr e) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kNot;
  node->children.push_back(std::move(e));
  return BoolExpr(std::move(node));
}

BoolExpr BoolExpr::conjunction(std::vector<BoolExpr> children) {
  if (children.empty()) return top();
  if (children.size() == 1) return children.front();
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAnd;
  node->children = std::move(children);
  return BoolExpr(std::move(node));
}

BoolExpr BoolExpr::disjunction(std::vector<BoolExpr> children) {
  if (children.size() == 1) return children.front();
  if (children.empty()) return negation(top());
  auto node = std::make_shared<Node>();
  node->kind = Kind::kOr;
  node->children = std::move(children);
  return BoolExpr(std::move(node));
}

void BoolExpr::collect_atoms(std::vector<EqAtom>& out) const {
  if (kind() == Kind::kAtom) {
    out.push_back(eq_atom());
    return;
  }
  for (const auto& c : children()) c.collect_atoms(out);
}

std::set<int> BoolExpr::positions() const {
  std::vector<EqAtom> atoms;
  collect_atoms(atoms);
  std::set<int> out;
  for (const auto& a : atoms) out.insert(a.position);
  return out;
}

namespace {

bool is_bare_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string quote_constant(const std::string& name) {
  if (is_bare_identifier(name) && name != "top") return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string BoolExpr::to_string() const {
  switch (kind()) {
    case Kind::kTrue:
      return "top";
    case Kind::kAtom:
      return "x" + std::to_string(eq_atom().position) + (eq_atom().equal ? " = " : " != ") +
             quote_constant(eq_atom().constant.name());
    case Kind::kNot:
      return "!(" + children().front().to_string() + ")";
    case Kind::kAnd:
    case Kind::kOr: {
      std::string sep = kind() == Kind::kAnd ? " & " : " | ";
      std::string out = "(";
      for (std::size_t k = 0; k < children().size(); ++k) {
        if (k > 0) out += sep;
        out += children()[k].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

bool operator==(const BoolExpr& lhs, const BoolExpr& rhs) { return (lhs <=> rhs) == 0; }

std::strong_ordering operator<=>(const BoolExpr& lhs, const BoolExpr& rhs) {
  if (lhs.node_ == rhs.node_) return std::strong_ordering::equal;
  if (auto c = lhs.kind() <=> rhs.kind(); c != 0) return c;
  if (lhs.kind() == BoolExpr::Kind::kAtom) return lhs.eq_atom() <=> rhs.eq_atom();
  const auto& lc = lhs.children();
  const auto& rc = rhs.children();
  return std::lexicographical_compare_three_way(lc.begin(), lc.end(), rc.begin(), rc.end());
}

bool eval_bool_expr(const BoolExpr& e, const Tuple& t) {
  return e.evaluate([&](int position, const DomConstant& c) {
    return position >= 1 && position <= static_cast<int>(t.x.size()) && t.x[position - 1] == c;
  });
}

bool Cdc::holds_on(const Tuple& t) const {
  return !eval_bool_expr(antecedent, t) || consequent.evaluate(t.y_assignment());
}

std::string Cdc::to_string() const {
  return antecedent.to_string() + " -> " + consequent.to_pretty_string();
}

std::strong_ordering operator<=>(const Cdc& lhs, const Cdc& rhs) {
  if (auto c = lhs.antecedent <=> rhs.antecedent; c != 0) return c;
  return lhs.consequent <=> rhs.consequent;
}

bool ViewDef::selects(const Tuple& t) const {
  if (!eval_bool_expr(x_condition, t)) return false;
  return !y_condition || y_condition->evaluate(t.y_assignment());
}

std::string ViewDef::to_string() const {
  std::string out = name + ": " + x_condition.to_string();
  if (y_condition) out += " & " + y_condition->to_pretty_string();
  return out;
}

std::string Uind::to_string(const Schema& schema) const {
  auto name = [&](int pos) {
    return pos <= schema.k ? "x" + std::to_string(pos) : "y" + std::to_string(pos - schema.k);
  };
  return schema.relation_name + "[" + name(lhs) + "] <= " + schema.relation_name + "[" +
         name(rhs) + "]";
}

std::string to_string(UindKind kind) { return kind == UindKind::kX ? "X-UIND" : "Y-UIND"; }

std::string to_string(FdClass cls) {
  switch (cls) {
    case FdClass::kX:
      return "X-FD";
    case FdClass::kY:
      return "Y-FD";
    case FdClass::kXY:
      return "XY-FD";
    case FdClass::kYX:
      return "YX-FD";
  }
  return {};
}

std::string Fd::to_string() const {
  auto set_text = [](const std::set<int>& s) {
    std::string out = "{";
    bool first = true;
    for (int p : s) {
      out += (first ? "" : ",") + std::to_string(p);
      first = false;
    }
    return out + "}";
  };
  return set_text(lhs) + " -> " + set_text(rhs);
}

UindKind classify_uind(const Uind& u, const Schema& s) {
  int n = s.arity();
  if (u.lhs < 1 || u.lhs > n || u.rhs < 1 || u.rhs > n) {
    throw Error(Errc::kArity, "UIND position out of range 1.." + std::to_string(n));
  }
  bool lx = s.is_x_position(u.lhs);
  bool rx = s.is_x_position(u.rhs);
  if (lx != rx) {
    throw Error(Errc::kMixedUind, "UIND " + u.to_string(s) +
                                      " compares a non-interpreted with an interpreted position");
  }
  return lx ? UindKind::kX : UindKind::kY;
}

FdClass classify_fd(const Fd& f, const Schema& s) {
  if (f.lhs.empty() || f.rhs.empty()) {
    throw Error(Errc::kInvalidArgument, "FD " + f.to_string() + " has an empty side");
  }
  auto side = [&](const std::set<int>& positions) {
    bool any_x = false;
    bool any_y = false;
    for (int p : positions) {
      if (p < 1 || p > s.arity()) {
        throw Error(Errc::kArity, "FD position " + std::to_string(p) + " out of range");
      }
      (s.is_x_position(p) ? any_x : any_y) = true;
    }
    if (any_x && any_y) {
      throw Error(Errc::kMixedFd,
                  "FD " + f.to_string() + " mixes interpreted and non-interpreted positions");
    }
    return any_x;
  };
  bool lhs_x = side(f.lhs);
  bool rhs_x = side(f.rhs);
  if (lhs_x) return rhs_x ? FdClass::kX : FdClass::kXY;
  return rhs_x ? FdClass::kYX : FdClass::kY;
}

namespace {

void check_bool_expr(const BoolExpr& e, const Schema& s, const std::string& where) {
  std::vector<EqAtom> atoms;
  e.collect_atoms(atoms);
  for (const auto& a : atoms) {
    if (!s.is_x_position(a.position)) {
      throw Error(Errc::kUnknownVariable, where + ": x" + std::to_string(a.position) +
                                              " is not a non-interpreted position");
    }
  }
}

void check_cformula(const CFormula& f, const Schema& s, LanguageMode mode,
                    const std::string& where) {
  for (int v : f.variables()) {
    if (v < 1 || v > s.m) {
      throw Error(Errc::kUnknownVariable,
                  where + ": y" + std::to_string(v) + " is not an interpreted position");
    }
  }
  if (f.mode() != mode) {
    throw Error(Errc::kModeViolation, where + ": formula language does not match problem mode " +
                                          to_string(mode));
  }
}

}  // namespace

void Problem::validate() const {
  Schema::make(schema.relation_name, schema.k, schema.m);
  for (std::size_t n = 0; n < cdcs.size(); ++n) {
    std::string where = "cdc #" + std::to_string(n + 1);
    check_bool_expr(cdcs[n].antecedent, schema, where);
    check_cformula(cdcs[n].consequent, schema, mode, where);
  }
  std::set<std::string> names;
  for (const auto& v : views) {
    if (!names.insert(v.name).second) {
      throw Error(Errc::kInvalidArgument, "duplicate view name '" + v.name + "'");
    }
    check_bool_expr(v.x_condition, schema, "view " + v.name);
    if (v.y_condition) check_cformula(*v.y_condition, schema, mode, "view " + v.name);
  }
  for (const auto& u : uinds) classify_uind(u, schema);
  for (const auto& f : fds) {
    // Mixed FDs are well-formed; the separability pipeline refuses them.
    try {
      classify_fd(f, schema);
    } catch (const Error& e) {
      if (e.code() != Errc::kMixedFd) throw;
    }
  }
}

std::set<DomConstant> problem_constants(const Problem& p) {
  std::vector<EqAtom> atoms;
  for (const auto& c : p.cdcs) c.antecedent.collect_atoms(atoms);
  for (const auto& v : p.views) v.x_condition.collect_atoms(atoms);
  std::set<DomConstant> out;
  for (const auto& a : atoms) out.insert(a.constant);
  return out;
}

bool satisfies_cdcs(const std::vector<Cdc>& cdcs, const Tuple& t) {
  return std::all_of(cdcs.begin(), cdcs.end(), [&](const Cdc& c) { return c.holds_on(t); });
}

namespace {

// Column values at an absolute position, encoded so x and y columns compare
// uniformly.
std::set<std::string> column(const Instance& inst, int pos, const Schema& s) {
  std::set<std::string> out;
  for (const auto& t : inst.tuples()) {
    if (s.is_x_position(pos)) {
      out.insert("x:" + t.x[pos - 1].name());
    } else {
      out.insert("y:" + std::to_string(t.y[pos - s.k - 1]));
    }
  }
  return out;
}

std::string cell(const Tuple& t, int pos) {
  int k = static_cast<int>(t.x.size());
  return pos <= k ? "x:" + t.x[pos - 1].name() : "y:" + std::to_string(t.y[pos - k - 1]);
}

}  // namespace

bool satisfies_uind(const Instance& inst, const Uind& u, const Schema& s) {
  auto lhs = column(inst, u.lhs, s);
  auto rhs = column(inst, u.rhs, s);
  return std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

bool satisfies_fd(const Instance& inst, const Fd& f) {
  const auto& ts = inst.tuples();
  for (auto a = ts.begin(); a != ts.end(); ++a) {
    for (auto b = std::next(a); b != ts.end(); ++b) {
      bool agree_lhs = std::all_of(f.lhs.begin(), f.lhs.end(),
                                   [&](int p) { return cell(*a, p) == cell(*b, p); });
      if (!agree_lhs) continue;
      bool agree_rhs = std::all_of(f.rhs.begin(), f.rhs.end(),
                                   [&](int p) { return cell(*a, p) == cell(*b, p); });
      if (!agree_rhs) return false;
    }
  }
  return true;
}

bool satisfies_all(const Instance& inst, const Problem& p) {
  for (const auto& t : inst.tuples()) {
    if (!satisfies_cdcs(p.cdcs, t)) return false;
  }
  for (const auto& u : p.uinds) {
    if (!satisfies_uind(inst, u, p.schema)) return false;
  }
  for (const auto& f : p.fds) {
    if (!satisfies_fd(inst, f)) return false;
  }
  return true;
}

}  // namespace hdec
