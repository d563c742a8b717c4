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

#include "hdec/formula.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "hdec/error.hpp"

namespace hdec {
namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

void check_coefficient(int c) {
  if (c < -1 || c > 1) {
    throw Error(Errc::kCoefficientOutOfRange,
                "coefficient " + std::to_string(c) + " is not in {-1, 0, 1}");
  }
}

std::int64_t checked_negate(std::int64_t d) {
  if (d == kMin) throw Error(Errc::kBoundOverflow, "bound overflows 64-bit range");
  return -d;
}

std::int64_t checked_add(std::int64_t d, std::int64_t delta) {
  if ((delta > 0 && d > kMax - delta) || (delta < 0 && d < kMin - delta)) {
    throw Error(Errc::kBoundOverflow, "bound overflows 64-bit range");
  }
  return d + delta;
}

// floor(d / 2) without relying on the rounding direction of '/'.
std::int64_t floor_half(std::int64_t d) { return d >= 0 ? d / 2 : -((-(d + 1)) / 2) - 1; }

void append_term(std::ostringstream& out, int coef, int var, bool first) {
  if (first) {
    out << (coef < 0 ? "-" : "");
  } else {
    out << (coef < 0 ? " - " : " + ");
  }
  out << 'y' << var;
}

}  // namespace

std::int64_t value_of(const IntAssignment& beta, int var) {
  auto it = beta.find(var);
  return it == beta.end() ? 0 : it->second;
}

std::string to_string(LanguageMode mode) {
  return mode == LanguageMode::kUtvpi ? "utvpi" : "butvpi";
}

Utvpi Utvpi::make(int a, int i, int b, int j, std::int64_t d) {
  check_coefficient(a);
  check_coefficient(b);
  if ((a != 0 && i <= 0) || (b != 0 && j <= 0)) {
    throw Error(Errc::kInvalidArgument, "UTVPI term references an invalid variable index");
  }
  if (a == 0) i = 0;
  if (b == 0) j = 0;
  if (a == 0 && b != 0) {
    std::swap(a, b);
    std::swap(i, j);
  }
  if (b != 0 && i == j) {
    // a*y + b*y: either cancels to the constant atom or doubles.
    if (a == -b) return Utvpi(0, 0, 0, 0, d);
    return Utvpi(a, i, 0, 0, floor_half(d));
  }
  if (b != 0 && j < i) {
    std::swap(a, b);
    std::swap(i, j);
  }
  return Utvpi(a, i, b, j, d);
}

std::vector<int> Utvpi::variables() const {
  std::vector<int> vars;
  if (a_ != 0) vars.push_back(i_);
  if (b_ != 0) vars.push_back(j_);
  return vars;
}

bool Utvpi::evaluate(const IntAssignment& beta) const {
  __int128 lhs = 0;
  if (a_ != 0) lhs += static_cast<__int128>(a_) * value_of(beta, i_);
  if (b_ != 0) lhs += static_cast<__int128>(b_) * value_of(beta, j_);
  return lhs <= d_;
}

std::string Utvpi::to_string() const {
  std::ostringstream out;
  if (a_ == 0) {
    out << "0 <= " << d_;
    return out.str();
  }
  append_term(out, a_, i_, true);
  if (b_ != 0) append_term(out, b_, j_, false);
  out << " <= " << d_;
  return out.str();
}

std::string Utvpi::to_pretty_string() const {
  bool all_negative = a_ < 0 && b_ <= 0;
  if (!all_negative || d_ == kMin) return to_string();
  std::ostringstream out;
  append_term(out, -a_, i_, true);
  if (b_ != 0) append_term(out, -b_, j_, false);
  out << " >= " << -d_;
  return out.str();
}

std::vector<Utvpi> normalize_comparison(Comparison op, int a, int i, int b, int j,
                                        std::int64_t d) {
  check_coefficient(a);
  check_coefficient(b);
  switch (op) {
    case Comparison::kLe:
      return {Utvpi::make(a, i, b, j, d)};
    case Comparison::kGe:
      return {Utvpi::make(-a, i, -b, j, checked_negate(d))};
    case Comparison::kLt:
      return {Utvpi::make(a, i, b, j, checked_add(d, -1))};
    case Comparison::kGt:
      return {Utvpi::make(-a, i, -b, j, checked_negate(checked_add(d, 1)))};
    case Comparison::kEq:
      return {Utvpi::make(a, i, b, j, d), Utvpi::make(-a, i, -b, j, checked_negate(d))};
  }
  return {};
}

Utvpi negate_utvpi(const Utvpi& u) {
  // -d - 1 == ~d, which never overflows.
  return Utvpi::make(-u.a(), u.i(), -u.b(), u.j(), ~u.d());
}

// ---------------------------------------------------------------------------

Butvpi Butvpi::atom(Utvpi u) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAtom;
  node->atom = u;
  return Butvpi(std::move(node));
}

Butvpi Butvpi::negation(Butvpi f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kNot;
  node->children.push_back(std::move(f));
  return Butvpi(std::move(node));
}

Butvpi Butvpi::conjunction(std::vector<Butvpi> children) {
  if (children.size() == 1) return children.front();
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAnd;
  node->children = std::move(children);
  return Butvpi(std::move(node));
}

Butvpi Butvpi::disjunction(std::vector<Butvpi> children) {
  if (children.size() == 1) return children.front();
  auto node = std::make_shared<Node>();
  node->kind = Kind::kOr;
  node->children = std::move(children);
  return Butvpi(std::move(node));
}

bool Butvpi::evaluate(const IntAssignment& beta) const {
  switch (kind()) {
    case Kind::kAtom:
      return utvpi().evaluate(beta);
    case Kind::kNot:
      return !children().front().evaluate(beta);
    case Kind::kAnd:
      return std::all_of(children().begin(), children().end(),
                         [&](const Butvpi& c) { return c.evaluate(beta); });
    case Kind::kOr:
      return std::any_of(children().begin(), children().end(),
                         [&](const Butvpi& c) { return c.evaluate(beta); });
  }
  return false;
}

void Butvpi::collect_atoms(std::vector<Utvpi>& out) const {
  if (kind() == Kind::kAtom) {
    out.push_back(utvpi());
    return;
  }
  for (const auto& c : children()) c.collect_atoms(out);
}

std::set<int> Butvpi::variables() const {
  std::vector<Utvpi> atoms;
  collect_atoms(atoms);
  std::set<int> vars;
  for (const auto& u : atoms) {
    for (int v : u.variables()) vars.insert(v);
  }
  return vars;
}

std::string Butvpi::to_string() const {
  switch (kind()) {
    case Kind::kAtom:
      return utvpi().to_string();
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

bool operator==(const Butvpi& lhs, const Butvpi& rhs) { return (lhs <=> rhs) == 0; }

std::strong_ordering operator<=>(const Butvpi& lhs, const Butvpi& rhs) {
  if (lhs.node_ == rhs.node_) return std::strong_ordering::equal;
  if (auto c = lhs.kind() <=> rhs.kind(); c != 0) return c;
  if (lhs.kind() == Butvpi::Kind::kAtom) return lhs.utvpi() <=> rhs.utvpi();
  const auto& lc = lhs.children();
  const auto& rc = rhs.children();
  return std::lexicographical_compare_three_way(lc.begin(), lc.end(), rc.begin(), rc.end());
}

// ---------------------------------------------------------------------------

CFormula CFormula::conjunction(std::vector<Utvpi> atoms) { return CFormula(std::move(atoms)); }

CFormula CFormula::boolean(Butvpi tree) { return CFormula(std::move(tree)); }

Butvpi CFormula::as_butvpi() const {
  if (!is_conjunction()) return tree();
  std::vector<Butvpi> leaves;
  for (const auto& u : atoms()) leaves.push_back(Butvpi::atom(u));
  if (leaves.empty()) leaves.push_back(Butvpi::atom(Utvpi::constant(0)));
  return Butvpi::conjunction(std::move(leaves));
}

bool CFormula::evaluate(const IntAssignment& beta) const {
  if (!is_conjunction()) return tree().evaluate(beta);
  return std::all_of(atoms().begin(), atoms().end(),
                     [&](const Utvpi& u) { return u.evaluate(beta); });
}

std::set<int> CFormula::variables() const {
  if (!is_conjunction()) return tree().variables();
  std::set<int> vars;
  for (const auto& u : atoms()) {
    for (int v : u.variables()) vars.insert(v);
  }
  return vars;
}

namespace {

Utvpi rename_atom(const Utvpi& u, int from, int to) {
  int i = u.i() == from ? to : u.i();
  int j = u.j() == from ? to : u.j();
  return Utvpi::make(u.a(), i, u.b(), j, u.d());
}

Butvpi rename_tree(const Butvpi& f, int from, int to) {
  switch (f.kind()) {
    case Butvpi::Kind::kAtom:
      return Butvpi::atom(rename_atom(f.utvpi(), from, to));
    case Butvpi::Kind::kNot:
      return Butvpi::negation(rename_tree(f.children().front(), from, to));
    case Butvpi::Kind::kAnd:
    case Butvpi::Kind::kOr: {
      std::vector<Butvpi> children;
      for (const auto& c : f.children()) children.push_back(rename_tree(c, from, to));
      return f.kind() == Butvpi::Kind::kAnd ? Butvpi::conjunction(std::move(children))
                                            : Butvpi::disjunction(std::move(children));
    }
  }
  return f;
}

}  // namespace

CFormula CFormula::rename(int from, int to) const {
  if (!is_conjunction()) return boolean(rename_tree(tree(), from, to));
  std::vector<Utvpi> renamed;
  for (const auto& u : atoms()) renamed.push_back(rename_atom(u, from, to));
  return conjunction(std::move(renamed));
}

std::string CFormula::to_string() const {
  if (!is_conjunction()) return tree().to_string();
  if (atoms().empty()) return "0 <= 0";
  std::string out;
  for (std::size_t k = 0; k < atoms().size(); ++k) {
    if (k > 0) out += " & ";
    out += atoms()[k].to_string();
  }
  return out;
}

std::string CFormula::to_pretty_string() const {
  if (!is_conjunction()) return tree().to_string();
  std::string out;
  for (std::size_t k = 0; k < atoms().size(); ++k) {
    if (k > 0) out += " & ";
    out += atoms()[k].to_pretty_string();
  }
  return out;
}

std::strong_ordering operator<=>(const CFormula& lhs, const CFormula& rhs) {
  if (auto c = lhs.mode() <=> rhs.mode(); c != 0) return c;
  if (lhs.is_conjunction()) {
    const auto& l = lhs.atoms();
    const auto& r = rhs.atoms();
    return std::lexicographical_compare_three_way(l.begin(), l.end(), r.begin(), r.end());
  }
  return lhs.tree() <=> rhs.tree();
}

CFormula negate_cformula(const CFormula& f) {
  if (!f.is_conjunction()) {
    if (f.tree().kind() == Butvpi::Kind::kNot) return CFormula::boolean(f.tree().children().front());
    return CFormula::boolean(Butvpi::negation(f.tree()));
  }
  if (f.atoms().size() != 1) {
    throw Error(Errc::kNegationNotSingleAtom,
                "cannot negate '" + f.to_string() +
                    "' in utvpi mode: the negation of a conjunction is not a UTVPI set "
                    "(use 'mode butvpi')");
  }
  return CFormula::single(negate_utvpi(f.atoms().front()));
}

}  // namespace hdec
