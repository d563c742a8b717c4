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

// Formulas over the interpreted (integer) positions: single UTVPI atoms,
// Boolean combinations of them, and the tagged CFormula used as CDC
// consequents and view selection conditions.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace hdec {

// y-variable index (1-based) to integer value. Variables absent from the map
// read as 0.
using IntAssignment = std::map<int, std::int64_t>;

std::int64_t value_of(const IntAssignment& beta, int var);

enum class LanguageMode { kUtvpi, kButvpi };

std::string to_string(LanguageMode mode);

// a*y_i + b*y_j <= d with a, b in {-1, 0, 1}. Index 0 marks an absent
// variable. Kept canonical: i < j when both are present; a lone variable
// sits in the (a, i) slot. a = b = 0 is the constant atom 0 <= d.
class Utvpi {
 public:
  // Canonicalizes. Throws Error(kCoefficientOutOfRange) for coefficients
  // outside {-1, 0, 1} and Error(kInvalidArgument) for a nonzero coefficient
  // on index 0 (or a nonpositive index).
  static Utvpi make(int a, int i, int b, int j, std::int64_t d);
  static Utvpi unary(int a, int i, std::int64_t d) { return make(a, i, 0, 0, d); }
  static Utvpi constant(std::int64_t d) { return make(0, 0, 0, 0, d); }

  int a() const { return a_; }
  int i() const { return i_; }
  int b() const { return b_; }
  int j() const { return j_; }
  std::int64_t d() const { return d_; }

  bool is_constant() const { return a_ == 0; }
  bool is_unary() const { return a_ != 0 && b_ == 0; }

  // Variables mentioned, ascending.
  std::vector<int> variables() const;

  bool evaluate(const IntAssignment& beta) const;

  // Canonical text, e.g. "y1 + y2 <= 5", "-y2 <= -4", "0 <= 3".
  std::string to_string() const;
  // Human-facing text; all-negative atoms are shown flipped ("y2 >= 4").
  std::string to_pretty_string() const;

  friend auto operator<=>(const Utvpi&, const Utvpi&) = default;

 private:
  Utvpi(int a, int i, int b, int j, std::int64_t d) : a_(a), i_(i), b_(b), j_(j), d_(d) {}

  int a_ = 0;
  int i_ = 0;
  int b_ = 0;
  int j_ = 0;
  std::int64_t d_ = 0;
};

enum class Comparison { kLe, kGe, kLt, kGt, kEq };

// Rewrites a*y_i + b*y_j (op) d into canonical <= atoms: >= flips signs, <
// and > shift the bound by one, = yields the <=/>= pair.
std::vector<Utvpi> normalize_comparison(Comparison op, int a, int i, int b, int j,
                                        std::int64_t d);

// not(a*x + b*y <= d)  ==  -a*x - b*y <= -d - 1. An involution.
Utvpi negate_utvpi(const Utvpi& u);

// Boolean combination of UTVPI atoms.
class Butvpi {
 public:
  enum class Kind { kAtom, kNot, kAnd, kOr };

  static Butvpi atom(Utvpi u);
  static Butvpi negation(Butvpi f);
  static Butvpi conjunction(std::vector<Butvpi> children);
  static Butvpi disjunction(std::vector<Butvpi> children);

  Kind kind() const { return node_->kind; }
  const Utvpi& utvpi() const { return node_->atom; }
  const std::vector<Butvpi>& children() const { return node_->children; }

  bool evaluate(const IntAssignment& beta) const;
  void collect_atoms(std::vector<Utvpi>& out) const;
  std::set<int> variables() const;
  std::string to_string() const;

  friend bool operator==(const Butvpi& lhs, const Butvpi& rhs);
  friend std::strong_ordering operator<=>(const Butvpi& lhs, const Butvpi& rhs);

 private:
  struct Node {
    Kind kind = Kind::kAtom;
    Utvpi atom = Utvpi::constant(0);
    std::vector<Butvpi> children;
  };
  explicit Butvpi(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Either a conjunction of UTVPI atoms (UTVPI mode) or a BUTVPI tree.
class CFormula {
 public:
  static CFormula conjunction(std::vector<Utvpi> atoms);
  static CFormula single(Utvpi atom) { return conjunction({atom}); }
  static CFormula boolean(Butvpi tree);

  LanguageMode mode() const {
    return std::holds_alternative<Butvpi>(body_) ? LanguageMode::kButvpi : LanguageMode::kUtvpi;
  }
  bool is_conjunction() const { return mode() == LanguageMode::kUtvpi; }
  const std::vector<Utvpi>& atoms() const { return std::get<std::vector<Utvpi>>(body_); }
  const Butvpi& tree() const { return std::get<Butvpi>(body_); }

  // The same formula as a BUTVPI tree (a conjunction is wrapped).
  Butvpi as_butvpi() const;

  bool evaluate(const IntAssignment& beta) const;
  std::set<int> variables() const;
  // Renames every occurrence of variable `from` to `to`.
  CFormula rename(int from, int to) const;

  std::string to_string() const;
  std::string to_pretty_string() const;

  friend bool operator==(const CFormula&, const CFormula&) = default;
  friend std::strong_ordering operator<=>(const CFormula& lhs, const CFormula& rhs);

 private:
  explicit CFormula(std::variant<std::vector<Utvpi>, Butvpi> body) : body_(std::move(body)) {}

  std::variant<std::vector<Utvpi>, Butvpi> body_;
};

// UTVPI mode: negation of a single atom. BUTVPI: strips or adds a Not node.
// Throws Error(kNegationNotSingleAtom) for a UTVPI-mode conjunction of two or
// more atoms.
CFormula negate_cformula(const CFormula& f);

}  // namespace hdec
