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

#include "hdec/parser.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "hdec/desugar.hpp"
#include "hdec/error.hpp"

namespace hdec {
namespace {

using Int = __int128;

enum class Tok {
  kIdent, kInt, kString,
  kLParen, kRParen, kLBracket, kRBracket, kLBrace, kRBrace,
  kComma, kColon, kAmp, kBar, kBang, kPlus, kMinus, kStar,
  kEq, kNe, kLe, kGe, kLt, kGt, kArrow, kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  Int value = 0;
  std::size_t line = 0;
  std::size_t col = 0;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '.' || c == '\'' || c >= 0x80;
}

std::vector<Token> lex_line(std::string_view s, std::size_t line) {
  std::vector<Token> out;
  std::size_t p = 0;
  auto push = [&](Tok k, std::size_t start, std::size_t len) {
    out.push_back(Token{k, std::string(s.substr(start, len)), 0, line, start + 1});
    p = start + len;
  };
  while (p < s.size()) {
    unsigned char c = s[p];
    if (std::isspace(c)) {
      ++p;
      continue;
    }
    if (c == '#') break;
    std::size_t start = p;
    if (ident_start(c)) {
      while (p < s.size() && ident_char(s[p])) ++p;
      out.push_back(Token{Tok::kIdent, std::string(s.substr(start, p - start)), 0, line, start + 1});
      continue;
    }
    if (std::isdigit(c)) {
      Int v = 0;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
        v = v * 10 + (s[p] - '0');
        if (v > (Int(1) << 80)) {
          throw Error(Errc::kBoundOverflow,
                      "line " + std::to_string(line) + ": integer literal out of range");
        }
        ++p;
      }
      Token t{Tok::kInt, std::string(s.substr(start, p - start)), v, line, start + 1};
      out.push_back(t);
      continue;
    }
    if (c == '"') {
      std::string text;
      ++p;
      bool closed = false;
      while (p < s.size()) {
        if (s[p] == '\\' && p + 1 < s.size()) {
          text += s[p + 1];
          p += 2;
        } else if (s[p] == '"') {
          ++p;
          closed = true;
          break;
        } else {
          text += s[p++];
        }
      }
      if (!closed) throw ParseError(line, start + 1, "unterminated string");
      out.push_back(Token{Tok::kString, text, 0, line, start + 1});
      continue;
    }
    auto two = [&](char a, char b) { return c == a && p + 1 < s.size() && s[p + 1] == b; };
    if (two('-', '>')) push(Tok::kArrow, start, 2);
    else if (two('<', '=')) push(Tok::kLe, start, 2);
    else if (two('>', '=')) push(Tok::kGe, start, 2);
    else if (two('!', '=')) push(Tok::kNe, start, 2);
    else if (two('=', '=')) push(Tok::kEq, start, 2);
    else if (two('&', '&')) push(Tok::kAmp, start, 2);
    else if (two('|', '|')) push(Tok::kBar, start, 2);
    else {
      static const std::map<char, Tok> kSingle = {
          {'(', Tok::kLParen}, {')', Tok::kRParen}, {'[', Tok::kLBracket},
          {']', Tok::kRBracket}, {'{', Tok::kLBrace}, {'}', Tok::kRBrace},
          {',', Tok::kComma}, {':', Tok::kColon}, {'&', Tok::kAmp},
          {'|', Tok::kBar}, {'!', Tok::kBang}, {'+', Tok::kPlus},
          {'-', Tok::kMinus}, {'*', Tok::kStar}, {'=', Tok::kEq},
          {'<', Tok::kLt}, {'>', Tok::kGt}};
      auto it = kSingle.find(static_cast<char>(c));
      if (it == kSingle.end()) {
        throw ParseError(line, start + 1, std::string("unexpected character '") +
                                              static_cast<char>(c) + "'");
      }
      push(it->second, start, 1);
    }
  }
  out.push_back(Token{Tok::kEnd, "", 0, line, s.size() + 1});
  return out;
}

// x<n> / y<n>; returns 0 when `s` is not of that shape.
int var_index(const std::string& s, char prefix) {
  if (s.size() < 2 || s[0] != prefix) return 0;
  long long v = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return 0;
    v = v * 10 + (s[k] - '0');
    if (v > 1000000) return 0;
  }
  return v == 0 ? 0 : static_cast<int>(v);
}

enum class CmpOp { kLe, kGe, kLt, kGt, kEq, kNe };

CmpOp flip(CmpOp op) {
  switch (op) {
    case CmpOp::kLe: return CmpOp::kGt;
    case CmpOp::kGe: return CmpOp::kLt;
    case CmpOp::kLt: return CmpOp::kGe;
    case CmpOp::kGt: return CmpOp::kLe;
    case CmpOp::kEq: return CmpOp::kNe;
    case CmpOp::kNe: return CmpOp::kEq;
  }
  return op;
}

// Parse tree shared by CDC sides and view conditions.
struct Expr {
  enum class Kind { kTop, kX, kCmp, kNot, kAnd, kOr };
  Kind kind = Kind::kTop;
  std::size_t line = 0;
  std::size_t col = 0;
  // kX
  int position = 0;
  std::string constant;
  bool equal = true;
  // kCmp: sum coef[v]*y_v (op) rhs
  std::map<int, Int> coef;
  Int rhs = 0;
  CmpOp op = CmpOp::kLe;
  std::vector<std::shared_ptr<Expr>> children;
};
using ExprPtr = std::shared_ptr<Expr>;

enum class Side { kNone, kX, kY, kMixed };

Side join(Side a, Side b) {
  if (a == Side::kNone) return b;
  if (b == Side::kNone) return a;
  return a == b ? a : Side::kMixed;
}

Side side_of(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kTop: return Side::kNone;
    case Expr::Kind::kX: return Side::kX;
    case Expr::Kind::kCmp: return Side::kY;
    default: break;
  }
  Side s = Side::kNone;
  for (const auto& c : e.children) s = join(s, side_of(*c));
  return s;
}

class LineParser {
 public:
  explicit LineParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string near = t.kind == Tok::kEnd ? "end of line" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, msg + " near " + near);
  }
  bool at_end() const { return peek().kind == Tok::kEnd; }

  Int integer() {
    bool neg = accept(Tok::kMinus);
    Int v = expect(Tok::kInt, "integer").value;
    return neg ? -v : v;
  }

  std::string constant() {
    const Token& t = peek();
    if (t.kind == Tok::kIdent || t.kind == Tok::kString || t.kind == Tok::kInt) {
      next();
      if (t.text.empty()) throw ParseError(t.line, t.col, "empty constant");
      if (is_reserved_constant(t.text)) {
        throw ParseError(t.line, t.col, "constant '" + t.text + "' uses the reserved prefix");
      }
      return t.text;
    }
    fail("expected a constant");
  }

  ExprPtr expr() { return disjunction(); }

 private:
  ExprPtr node(Expr::Kind k, const Token& at) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = at.line;
    e->col = at.col;
    return e;
  }

  ExprPtr disjunction() {
    const Token& at = peek();
    ExprPtr first = conjunction();
    if (peek().kind != Tok::kBar) return first;
    ExprPtr e = node(Expr::Kind::kOr, at);
    e->children.push_back(first);
    while (accept(Tok::kBar)) e->children.push_back(conjunction());
    return e;
  }

  ExprPtr conjunction() {
    const Token& at = peek();
    ExprPtr first = unary();
    if (peek().kind != Tok::kAmp) return first;
    ExprPtr e = node(Expr::Kind::kAnd, at);
    e->children.push_back(first);
    while (accept(Tok::kAmp)) e->children.push_back(unary());
    return e;
  }

  ExprPtr unary() {
    const Token& at = peek();
    if (accept(Tok::kBang)) {
      ExprPtr e = node(Expr::Kind::kNot, at);
      e->children.push_back(unary());
      return e;
    }
    if (accept(Tok::kLParen)) {
      ExprPtr inner = disjunction();
      expect(Tok::kRParen, "')'");
      return inner;
    }
    if (at.kind == Tok::kIdent && at.text == "top") {
      next();
      return node(Expr::Kind::kTop, at);
    }
    if (at.kind == Tok::kIdent && var_index(at.text, 'x') > 0) {
      next();
      ExprPtr e = node(Expr::Kind::kX, at);
      e->position = var_index(at.text, 'x');
      if (accept(Tok::kEq)) {
        e->equal = true;
      } else if (accept(Tok::kNe)) {
        e->equal = false;
      } else {
        fail("expected '=' or '!=' after " + at.text);
      }
      e->constant = constant();
      return e;
    }
    return comparison();
  }

  // Linear sum of unit-coefficient y terms and integer constants.
  void linear(std::map<int, Int>& coef, Int& constant_part, int sign) {
    bool first = true;
    while (true) {
      int s = sign;
      if (accept(Tok::kMinus)) {
        s = -s;
      } else if (!accept(Tok::kPlus) && !first) {
        break;
      }
      first = false;
      const Token& t = peek();
      if (t.kind == Tok::kInt) {
        next();
        if (accept(Tok::kStar)) {
          const Token& v = expect(Tok::kIdent, "y-variable after '*'");
          int idx = var_index(v.text, 'y');
          if (idx == 0) throw ParseError(v.line, v.col, "expected a y-variable, got '" + v.text + "'");
          coef[idx] += s * t.value;
        } else {
          constant_part += s * t.value;
        }
      } else if (t.kind == Tok::kIdent && var_index(t.text, 'y') > 0) {
        next();
        coef[var_index(t.text, 'y')] += s;
      } else if (t.kind == Tok::kIdent && var_index(t.text, 'x') > 0) {
        throw ParseError(t.line, t.col, "x-variable " + t.text + " cannot appear in arithmetic");
      } else {
        fail("expected a y-variable or integer");
      }
    }
  }

  ExprPtr comparison() {
    const Token& at = peek();
    ExprPtr e = node(Expr::Kind::kCmp, at);
    Int lhs_const = 0;
    linear(e->coef, lhs_const, 1);
    const Token& op = next();
    switch (op.kind) {
      case Tok::kLe: e->op = CmpOp::kLe; break;
      case Tok::kGe: e->op = CmpOp::kGe; break;
      case Tok::kLt: e->op = CmpOp::kLt; break;
      case Tok::kGt: e->op = CmpOp::kGt; break;
      case Tok::kEq: e->op = CmpOp::kEq; break;
      case Tok::kNe: e->op = CmpOp::kNe; break;
      default:
        throw ParseError(op.line, op.col, "expected a comparison operator");
    }
    Int rhs_const = 0;
    linear(e->coef, rhs_const, -1);
    // lhs - rhs (op) 0  ->  vars (op) rhs_const - lhs_const; linear() already
    // negated the rhs constant.
    e->rhs = -rhs_const - lhs_const;
    for (auto it = e->coef.begin(); it != e->coef.end();) {
      it = it->second == 0 ? e->coef.erase(it) : std::next(it);
    }
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---- conversion ----

std::string at(const Expr& e) {
  return "line " + std::to_string(e.line) + ":" + std::to_string(e.col);
}

class Converter {
 public:
  Converter(const Schema& schema, LanguageMode mode) : schema_(schema), mode_(mode) {}

  BoolExpr x_expr(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::kTop:
        return BoolExpr::top();
      case Expr::Kind::kX:
        if (!schema_.is_x_position(e.position)) {
          throw Error(Errc::kUnknownVariable, at(e) + ": x" + std::to_string(e.position) +
                                                  " is not a non-interpreted position (k = " +
                                                  std::to_string(schema_.k) + ")");
        }
        return BoolExpr::atom({e.position, DomConstant(e.constant), e.equal});
      case Expr::Kind::kNot:
        return BoolExpr::negation(x_expr(*e.children.front()));
      case Expr::Kind::kAnd:
      case Expr::Kind::kOr: {
        std::vector<BoolExpr> parts;
        for (const auto& c : e.children) parts.push_back(x_expr(*c));
        return e.kind == Expr::Kind::kAnd ? BoolExpr::conjunction(std::move(parts))
                                          : BoolExpr::disjunction(std::move(parts));
      }
      case Expr::Kind::kCmp:
        break;
    }
    throw ParseError(e.line, e.col, "integer comparison in a non-interpreted condition");
  }

  // Canonical atoms for a comparison, possibly negated. kNe yields two
  // alternatives (< and >); everything else one conjunction.
  std::vector<std::vector<Utvpi>> comparison(const Expr& e, bool negated) const {
    CmpOp op = negated ? flip(e.op) : e.op;
    int a = 0, i = 0, b = 0, j = 0;
    if (e.coef.size() > 2) {
      throw ParseError(e.line, e.col, "a comparison may mention at most two y-variables");
    }
    for (const auto& [v, c] : e.coef) {
      if (v > schema_.m) {
        throw Error(Errc::kUnknownVariable, at(e) + ": y" + std::to_string(v) +
                                                " is not an interpreted position (m = " +
                                                std::to_string(schema_.m) + ")");
      }
      if (c != 1 && c != -1) {
        throw Error(Errc::kCoefficientOutOfRange,
                    at(e) + ": coefficient of y" + std::to_string(v) + " is not in {-1, 0, 1}");
      }
      (a == 0 ? a : b) = static_cast<int>(c);
      (i == 0 ? i : j) = v;
    }
    if (e.rhs > INT64_MAX || e.rhs < INT64_MIN) {
      throw Error(Errc::kBoundOverflow, at(e) + ": bound does not fit in 64 bits");
    }
    auto d = static_cast<std::int64_t>(e.rhs);
    try {
      switch (op) {
        case CmpOp::kLe: return {normalize_comparison(Comparison::kLe, a, i, b, j, d)};
        case CmpOp::kGe: return {normalize_comparison(Comparison::kGe, a, i, b, j, d)};
        case CmpOp::kLt: return {normalize_comparison(Comparison::kLt, a, i, b, j, d)};
        case CmpOp::kGt: return {normalize_comparison(Comparison::kGt, a, i, b, j, d)};
        case CmpOp::kEq: return {normalize_comparison(Comparison::kEq, a, i, b, j, d)};
        case CmpOp::kNe:
          return {normalize_comparison(Comparison::kLt, a, i, b, j, d),
                  normalize_comparison(Comparison::kGt, a, i, b, j, d)};
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw Error(err.code(), at(e) + ": " + err.what());
    }
    return {};
  }

  // Disjunctive normal form of a y-side expression.
  std::vector<std::vector<Utvpi>> dnf(const Expr& e, bool negated) const {
    constexpr std::size_t kMaxDisjuncts = 1024;
    switch (e.kind) {
      case Expr::Kind::kTop:
        if (negated) return {};
        return {{}};
      case Expr::Kind::kCmp:
        return comparison(e, negated);
      case Expr::Kind::kNot:
        return dnf(*e.children.front(), !negated);
      case Expr::Kind::kAnd:
      case Expr::Kind::kOr: {
        bool product = (e.kind == Expr::Kind::kAnd) != negated;
        std::vector<std::vector<Utvpi>> acc;
        if (product) acc.push_back({});
        for (const auto& c : e.children) {
          auto part = dnf(*c, negated);
          if (product) {
            std::vector<std::vector<Utvpi>> next;
            for (const auto& l : acc) {
              for (const auto& r : part) {
                auto merged = l;
                merged.insert(merged.end(), r.begin(), r.end());
                next.push_back(std::move(merged));
              }
            }
            acc = std::move(next);
          } else {
            acc.insert(acc.end(), part.begin(), part.end());
          }
          if (acc.size() > kMaxDisjuncts) {
            throw Error(Errc::kResourceLimit, at(e) + ": condition expands to too many cases");
          }
        }
        return acc;
      }
      case Expr::Kind::kX:
        break;
    }
    throw ParseError(e.line, e.col, "non-interpreted atom in an integer condition");
  }

  Butvpi tree(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::kTop:
        return Butvpi::atom(Utvpi::constant(0));
      case Expr::Kind::kCmp: {
        auto alts = comparison(e, false);
        if (alts.size() == 2) {
          return Butvpi::disjunction({Butvpi::atom(alts[0][0]), Butvpi::atom(alts[1][0])});
        }
        std::vector<Butvpi> leaves;
        for (const auto& u : alts[0]) leaves.push_back(Butvpi::atom(u));
        return Butvpi::conjunction(std::move(leaves));
      }
      case Expr::Kind::kNot:
        return Butvpi::negation(tree(*e.children.front()));
      case Expr::Kind::kAnd:
      case Expr::Kind::kOr: {
        std::vector<Butvpi> parts;
        for (const auto& c : e.children) parts.push_back(tree(*c));
        return e.kind == Expr::Kind::kAnd ? Butvpi::conjunction(std::move(parts))
                                          : Butvpi::disjunction(std::move(parts));
      }
      case Expr::Kind::kX:
        break;
    }
    throw ParseError(e.line, e.col, "non-interpreted atom in an integer condition");
  }

  std::vector<Cdc> cdc(const Expr& lhs, const Expr& rhs) const {
    if (side_of(lhs) == Side::kY || side_of(lhs) == Side::kMixed) {
      throw ParseError(lhs.line, lhs.col, "a CDC antecedent may only mention x-variables");
    }
    if (side_of(rhs) == Side::kX || side_of(rhs) == Side::kMixed) {
      throw ParseError(rhs.line, rhs.col, "a CDC consequent may only mention y-variables");
    }
    BoolExpr ante = x_expr(lhs);
    if (mode_ == LanguageMode::kButvpi) return {Cdc{ante, CFormula::boolean(tree(rhs))}};
    auto cases = dnf(rhs, false);
    if (cases.size() != 1) {
      throw Error(Errc::kModeViolation,
                  at(rhs) + ": consequent is not a conjunction of UTVPI atoms; use 'mode butvpi'");
    }
    return split_conjunctive_cdc(Cdc{ante, CFormula::conjunction(cases.front())});
  }

  std::vector<ViewDef> view(const std::string& name, const ExprPtr& body) const {
    ViewSpec spec;
    spec.name = name;
    ExprPtr y;
    Side s = side_of(*body);
    if (s == Side::kNone || s == Side::kX) {
      spec.x_condition = x_expr(*body);
    } else if (s == Side::kY) {
      y = body;
    } else if (body->kind == Expr::Kind::kAnd || body->kind == Expr::Kind::kOr) {
      auto xs = std::make_shared<Expr>(*body);
      auto ys = std::make_shared<Expr>(*body);
      xs->children.clear();
      ys->children.clear();
      for (const auto& c : body->children) {
        Side cs = side_of(*c);
        if (cs == Side::kMixed) {
          throw ParseError(c->line, c->col,
                           "view conditions must have the form λ, σ, λ & σ or λ | σ");
        }
        (cs == Side::kY ? ys : xs)->children.push_back(c);
      }
      spec.x_condition = xs->children.size() == 1 ? x_expr(*xs->children.front()) : x_expr(*xs);
      y = ys->children.size() == 1 ? ys->children.front() : ys;
      spec.join = body->kind == Expr::Kind::kAnd ? ViewSpec::Join::kAnd : ViewSpec::Join::kOr;
    } else {
      throw ParseError(body->line, body->col,
                       "view conditions must have the form λ, σ, λ & σ or λ | σ");
    }
    if (!y) return split_disjunctive_view(spec);
    if (mode_ == LanguageMode::kButvpi) {
      spec.y_condition = CFormula::boolean(tree(*y));
      return split_disjunctive_view(spec);
    }
    auto cases = dnf(*y, false);
    if (cases.empty()) cases.push_back({Utvpi::constant(-1)});
    spec.y_condition = CFormula::conjunction(cases.front());
    std::vector<ViewDef> out;
    for (auto& v : split_disjunctive_view(spec)) {
      if (!v.y_condition || cases.size() == 1) {
        if (v.y_condition && v.y_condition->atoms().empty()) v.y_condition.reset();
        out.push_back(std::move(v));
        continue;
      }
      for (std::size_t n = 0; n < cases.size(); ++n) {
        ViewDef part{v.name + "." + std::to_string(n + 1), v.x_condition, std::nullopt};
        if (!cases[n].empty()) part.y_condition = CFormula::conjunction(cases[n]);
        out.push_back(std::move(part));
      }
    }
    return out;
  }

 private:
  Schema schema_;
  LanguageMode mode_;
};

struct Decl {
  enum class Kind { kCdc, kView, kDomain };
  Kind kind;
  std::size_t line;
  std::string name;
  ExprPtr lhs, rhs;
  int position = 0;
  std::vector<DomConstant> constants;
};

int position_ref(LineParser& lp, const Schema& schema, bool schema_known) {
  const Token& t = lp.peek();
  if (t.kind == Tok::kInt) {
    lp.next();
    return static_cast<int>(std::min<Int>(t.value, 1 << 30));
  }
  if (t.kind == Tok::kIdent) {
    if (int x = var_index(t.text, 'x'); x > 0) {
      lp.next();
      return x;
    }
    if (int y = var_index(t.text, 'y'); y > 0) {
      lp.next();
      if (!schema_known) throw ParseError(t.line, t.col, "schema must precede " + t.text);
      return schema.k + y;
    }
  }
  lp.fail("expected a position");
}

}  // namespace

Problem parse_problem(std::string_view text, std::optional<LanguageMode> mode_override) {
  Problem p;
  bool have_schema = false;
  std::optional<LanguageMode> mode;
  std::vector<Decl> decls;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    start = end + 1;

    LineParser lp(lex_line(raw, line_no));
    if (lp.at_end()) continue;
    const Token head = lp.next();
    if (head.kind != Tok::kIdent) throw ParseError(head.line, head.col, "expected a declaration");
    const std::string& kw = head.text;

    if (kw == "schema") {
      if (have_schema) throw ParseError(head.line, head.col, "duplicate schema line");
      std::string name = lp.expect(Tok::kIdent, "relation name").text;
      lp.expect(Tok::kLParen, "'('");
      int k = -1, m = -1;
      for (int n = 0; n < 2; ++n) {
        if (n == 1) lp.expect(Tok::kComma, "','");
        const Token& which = lp.expect(Tok::kIdent, "'x' or 'y'");
        lp.expect(Tok::kColon, "':'");
        Int v = lp.integer();
        if (v < 0 || v > 100000) throw Error(Errc::kArity, "line " + std::to_string(line_no) + ": bad arity");
        if (which.text == "x" && k < 0) {
          k = static_cast<int>(v);
        } else if (which.text == "y" && m < 0) {
          m = static_cast<int>(v);
        } else {
          throw ParseError(which.line, which.col, "expected 'x:' and 'y:' once each");
        }
      }
      lp.expect(Tok::kRParen, "')'");
      p.schema = Schema::make(name, k, m);
      have_schema = true;
    } else if (kw == "mode") {
      if (mode) throw ParseError(head.line, head.col, "duplicate mode line");
      const Token& t = lp.expect(Tok::kIdent, "'utvpi' or 'butvpi'");
      if (t.text == "utvpi") mode = LanguageMode::kUtvpi;
      else if (t.text == "butvpi") mode = LanguageMode::kButvpi;
      else throw ParseError(t.line, t.col, "unknown mode '" + t.text + "'");
    } else if (kw == "cdc") {
      lp.expect(Tok::kColon, "':'");
      Decl d{Decl::Kind::kCdc, line_no, {}, lp.expr(), nullptr, 0, {}};
      lp.expect(Tok::kArrow, "'->'");
      d.rhs = lp.expr();
      if (!lp.at_end()) lp.fail("unexpected trailing input");
      decls.push_back(std::move(d));
    } else if (kw == "view") {
      std::string name = lp.expect(Tok::kIdent, "view name").text;
      lp.expect(Tok::kColon, "':'");
      Decl d{Decl::Kind::kView, line_no, name, lp.expr(), nullptr, 0, {}};
      if (!lp.at_end()) lp.fail("unexpected trailing input");
      decls.push_back(std::move(d));
    } else if (kw == "domain") {
      lp.expect(Tok::kColon, "':'");
      const Token& v = lp.expect(Tok::kIdent, "x-variable");
      int pos = var_index(v.text, 'x');
      if (pos == 0) throw ParseError(v.line, v.col, "expected an x-variable");
      const Token& in = lp.expect(Tok::kIdent, "'in'");
      if (in.text != "in") throw ParseError(in.line, in.col, "expected 'in'");
      lp.expect(Tok::kLBrace, "'{'");
      Decl d{Decl::Kind::kDomain, line_no, {}, nullptr, nullptr, pos, {}};
      do {
        d.constants.emplace_back(lp.constant());
      } while (lp.accept(Tok::kComma));
      lp.expect(Tok::kRBrace, "'}'");
      if (!lp.at_end()) lp.fail("unexpected trailing input");
      decls.push_back(std::move(d));
    } else if (kw == "uind") {
      lp.expect(Tok::kColon, "':'");
      int sides[2];
      for (int n = 0; n < 2; ++n) {
        if (n == 1) lp.expect(Tok::kLe, "'<='");
        const Token& rel = lp.expect(Tok::kIdent, "relation name");
        if (!have_schema) throw ParseError(rel.line, rel.col, "schema must precede uind");
        if (rel.text != p.schema.relation_name && rel.text != "R") {
          throw ParseError(rel.line, rel.col, "unknown relation '" + rel.text + "'");
        }
        lp.expect(Tok::kLBracket, "'['");
        sides[n] = position_ref(lp, p.schema, have_schema);
        lp.expect(Tok::kRBracket, "']'");
      }
      if (!lp.at_end()) lp.fail("unexpected trailing input");
      p.uinds.push_back(Uind{sides[0], sides[1]});
    } else if (kw == "fd") {
      lp.expect(Tok::kColon, "':'");
      Fd f;
      for (int n = 0; n < 2; ++n) {
        if (n == 1) lp.expect(Tok::kArrow, "'->'");
        lp.expect(Tok::kLBrace, "'{'");
        auto& target = n == 0 ? f.lhs : f.rhs;
        if (lp.peek().kind != Tok::kRBrace) {
          do {
            target.insert(position_ref(lp, p.schema, have_schema));
          } while (lp.accept(Tok::kComma));
        }
        lp.expect(Tok::kRBrace, "'}'");
      }
      if (!lp.at_end()) lp.fail("unexpected trailing input");
      p.fds.push_back(std::move(f));
    } else {
      throw ParseError(head.line, head.col, "unknown declaration '" + kw + "'");
    }
  }

  if (!have_schema) throw ParseError(1, 1, "missing schema line");
  p.mode = mode_override.value_or(mode.value_or(LanguageMode::kUtvpi));
  Converter conv(p.schema, p.mode);
  for (const auto& d : decls) {
    switch (d.kind) {
      case Decl::Kind::kCdc:
        for (auto& c : conv.cdc(*d.lhs, *d.rhs)) p.cdcs.push_back(std::move(c));
        break;
      case Decl::Kind::kView:
        for (auto& v : conv.view(d.name, d.lhs)) p.views.push_back(std::move(v));
        break;
      case Decl::Kind::kDomain: {
        try {
          auto [pos, neg] = desugar_domain_constraint(p.schema, d.position, d.constants, p.mode);
          p.cdcs.push_back(std::move(pos));
          p.cdcs.push_back(std::move(neg));
        } catch (const ParseError&) {
          throw;
        } catch (const Error& err) {
          throw Error(err.code(), "line " + std::to_string(d.line) + ": " + err.what());
        }
        break;
      }
    }
  }
  p.validate();
  return p;
}

std::string print_problem(const Problem& p) {
  std::ostringstream out;
  out << "schema " << p.schema.relation_name << "(x:" << p.schema.k << ", y:" << p.schema.m
      << ")\n";
  out << "mode " << to_string(p.mode) << "\n";
  for (const auto& c : p.cdcs) {
    out << "cdc: " << c.antecedent.to_string() << " -> " << c.consequent.to_string() << "\n";
  }
  for (const auto& v : p.views) {
    out << "view " << v.name << ": ";
    if (!v.y_condition) {
      out << v.x_condition.to_string();
    } else if (v.x_condition.is_top()) {
      out << v.y_condition->to_string();
    } else {
      out << v.x_condition.to_string() << " & " << v.y_condition->to_string();
    }
    out << "\n";
  }
  for (const auto& u : p.uinds) out << "uind: " << u.to_string(p.schema) << "\n";
  for (const auto& f : p.fds) out << "fd: " << f.to_string() << "\n";
  return out.str();
}

}  // namespace hdec
