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

#include "hdec/encoding.hpp"

#include <algorithm>
#include <limits>

#include "hdec/error.hpp"

namespace hdec {

std::string PosConst::to_string() const {
  return "p" + std::to_string(position) + "^" + constant.name();
}

std::string CVar::to_string() const {
  return (primed ? "v'" : "v") + std::to_string(id);
}

namespace {

std::string prop_lhs(const BoolExpr& e) {
  switch (e.kind()) {
    case BoolExpr::Kind::kTrue:
      return "top";
    case BoolExpr::Kind::kAtom: {
      PosConst p{e.eq_atom().position, e.eq_atom().constant};
      return (e.eq_atom().equal ? "" : "!") + p.to_string();
    }
    case BoolExpr::Kind::kNot:
      return "!(" + prop_lhs(e.children().front()) + ")";
    case BoolExpr::Kind::kAnd:
    case BoolExpr::Kind::kOr: {
      std::string sep = e.kind() == BoolExpr::Kind::kAnd ? " & " : " | ";
      std::string out;
      for (std::size_t k = 0; k < e.children().size(); ++k) {
        const auto& c = e.children()[k];
        bool wrap = c.kind() == BoolExpr::Kind::kAnd || c.kind() == BoolExpr::Kind::kOr;
        if (k > 0) out += sep;
        out += wrap ? "(" + prop_lhs(c) + ")" : prop_lhs(c);
      }
      return out;
    }
  }
  return {};
}

void add_vars(const BoolExpr& lhs, std::set<PosConst>& out) {
  std::vector<EqAtom> atoms;
  lhs.collect_atoms(atoms);
  for (const auto& a : atoms) out.insert(PosConst{a.position, a.constant});
}

}  // namespace

std::string PropFormula::to_string() const {
  return prop_lhs(lhs) + " -> " + (rhs ? rhs->to_string() : std::string("bot"));
}

std::string PropTheory::to_string() const {
  std::string out;
  for (const auto& f : formulas) out += f.to_string() + "\n";
  return out;
}

std::string to_string(const Valuation& alpha) {
  std::string out = "{";
  bool first = true;
  for (const auto& [p, v] : alpha) {
    out += (first ? "" : ", ") + p.to_string() + ":" + (v ? "T" : "F");
    first = false;
  }
  return out + "}";
}

bool holds(const Valuation& alpha, const PosConst& p) {
  auto it = alpha.find(p);
  return it != alpha.end() && it->second;
}

bool eval_lhs(const BoolExpr& lhs, const Valuation& alpha) {
  return lhs.evaluate([&](int pos, const DomConstant& c) { return holds(alpha, {pos, c}); });
}

Encoding encode_cdcs(const std::vector<Cdc>& cdcs) {
  Encoding enc;
  int id = 0;
  for (const auto& c : cdcs) {
    CVar v{++id, false};
    enc.theory.formulas.push_back(PropFormula{c.antecedent, v});
    enc.theory.var_v.insert(v);
    add_vars(c.antecedent, enc.theory.var_p);
    enc.idf.emplace(v, c.consequent);
  }
  return enc;
}

Encoding encode_views(const std::vector<ViewDef>& views) {
  Encoding enc;
  int id = 0;
  for (const auto& view : views) {
    ++id;
    add_vars(view.x_condition, enc.theory.var_p);
    if (!view.y_condition) {
      enc.theory.formulas.push_back(PropFormula{view.x_condition, std::nullopt});
      continue;
    }
    CVar v{id, true};
    enc.theory.formulas.push_back(PropFormula{view.x_condition, v});
    enc.theory.var_v.insert(v);
    enc.idf.emplace(v, *view.y_condition);
  }
  return enc;
}

PropTheory merge(const PropTheory& a, const PropTheory& b) {
  PropTheory out = a;
  out.formulas.insert(out.formulas.end(), b.formulas.begin(), b.formulas.end());
  out.var_p.insert(b.var_p.begin(), b.var_p.end());
  out.var_v.insert(b.var_v.begin(), b.var_v.end());
  return out;
}

PropTheory aux_theory(const PropTheory& pi) {
  PropTheory aux;
  aux.var_p = pi.var_p;
  for (auto it = pi.var_p.begin(); it != pi.var_p.end(); ++it) {
    for (auto jt = std::next(it); jt != pi.var_p.end() && jt->position == it->position; ++jt) {
      aux.formulas.push_back(PropFormula{
          BoolExpr::conjunction({BoolExpr::atom({it->position, it->constant, true}),
                                 BoolExpr::atom({jt->position, jt->constant, true})}),
          std::nullopt});
    }
  }
  for (const auto& f : pi.formulas) {
    if (!f.rhs) aux.formulas.push_back(f);
  }
  return aux;
}

bool satisfies_theory(const PropTheory& theory, const Valuation& alpha) {
  // Only bottom-headed formulas constrain alpha; v variables are free.
  return std::all_of(theory.formulas.begin(), theory.formulas.end(), [&](const PropFormula& f) {
    return f.rhs || !eval_lhs(f.lhs, alpha);
  });
}

ValuationSpace::ValuationSpace(const std::set<PosConst>& var_p, PropTheory aux)
    : var_p_(var_p), aux_(std::move(aux)) {
  for (const auto& p : var_p_) {
    if (slots_.empty() || slots_.back().first != p.position) slots_.push_back({p.position, {}});
    slots_.back().second.push_back(p.constant);
  }
  for (const auto& [pos, consts] : slots_) {
    std::uint64_t radix = consts.size() + 1;
    if (size_ > std::numeric_limits<std::uint64_t>::max() / radix) {
      throw Error(Errc::kResourceLimit, "valuation space exceeds 2^64 candidates");
    }
    size_ *= radix;
  }
}

Valuation ValuationSpace::candidate(std::uint64_t index) const {
  Valuation alpha;
  for (const auto& p : var_p_) alpha.emplace(p, false);
  for (auto it = slots_.rbegin(); it != slots_.rend(); ++it) {
    std::uint64_t radix = it->second.size() + 1;
    std::uint64_t digit = index % radix;
    index /= radix;
    if (digit > 0) alpha[PosConst{it->first, it->second[digit - 1]}] = true;
  }
  return alpha;
}

std::optional<Valuation> ValuationSpace::admissible(std::uint64_t index) const {
  Valuation alpha = candidate(index);
  if (!satisfies_theory(aux_, alpha)) return std::nullopt;
  return alpha;
}

std::vector<Valuation> enumerate_valuations(const std::set<PosConst>& var_p,
                                            const PropTheory& aux) {
  ValuationSpace space(var_p, aux);
  std::vector<Valuation> out;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    if (auto alpha = space.admissible(i)) out.push_back(std::move(*alpha));
  }
  return out;
}

namespace {

void push_unique(std::vector<CFormula>& out, CFormula f) {
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
}

}  // namespace

std::vector<CFormula> alpha_filter_cdc(const PropTheory& pi_delta, const IdfMap& idf,
                                       const Valuation& alpha) {
  std::vector<CFormula> out;
  for (const auto& f : pi_delta.formulas) {
    if (!f.rhs || !eval_lhs(f.lhs, alpha)) continue;
    push_unique(out, idf.at(*f.rhs));
  }
  return out;
}

std::vector<CFormula> alpha_filter_views(const PropTheory& pi_sigma, const IdfMap& idf,
                                         const Valuation& alpha) {
  std::vector<CFormula> out;
  for (const auto& f : pi_sigma.formulas) {
    if (!f.rhs || !eval_lhs(f.lhs, alpha)) continue;
    push_unique(out, negate_cformula(idf.at(*f.rhs)));
  }
  return out;
}

}  // namespace hdec
