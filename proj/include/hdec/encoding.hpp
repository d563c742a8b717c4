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

// Propositional abstraction of CDCs and views: each equality x_i = a becomes
// the variable p_i^a, each consequent / selection condition a fresh v
// variable whose meaning lives in the idf map.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hdec/model.hpp"

namespace hdec {

// p_i^a
struct PosConst {
  int position = 1;
  DomConstant constant;

  std::string to_string() const;
  friend auto operator<=>(const PosConst&, const PosConst&) = default;
};

// v_id for CDCs, v'_id (primed) for views.
struct CVar {
  int id = 0;
  bool primed = false;

  std::string to_string() const;
  friend auto operator<=>(const CVar&, const CVar&) = default;
};

// lhs -> rhs. The lhs reuses BoolExpr: the atom x_i = a stands for p_i^a.
// An empty rhs is bottom.
struct PropFormula {
  BoolExpr lhs = BoolExpr::top();
  std::optional<CVar> rhs;

  std::string to_string() const;
  friend bool operator==(const PropFormula&, const PropFormula&) = default;
};

struct PropTheory {
  std::vector<PropFormula> formulas;
  std::set<PosConst> var_p;
  std::set<CVar> var_v;

  std::string to_string() const;
};

using IdfMap = std::map<CVar, CFormula>;

// Truth values of p-variables; variables not in the map are false.
using Valuation = std::map<PosConst, bool>;

std::string to_string(const Valuation& alpha);
bool holds(const Valuation& alpha, const PosConst& p);
bool eval_lhs(const BoolExpr& lhs, const Valuation& alpha);

struct Encoding {
  PropTheory theory;
  IdfMap idf;
};

Encoding encode_cdcs(const std::vector<Cdc>& cdcs);
// v'_i is numbered by the view's position in `views` (1-based).
Encoding encode_views(const std::vector<ViewDef>& views);
PropTheory merge(const PropTheory& a, const PropTheory& b);

// Unique-value axioms over var_p plus every bottom-headed formula of `pi`.
PropTheory aux_theory(const PropTheory& pi);

bool satisfies_theory(const PropTheory& theory, const Valuation& alpha);

// Candidate valuations as a mixed-radix product: per mentioned position
// (ascending) either no constant or exactly one (ascending by name), the
// first position being the most significant digit. Index 0 is the all-false
// valuation.
class ValuationSpace {
 public:
  ValuationSpace(const std::set<PosConst>& var_p, PropTheory aux);

  // Throws Error(kResourceLimit) when the product does not fit in 64 bits.
  std::uint64_t size() const { return size_; }
  Valuation candidate(std::uint64_t index) const;
  // The candidate if it satisfies the aux theory.
  std::optional<Valuation> admissible(std::uint64_t index) const;

  const std::set<PosConst>& var_p() const { return var_p_; }

 private:
  std::set<PosConst> var_p_;
  PropTheory aux_;
  std::vector<std::pair<int, std::vector<DomConstant>>> slots_;
  std::uint64_t size_ = 1;
};

// Every admissible valuation, in index order.
std::vector<Valuation> enumerate_valuations(const std::set<PosConst>& var_p,
                                            const PropTheory& aux);

// {idf(v) : (P -> v) in theory, alpha(P) true}, first occurrence order,
// duplicates removed.
std::vector<CFormula> alpha_filter_cdc(const PropTheory& pi_delta, const IdfMap& idf,
                                       const Valuation& alpha);
// {not idf(v') : (P -> v') in theory, alpha(P) true, v' not bottom}. Throws
// Error(kNegationNotSingleAtom) for a UTVPI-mode conjunctive condition.
std::vector<CFormula> alpha_filter_views(const PropTheory& pi_sigma, const IdfMap& idf,
                                         const Valuation& alpha);

}  // namespace hdec
