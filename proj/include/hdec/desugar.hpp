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

// Rewrites that bring user-level constraints into the shapes the decision
// procedures consume.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdec/model.hpp"

namespace hdec {

// One CDC per conjunct of a UTVPI-mode consequent, all sharing the
// antecedent. BUTVPI consequents pass through unchanged; a CDC with an empty
// (always true) consequent is dropped.
std::vector<Cdc> split_conjunctive_cdc(const Cdc& c);

// A view as written by the user: `x_condition & y_condition` or
// `x_condition | y_condition`.
struct ViewSpec {
  enum class Join { kAnd, kOr };

  std::string name;
  BoolExpr x_condition = BoolExpr::top();
  std::optional<CFormula> y_condition;
  Join join = Join::kAnd;
};

// `λ | σ` becomes the two views name' : λ and name'' : σ; `λ & σ` stays a
// single view.
std::vector<ViewDef> split_disjunctive_view(const ViewSpec& v);

// The condition y1 <= 0 used by desugar_domain_constraint.
Utvpi domain_constraint_delta();

// x_i in {a_1..a_p} as the pair  (x_i != a_1 & ... ) -> delta  and
// (x_i != a_1 & ...) -> !delta. Throws Error(kNoInterpretedPosition) when the
// schema has no interpreted position.
std::pair<Cdc, Cdc> desugar_domain_constraint(const Schema& schema, int position,
                                              const std::vector<DomConstant>& constants,
                                              LanguageMode mode);

}  // namespace hdec
