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

#include "hdec/desugar.hpp"

#include "hdec/error.hpp"

namespace hdec {

std::vector<Cdc> split_conjunctive_cdc(const Cdc& c) {
  if (!c.consequent.is_conjunction()) return {c};
  std::vector<Cdc> out;
  for (const auto& u : c.consequent.atoms()) {
    out.push_back(Cdc{c.antecedent, CFormula::single(u)});
  }
  return out;
}

std::vector<ViewDef> split_disjunctive_view(const ViewSpec& v) {
  if (v.join == ViewSpec::Join::kAnd || !v.y_condition) {
    return {ViewDef{v.name, v.x_condition, v.y_condition}};
  }
  return {ViewDef{v.name + "'", v.x_condition, std::nullopt},
          ViewDef{v.name + "''", BoolExpr::top(), v.y_condition}};
}

Utvpi domain_constraint_delta() { return Utvpi::unary(1, 1, 0); }

std::pair<Cdc, Cdc> desugar_domain_constraint(const Schema& schema, int position,
                                              const std::vector<DomConstant>& constants,
                                              LanguageMode mode) {
  if (schema.m < 1) {
    throw Error(Errc::kNoInterpretedPosition,
                "a domain constraint needs at least one interpreted position");
  }
  if (!schema.is_x_position(position)) {
    throw Error(Errc::kUnknownVariable,
                "domain constraint on x" + std::to_string(position) +
                    ", which is not a non-interpreted position");
  }
  if (constants.empty()) {
    throw Error(Errc::kInvalidArgument, "domain constraint needs at least one constant");
  }
  std::vector<BoolExpr> conjuncts;
  for (const auto& c : constants) conjuncts.push_back(BoolExpr::atom({position, c, false}));
  BoolExpr antecedent = BoolExpr::conjunction(std::move(conjuncts));

  Utvpi delta = domain_constraint_delta();
  if (mode == LanguageMode::kUtvpi) {
    return {Cdc{antecedent, CFormula::single(delta)},
            Cdc{antecedent, CFormula::single(negate_utvpi(delta))}};
  }
  Butvpi tree = Butvpi::atom(delta);
  return {Cdc{antecedent, CFormula::boolean(tree)},
          Cdc{antecedent, CFormula::boolean(Butvpi::negation(tree))}};
}

}  // namespace hdec
