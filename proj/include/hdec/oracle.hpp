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

// Deliberately naive reference semantics used to cross-check the decision
// procedures, plus the SAT / UNSAT reductions as problem generators.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hdec/decision.hpp"
#include "hdec/model.hpp"
#include "hdec/solver.hpp"

namespace hdec {

// (v + 1) * (D + 1) where v counts the variables mentioned and D is the
// largest |d|, plus one to cover negated atoms.
std::int64_t small_model_bound(std::span<const CFormula> formulas);
std::int64_t small_model_bound(const std::vector<Cdc>& cdcs, const std::vector<ViewDef>& views);

// Exhaustive search of [-B, B]^v over the mentioned variables.
SatResult brute_force_cformula_sat(std::span<const CFormula> formulas, std::int64_t bound);

// Every problem constant plus the reserved constant of each x-position.
std::vector<DomConstant> default_const_pool(const Schema& schema, const Problem& p);
std::vector<DomConstant> default_const_pool(const Schema& schema, const std::vector<Cdc>& cdcs,
                                            const std::vector<ViewDef>& views);

// Single tuples over pool^k x [-B, B]^m. Views are evaluated directly and
// never negated syntactically.
ConsistencyVerdict brute_force_consistency(const Schema& schema, const std::vector<Cdc>& cdcs,
                                           const std::vector<DomConstant>& pool,
                                           std::int64_t bound);
LosslessnessVerdict brute_force_losslessness(const Schema& schema,
                                             const std::vector<ViewDef>& views,
                                             const std::vector<Cdc>& cdcs,
                                             const std::vector<DomConstant>& pool,
                                             std::int64_t bound);

// Every x-tuple over the pool admits interpreted values in [-B, B]^m.
GlobalConsistencyVerdict brute_force_global_consistency(const Schema& schema,
                                                        const std::vector<Cdc>& cdcs,
                                                        const std::vector<DomConstant>& pool,
                                                        std::int64_t bound);

// Calls `visit` for every instance of at most `max_tuples` tuples over the
// bounded universe that satisfies every CDC, FD and UIND of `p` (the empty
// instance included). Stops early when `visit` returns false.
void brute_force_instance_models(const Problem& p, int max_tuples,
                                 const std::vector<DomConstant>& pool, std::int64_t bound,
                                 const std::function<bool(const Instance&)>& visit);

// CNF with DIMACS literals: +i is L_i, -i is its negation.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// Throws ParseError.
Cnf parse_dimacs(std::string_view text);
std::string print_dimacs(const Cnf& cnf);
bool truth_table_sat(const Cnf& cnf);

inline constexpr const char* kSatConstant = "sat_a";

// Schema (x:n, y:1); per clause C the CDC
//   (x_i != sat_a for L_i in C) & (x_i = sat_a for !L_i in C) -> y1 > 0
// plus  top -> y1 <= 0. Consistent iff the CNF is satisfiable.
Problem sat_to_consistency(const Cnf& cnf);
// The clause CDCs and the single view V: y1 > 0. Lossless iff the CNF is
// unsatisfiable.
Problem unsat_to_losslessness(const Cnf& cnf);

}  // namespace hdec
