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

// Reduction of CDCs + FDs + UINDs to plain CDCs where a separability theorem
// applies, and the copy-and-repair completion of single-tuple witnesses.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdec/decision.hpp"
#include "hdec/model.hpp"

namespace hdec {

enum class TheoremTag { kFdOnly, kYUindDp, kXUindGc, kXUindDisj, kUindGc, kUindDisj, kXfdYxfdYuind };

std::string to_string(TheoremTag tag);

struct DpCheck {
  bool controllable = true;
  std::optional<std::size_t> cdc;  // offending CDC index
  std::optional<Uind> uind;
  std::string explanation;
};

// Every CDC mentioning y_i or y_j of a Y-UIND R[y_i] <= R[y_j] (i != j) must
// be  top -> delta(y)  with y its only variable.
DpCheck check_dp_controllable(const Schema& schema, const std::vector<Cdc>& cdcs,
                              const std::vector<Uind>& yuinds);

// Least fixpoint of the domain propagation rule: top -> delta(y_i) and
// R[y_j] <= R[y_i] give top -> delta(y_j). Structural duplicates are skipped.
// Throws Error(kNotDpControllable).
std::vector<Cdc> dp_closure(const Schema& schema, const std::vector<Cdc>& cdcs,
                            const std::vector<Uind>& yuinds);

struct DisjointCheck {
  bool disjoint = true;
  std::optional<std::size_t> first;   // CDC whose antecedent mentions x_j
  std::optional<std::size_t> second;  // partner sharing a y-variable, if any
  std::string explanation;
};

// Disjointness w.r.t. R[x_i] <= R[x_j]. A CDC mentioning x_j must have a
// satisfiable consequent even when it has no partner.
DisjointCheck check_disjoint(const std::vector<Cdc>& cdcs, const Uind& xuind,
                             const SolverOptions& opts = {});

struct SeparabilityOutcome {
  bool supported = false;
  TheoremTag tag = TheoremTag::kFdOnly;
  std::vector<Cdc> cdcs;  // reduced CDCs when supported
  std::string reason;     // first failed precondition otherwise
  std::vector<std::string> notes;

  std::vector<Uind> xuinds;  // non-trivial, classified
  std::vector<Uind> yuinds;
  std::optional<bool> globally_consistent;  // set when the check ran
  std::optional<bool> disjoint;
  std::optional<GlobalConsistencyVerdict> gc;
};

// Total and deterministic; Unsupported is a value, never an exception.
SeparabilityOutcome separability_pipeline(const Problem& p, const DecisionOptions& opts = {});

// Superset of `inst` satisfying `cdcs` and every UIND: X-UIND violations are
// repaired first (copy the constant, re-solve the interpreted values), then
// Y-UIND violations (copy the value). Throws Error(kPreconditionViolated) if
// a repair has no solution, the tuple bound is exceeded or the result fails
// the final check.
Instance extend_to_uind_model(const Schema& schema, const Instance& inst,
                              const std::vector<Cdc>& cdcs, const std::vector<Uind>& uinds,
                              const SolverOptions& opts = {});

}  // namespace hdec
