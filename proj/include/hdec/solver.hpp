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

// Satisfiability of UTVPI conjunctions (polynomial) and of BUTVPI sets
// (Boolean search over atom polarities with the UTVPI procedure as theory).

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hdec/formula.hpp"

namespace hdec {

struct SatResult {
  bool sat = false;
  // Total over the input's variables when sat.
  IntAssignment model;
  // When unsat: indices into the input that are jointly unsatisfiable.
  std::vector<std::size_t> core;

  static SatResult satisfiable(IntAssignment m) { return {true, std::move(m), {}}; }
  static SatResult unsatisfiable(std::vector<std::size_t> c) { return {false, {}, std::move(c)}; }
};

struct SolverOptions {
  // Boolean search nodes before butvpi_sat gives up with kResourceLimit.
  std::uint64_t node_budget = 1'000'000;
  // Also run the theory check on partial branches (prunes early; the verdict
  // does not depend on it).
  bool eager_theory = true;
};

// Integer satisfiability of a conjunction. Throws Error(kBoundOverflow) only
// if every model needs a value outside int64.
SatResult utvpi_sat(std::span<const Utvpi> atoms);

// The core of an unsat answer lists every formula index (the search does not
// minimize). Throws Error(kResourceLimit) when the budget is exhausted.
SatResult butvpi_sat(std::span<const Butvpi> formulas, const SolverOptions& opts = {});

// Dispatches on the formulas' shape: all conjunctions go to utvpi_sat (the
// core is mapped back to formula indices), anything else to butvpi_sat.
SatResult solve(std::span<const CFormula> formulas, const SolverOptions& opts = {});

bool check_model(std::span<const Utvpi> atoms, const IntAssignment& beta);
bool check_model(std::span<const CFormula> formulas, const IntAssignment& beta);

}  // namespace hdec
