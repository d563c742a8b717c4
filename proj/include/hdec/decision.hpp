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

// Consistency, losslessness and global consistency, each decided by a sweep
// over admissible valuations with one theory check per valuation.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hdec/encoding.hpp"
#include "hdec/model.hpp"
#include "hdec/solver.hpp"

namespace hdec {

struct DecisionOptions {
  SolverOptions solver;
  // Worker threads for the valuation sweep; results do not depend on it.
  unsigned parallel = 1;
  // Admissible valuations recorded in a losslessness trace.
  std::size_t trace_limit = 64;
};

// One admissible valuation and the formula set it activates.
struct ValuationTrace {
  Valuation alpha;
  std::vector<CFormula> filtered;
  bool satisfiable = false;
};

struct ConsistencyVerdict {
  bool consistent = false;
  std::optional<Tuple> witness;
  Valuation valuation;  // the witness's valuation
  IntAssignment beta;
  std::vector<CFormula> filtered;
  std::uint64_t candidates = 0;  // size of the valuation space
};

struct LosslessnessVerdict {
  bool lossless = false;
  std::optional<Tuple> witness;
  Valuation valuation;
  IntAssignment beta;
  std::vector<CFormula> filtered;  // Pi^alpha of the witness
  std::uint64_t candidates = 0;
  // Counted only when the sweep ran to completion (lossless).
  std::uint64_t admissible = 0;
  std::vector<ValuationTrace> trace;  // first trace_limit admissible valuations
};

struct GlobalConsistencyVerdict {
  bool globally_consistent = false;
  std::optional<Valuation> failing;
  std::vector<CFormula> filtered;  // the unsatisfiable filtering
  std::vector<std::size_t> core;   // indices into `filtered`
  std::uint64_t candidates = 0;
};

ConsistencyVerdict check_consistency(const Schema& schema, const std::vector<Cdc>& cdcs,
                                     const DecisionOptions& opts = {});

// `cdcs` are the (possibly reduced) CDCs the views are checked against.
LosslessnessVerdict check_losslessness(const Schema& schema, const std::vector<ViewDef>& views,
                                       const std::vector<Cdc>& cdcs,
                                       const DecisionOptions& opts = {});

GlobalConsistencyVerdict check_global_consistency(const std::vector<Cdc>& cdcs,
                                                  const DecisionOptions& opts = {});

// x-position i gets the constant alpha makes true there, otherwise the
// reserved constant for i; y-position j gets beta(y_j). Throws
// Error(kAlphaViolatesUniqueValue) if alpha makes two constants true at one
// position.
Tuple build_witness_tuple(const Valuation& alpha, const IntAssignment& beta,
                          const Schema& schema);

}  // namespace hdec
