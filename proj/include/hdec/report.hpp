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

// Structured reports shared by the command-line tool and the Python module.
// Every report is an ordered JSON object so identical inputs serialize to
// identical bytes.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hdec/decision.hpp"
#include "hdec/separability.hpp"

namespace hdec {

using Json = nlohmann::ordered_json;

Json to_json(const Tuple& t);
Json to_json(const Valuation& alpha);
Json to_json(const std::vector<CFormula>& formulas);
Json to_json(const Instance& inst);

Json consistency_report(const ConsistencyVerdict& v);
Json global_consistency_report(const GlobalConsistencyVerdict& v);
Json separability_report(const Problem& p, const SeparabilityOutcome& s);
// `v` is null when the pipeline refused the problem.
Json losslessness_report(const Problem& p, const SeparabilityOutcome& s,
                         const LosslessnessVerdict* v);

}  // namespace hdec
