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

// Text front end for problems. One declaration per line, '#' starts a
// comment:
//
//   schema Emp(x:3, y:2)
//   mode utvpi
//   cdc: x2 = "ICT" -> y1 + y2 <= 5
//   view V2: y2 < 4
//   view V4: x1 = a | y1 > 0
//   uind: Emp[x1] <= Emp[x2]
//   fd: {3} -> {4}
//   domain: x1 in {a, b}
//
// parse_problem returns the fully desugared Problem.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hdec/model.hpp"

namespace hdec {

// Throws ParseError (with line and column) for syntax errors and Error for
// semantic ones (kArity, kUnknownVariable, kModeViolation, ...).
// `mode_override` replaces the file's mode line.
Problem parse_problem(std::string_view text,
                      std::optional<LanguageMode> mode_override = std::nullopt);

// Canonical DSL text; parse_problem(print_problem(p)) == p for every
// desugared problem.
std::string print_problem(const Problem& p);

}  // namespace hdec
