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

#include "hdec/error.hpp"

namespace hdec {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kParse:
      return "ParseError";
    case Errc::kArity:
      return "ArityError";
    case Errc::kUnknownVariable:
      return "UnknownVariable";
    case Errc::kModeViolation:
      return "ModeViolation";
    case Errc::kMixedUind:
      return "MixedUind";
    case Errc::kMixedFd:
      return "MixedFd";
    case Errc::kCoefficientOutOfRange:
      return "CoefficientOutOfRange";
    case Errc::kBoundOverflow:
      return "BoundOverflow";
    case Errc::kNoInterpretedPosition:
      return "NoInterpretedPosition";
    case Errc::kNegationNotSingleAtom:
      return "NegationNotSingleAtom";
    case Errc::kAlphaViolatesUniqueValue:
      return "AlphaViolatesUniqueValue";
    case Errc::kNotDpControllable:
      return "NotDpControllable";
    case Errc::kPreconditionViolated:
      return "PreconditionViolated";
    case Errc::kResourceLimit:
      return "ResourceLimit";
    case Errc::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Error";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(Errc::kParse,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace hdec
