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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hdec {

enum class Errc {
  kParse,
  kArity,
  kUnknownVariable,
  kModeViolation,
  kMixedUind,
  kMixedFd,
  kCoefficientOutOfRange,
  kBoundOverflow,
  kNoInterpretedPosition,
  kNegationNotSingleAtom,
  kAlphaViolatesUniqueValue,
  kNotDpControllable,
  kPreconditionViolated,
  kResourceLimit,
  kInvalidArgument,
};

std::string_view errc_name(Errc code);

// Every failure the library reports on purpose is an Error; anything else
// (std::logic_error in particular) is a bug.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hdec
