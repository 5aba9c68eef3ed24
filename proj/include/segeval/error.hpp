// Copyright 2026 The seg-eval Authors.
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

namespace segeval {

enum class ErrorCode {
  kEmptySequence,
  kParseError,
  kInvalidParameter,
  kLengthMismatch,
  kDegenerateInput,
  kUnmappedLabel,
  kInvalidSpec,
  kEmptyBatch,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base of every exception thrown by the library. Callers that only need a
// diagnostic can catch std::runtime_error; code() distinguishes the cases.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed label input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Throws kLengthMismatch with the canonical "length mismatch: ..." message.
void require_equal_length(std::size_t n_gt, std::size_t n_pred);

}  // namespace segeval
