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

#include "segeval/error.hpp"

#include <string>

namespace segeval {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEmptySequence: return "EmptySequence";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDegenerateInput: return "DegenerateInput";
    case ErrorCode::kUnmappedLabel: return "UnmappedLabel";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kEmptyBatch: return "EmptyBatch";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& reason)
    : Error(ErrorCode::kParseError, "parse error at line " + std::to_string(line) +
                                        ", column " + std::to_string(column) + ": " +
                                        reason),
      line_(line),
      column_(column) {}

void require_equal_length(std::size_t n_gt, std::size_t n_pred) {
  if (n_gt != n_pred) {
    throw Error(ErrorCode::kLengthMismatch, "length mismatch: N_gt=" + std::to_string(n_gt) +
                                                " N_pred=" + std::to_string(n_pred));
  }
}

}  // namespace segeval
