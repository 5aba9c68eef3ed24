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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "segeval/sequences.hpp"
#include "segeval/state_mapping.hpp"

namespace segeval {

enum class ErrorType { kDelay, kIsolation, kTransition, kMissing };

inline constexpr std::array<ErrorType, 4> kErrorTypes{
    ErrorType::kDelay, ErrorType::kIsolation, ErrorType::kTransition, ErrorType::kMissing};

std::string_view to_string(ErrorType t) noexcept;
std::optional<ErrorType> parse_error_type(std::string_view name) noexcept;

// Maximal interval [start, end] on which the mapped prediction is constant
// and wrong everywhere.
struct ErrorBlock {
  std::size_t start = 0;
  std::size_t end = 0;
  StateId predicted_label = 0;
  std::size_t atomicity = 0;  // distinct ground-truth states inside
  std::optional<ErrorType> type;
  std::optional<double> boundary_distance;  // isolation and transition only
  double penalty = 0.0;

  std::size_t length() const noexcept { return end - start + 1; }
};

struct PenaltyWeights {
  double delay = 0.1;
  double transition = 0.3;
  double isolation = 0.8;
  double missing = 0.5;

  double of(ErrorType t) const noexcept;
  double max() const noexcept;
  // Throws kInvalidParameter on negative or non-finite weights.
  void validate() const;

  friend bool operator==(const PenaltyWeights&, const PenaltyWeights&) = default;
};

struct BlockClassification {
  ErrorType type;
  std::optional<double> boundary_distance;
};

struct TypeTotals {
  std::size_t count = 0;
  std::size_t length = 0;
  double penalty = 0.0;
};

struct SmsReport {
  double score = 1.0;
  std::vector<ErrorBlock> blocks;
  std::array<TypeTotals, 4> per_type{};
  std::size_t total_error_length = 0;
  std::size_t n = 0;
  StateMapping mapping;

  const TypeTotals& totals(ErrorType t) const noexcept {
    return per_type[static_cast<std::size_t>(t)];
  }
};

// Blocks in ascending order with atomicity filled in; type and penalty unset.
std::vector<ErrorBlock> error_blocks(const StateSequence& gt, const StateSequence& mapped);

// A=1 is a delay when a neighbour is correct and carries the block's label,
// otherwise an isolation; A=2 is a transition, A>=3 missing. For isolation
// and transition, d = 2 min(i - b_prev, b_next - j) / N with b_prev / b_next
// the nearest ground-truth change points strictly before i / after j
// (0 and N when there is none).
BlockClassification classify_block(const StateSequence& gt, const StateSequence& mapped,
                                   const ErrorBlock& block);

// delay       l (1 + w)
// isolation   l (1 + d w)
// transition  l (1 + d w)
// missing     l (1 + w (1 + (3/A)(w - 1)))
double block_penalty(const ErrorBlock& block, const PenaltyWeights& w);

// State matching score: align labels, extract and classify error blocks,
// and return 1 - (sum of penalties) / N with every intermediate attached.
SmsReport sms(const StateSequence& gt, const StateSequence& pred,
              const PenaltyWeights& weights = {});

struct TypeAggregate {
  double mean_count = 0.0;
  double mean_length = 0.0;
  // Mean of (type penalty / N); shares over all types add up to 1 - SMS.
  double mean_penalty_share = 0.0;
};

struct ErrorSummary {
  std::size_t reports = 0;
  double mean_score = 0.0;
  std::array<TypeAggregate, 4> per_type{};

  const TypeAggregate& of(ErrorType t) const noexcept {
    return per_type[static_cast<std::size_t>(t)];
  }
};

// Throws kEmptyBatch on an empty list.
ErrorSummary error_report(std::span<const SmsReport> reports);

}  // namespace segeval
