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

#include "segeval/sms.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "segeval/error.hpp"

namespace segeval {
namespace {

BlockClassification classify(const StateSequence& gt, const StateSequence& mapped,
                             const ChangePointList& cps, const ErrorBlock& b) {
  const std::size_t n = gt.size();
  const std::size_t i = b.start;
  const std::size_t j = b.end;
  const StateId p = b.predicted_label;

  BlockClassification out{ErrorType::kMissing, std::nullopt};
  if (b.atomicity >= 3) return out;

  if (b.atomicity == 1) {
    const bool before = i > 0 && gt[i - 1] == p && mapped[i - 1] == p;
    const bool after = j + 1 < n && gt[j + 1] == p && mapped[j + 1] == p;
    if (before || after) {
      out.type = ErrorType::kDelay;
      return out;
    }
    out.type = ErrorType::kIsolation;
  } else {
    out.type = ErrorType::kTransition;
  }

  const auto& pos = cps.positions;
  auto next_it = std::upper_bound(pos.begin(), pos.end(), j);
  auto prev_it = std::lower_bound(pos.begin(), pos.end(), i);
  const std::size_t b_prev = prev_it == pos.begin() ? 0 : *std::prev(prev_it);
  const std::size_t b_next = next_it == pos.end() ? n : *next_it;
  const std::size_t gap = std::min(i - b_prev, b_next - j);
  out.boundary_distance = 2.0 * static_cast<double>(gap) / static_cast<double>(n);
  return out;
}

}  // namespace

std::string_view to_string(ErrorType t) noexcept {
  switch (t) {
    case ErrorType::kDelay: return "delay";
    case ErrorType::kIsolation: return "isolation";
    case ErrorType::kTransition: return "transition";
    case ErrorType::kMissing: return "missing";
  }
  return "unknown";
}

std::optional<ErrorType> parse_error_type(std::string_view name) noexcept {
  for (ErrorType t : kErrorTypes) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

double PenaltyWeights::of(ErrorType t) const noexcept {
  switch (t) {
    case ErrorType::kDelay: return delay;
    case ErrorType::kIsolation: return isolation;
    case ErrorType::kTransition: return transition;
    case ErrorType::kMissing: return missing;
  }
  return 0.0;
}

double PenaltyWeights::max() const noexcept {
  return std::max({delay, transition, isolation, missing});
}

void PenaltyWeights::validate() const {
  for (ErrorType t : kErrorTypes) {
    const double w = of(t);
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kInvalidParameter,
                  "penalty weight for " + std::string(to_string(t)) +
                      " must be a finite non-negative number");
    }
  }
}

std::vector<ErrorBlock> error_blocks(const StateSequence& gt, const StateSequence& mapped) {
  require_equal_length(gt.size(), mapped.size());
  std::vector<ErrorBlock> blocks;
  const std::size_t n = gt.size();
  std::size_t k = 0;
  while (k < n) {
    if (mapped[k] == gt[k]) {
      ++k;
      continue;
    }
    ErrorBlock b;
    b.start = k;
    b.predicted_label = mapped[k];
    std::set<StateId> real;
    while (k < n && mapped[k] != gt[k] && mapped[k] == b.predicted_label) {
      real.insert(gt[k]);
      ++k;
    }
    b.end = k - 1;
    b.atomicity = real.size();
    blocks.push_back(b);
  }
  return blocks;
}

BlockClassification classify_block(const StateSequence& gt, const StateSequence& mapped,
                                   const ErrorBlock& block) {
  require_equal_length(gt.size(), mapped.size());
  return classify(gt, mapped, change_points(gt), block);
}

double block_penalty(const ErrorBlock& block, const PenaltyWeights& w) {
  if (!block.type) {
    throw Error(ErrorCode::kInvalidParameter, "cannot penalize an unclassified error block");
  }
  const auto l = static_cast<double>(block.length());
  const ErrorType t = *block.type;
  const double we = w.of(t);
  switch (t) {
    case ErrorType::kDelay:
      return l * (1.0 + we);
    case ErrorType::kIsolation:
    case ErrorType::kTransition: {
      if (!block.boundary_distance) {
        throw Error(ErrorCode::kInvalidParameter,
                    "isolation/transition block is missing its boundary distance");
      }
      return l * (1.0 + *block.boundary_distance * we);
    }
    case ErrorType::kMissing: {
      const auto a = static_cast<double>(block.atomicity);
      return l * (1.0 + we * (1.0 + (3.0 / a) * (we - 1.0)));
    }
  }
  return 0.0;
}

SmsReport sms(const StateSequence& gt, const StateSequence& pred, const PenaltyWeights& weights) {
  require_equal_length(gt.size(), pred.size());
  weights.validate();

  SmsReport report;
  report.n = gt.size();
  report.mapping = optimal_state_mapping(gt, pred);
  const StateSequence mapped = apply_mapping(pred, report.mapping);
  const ChangePointList cps = change_points(gt);

  report.blocks = error_blocks(gt, mapped);
  double penalty_sum = 0.0;
  for (ErrorBlock& b : report.blocks) {
    const BlockClassification c = classify(gt, mapped, cps, b);
    b.type = c.type;
    b.boundary_distance = c.boundary_distance;
    b.penalty = block_penalty(b, weights);

    TypeTotals& tt = report.per_type[static_cast<std::size_t>(c.type)];
    ++tt.count;
    tt.length += b.length();
    tt.penalty += b.penalty;
    report.total_error_length += b.length();
    penalty_sum += b.penalty;
  }
  report.score = 1.0 - penalty_sum / static_cast<double>(report.n);
  return report;
}

ErrorSummary error_report(std::span<const SmsReport> reports) {
  if (reports.empty()) throw Error(ErrorCode::kEmptyBatch, "error report needs at least one SMS report");
  ErrorSummary s;
  s.reports = reports.size();
  const auto count = static_cast<double>(reports.size());
  for (const SmsReport& r : reports) {
    s.mean_score += r.score / count;
    for (std::size_t t = 0; t < kErrorTypes.size(); ++t) {
      const TypeTotals& tt = r.per_type[t];
      s.per_type[t].mean_count += static_cast<double>(tt.count) / count;
      s.per_type[t].mean_length += static_cast<double>(tt.length) / count;
      s.per_type[t].mean_penalty_share += tt.penalty / static_cast<double>(r.n) / count;
    }
  }
  return s;
}

}  // namespace segeval
