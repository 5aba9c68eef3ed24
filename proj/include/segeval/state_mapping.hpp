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
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "segeval/sequences.hpp"

namespace segeval {

// Rectangular min-cost assignment on a row-major rows x cols integer matrix.
//
// The matching has full cardinality min(rows, cols). Among optimal matchings
// the lexicographically smallest row -> column vector is returned, with
// "unassigned" ranked after every real column.
struct Assignment {
  std::vector<std::optional<std::size_t>> row_to_col;
  std::int64_t total_cost = 0;
};

Assignment solve_assignment(std::size_t rows, std::size_t cols,
                            std::span<const std::int64_t> cost);

// Negative overlap between predicted ids (rows) and ground-truth ids
// (columns), restricted to ids that occur.
struct OverlapCostMatrix {
  std::vector<StateId> pred_ids;
  std::vector<StateId> gt_ids;
  std::vector<std::int64_t> cost;  // row-major

  std::int64_t at(std::size_t r, std::size_t c) const { return cost[r * gt_ids.size() + c]; }
};

OverlapCostMatrix overlap_cost_matrix(const StateSequence& gt, const StateSequence& pred);

// Injective map from predicted ids to ground-truth ids, plus fresh ids for
// predicted labels left over when the prediction has more states.
class StateMapping {
 public:
  StateMapping() = default;

  void assign(StateId pred, StateId target);
  void assign_fresh(StateId pred, StateId target);

  std::optional<StateId> image(StateId pred) const;
  const std::map<StateId, StateId>& pairs() const noexcept { return image_; }
  const std::set<StateId>& assigned() const noexcept { return assigned_; }
  const std::set<StateId>& fresh() const noexcept { return fresh_; }
  bool is_fresh(StateId target) const { return fresh_.count(target) != 0; }

  friend bool operator==(const StateMapping&, const StateMapping&) = default;

 private:
  std::map<StateId, StateId> image_;
  std::set<StateId> assigned_;  // targets that are ground-truth ids
  std::set<StateId> fresh_;     // synthesized targets
};

// Maximum-overlap alignment of predicted labels onto ground-truth labels.
// Unmatched predicted labels, in ascending id order, take the smallest
// non-negative integer not already used as a target.
StateMapping optimal_state_mapping(const StateSequence& gt, const StateSequence& pred);

// Throws kUnmappedLabel if some predicted id has no image.
StateSequence apply_mapping(const StateSequence& pred, const StateMapping& m);

// Samples on which pred's image agrees with gt.
std::size_t mapped_overlap(const StateSequence& gt, const StateSequence& pred,
                           const StateMapping& m);

}  // namespace segeval
