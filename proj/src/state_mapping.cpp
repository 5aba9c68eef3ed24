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

#include "segeval/state_mapping.hpp"

#include <string>

#include "segeval/error.hpp"

namespace segeval {

void StateMapping::assign(StateId pred, StateId target) {
  image_[pred] = target;
  assigned_.insert(target);
}

void StateMapping::assign_fresh(StateId pred, StateId target) {
  image_[pred] = target;
  fresh_.insert(target);
}

std::optional<StateId> StateMapping::image(StateId pred) const {
  auto it = image_.find(pred);
  if (it == image_.end()) return std::nullopt;
  return it->second;
}

OverlapCostMatrix overlap_cost_matrix(const StateSequence& gt, const StateSequence& pred) {
  require_equal_length(gt.size(), pred.size());
  OverlapCostMatrix m{pred.distinct_labels(), gt.distinct_labels(), {}};

  std::vector<std::size_t> row_of(static_cast<std::size_t>(pred.label_bound()));
  std::vector<std::size_t> col_of(static_cast<std::size_t>(gt.label_bound()));
  for (std::size_t r = 0; r < m.pred_ids.size(); ++r) row_of[static_cast<std::size_t>(m.pred_ids[r])] = r;
  for (std::size_t c = 0; c < m.gt_ids.size(); ++c) col_of[static_cast<std::size_t>(m.gt_ids[c])] = c;

  const std::size_t cols = m.gt_ids.size();
  m.cost.assign(m.pred_ids.size() * cols, 0);
  const auto p = pred.labels();
  const auto g = gt.labels();
  for (std::size_t k = 0; k < p.size(); ++k) {
    m.cost[row_of[static_cast<std::size_t>(p[k])] * cols + col_of[static_cast<std::size_t>(g[k])]] -= 1;
  }
  return m;
}

StateMapping optimal_state_mapping(const StateSequence& gt, const StateSequence& pred) {
  const OverlapCostMatrix cm = overlap_cost_matrix(gt, pred);
  const Assignment a = solve_assignment(cm.pred_ids.size(), cm.gt_ids.size(), cm.cost);

  StateMapping m;
  for (std::size_t r = 0; r < cm.pred_ids.size(); ++r) {
    if (a.row_to_col[r]) m.assign(cm.pred_ids[r], cm.gt_ids[*a.row_to_col[r]]);
  }
  StateId next = 0;
  for (std::size_t r = 0; r < cm.pred_ids.size(); ++r) {
    if (a.row_to_col[r]) continue;
    while (m.assigned().count(next) != 0 || m.fresh().count(next) != 0) ++next;
    m.assign_fresh(cm.pred_ids[r], next);
  }
  return m;
}

StateSequence apply_mapping(const StateSequence& pred, const StateMapping& m) {
  std::vector<StateId> out;
  out.reserve(pred.size());
  for (StateId id : pred.labels()) {
    auto target = m.image(id);
    if (!target) {
      throw Error(ErrorCode::kUnmappedLabel,
                  "predicted label " + std::to_string(id) + " has no image in the mapping");
    }
    out.push_back(*target);
  }
  return StateSequence::from_ids(std::move(out));
}

std::size_t mapped_overlap(const StateSequence& gt, const StateSequence& pred,
                           const StateMapping& m) {
  require_equal_length(gt.size(), pred.size());
  std::size_t hits = 0;
  for (std::size_t k = 0; k < gt.size(); ++k) {
    auto target = m.image(pred[k]);
    if (target && !m.is_fresh(*target) && *target == gt[k]) ++hits;
  }
  return hits;
}

}  // namespace segeval
