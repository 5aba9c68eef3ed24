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

#include "segeval/changepoint_measures.hpp"

#include <algorithm>
#include <cmath>

#include "segeval/error.hpp"

namespace segeval {

std::size_t default_margin(std::size_t n) {
  const auto m = static_cast<std::size_t>(std::llround(0.01 * static_cast<double>(n)));
  return std::max<std::size_t>(1, m);
}

F1Result f1_margin(const ChangePointList& gt_cps, const ChangePointList& pred_cps,
                   std::size_t margin) {
  F1Result r;
  r.margin = margin;
  if (gt_cps.empty() && pred_cps.empty()) {
    r.precision = r.recall = r.f1 = 1.0;
    return r;
  }
  if (gt_cps.empty() || pred_cps.empty()) return r;

  const auto& gt = gt_cps.positions;
  std::vector<bool> claimed(gt.size(), false);
  for (std::size_t p : pred_cps) {
    const std::size_t lo = p >= margin ? p - margin : 0;
    auto first = std::lower_bound(gt.begin(), gt.end(), lo);
    std::size_t best = gt.size();
    std::size_t best_dist = 0;
    for (auto it = first; it != gt.end() && *it <= p + margin; ++it) {
      const auto idx = static_cast<std::size_t>(it - gt.begin());
      if (claimed[idx]) continue;
      const std::size_t dist = *it > p ? *it - p : p - *it;
      if (best == gt.size() || dist < best_dist) {
        best = idx;
        best_dist = dist;
      }
    }
    if (best != gt.size()) {
      claimed[best] = true;
      r.matches.emplace_back(p, gt[best]);
    }
  }

  const auto hits = static_cast<double>(r.matches.size());
  r.precision = hits / static_cast<double>(pred_cps.size());
  r.recall = hits / static_cast<double>(gt.size());
  r.f1 = r.precision + r.recall > 0.0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  return r;
}

double covering(const StateSequence& gt, const StateSequence& pred) {
  require_equal_length(gt.size(), pred.size());
  const auto real = segments(gt);
  const auto predicted = segments(pred);

  double acc = 0.0;
  std::size_t p = 0;
  for (const Segment& r : real) {
    while (predicted[p].end < r.start) ++p;
    double best = 0.0;
    for (std::size_t q = p; q < predicted.size() && predicted[q].start <= r.end; ++q) {
      const std::size_t lo = std::max(r.start, predicted[q].start);
      const std::size_t hi = std::min(r.end, predicted[q].end);
      const auto inter = static_cast<double>(hi - lo + 1);
      const auto uni = static_cast<double>(r.length() + predicted[q].length()) - inter;
      best = std::max(best, inter / uni);
    }
    acc += static_cast<double>(r.length()) * best;
  }
  return acc / static_cast<double>(gt.size());
}

}  // namespace segeval
