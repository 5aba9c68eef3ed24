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
#include <utility>
#include <vector>

#include "segeval/sequences.hpp"

namespace segeval {

struct F1Result {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> matches;  // (predicted, ground truth)
  std::size_t margin = 0;
};

// max(1, round(0.01 * n))
std::size_t default_margin(std::size_t n);

// Margin-tolerant F1. Predicted change points are visited in ascending
// order and each one claims the nearest unclaimed ground-truth change point
// within the margin (earlier one on ties); claimed points are removed, so a
// ground-truth point is never counted twice.
//
// Both lists empty scores 1; exactly one empty scores 0.
F1Result f1_margin(const ChangePointList& gt_cps, const ChangePointList& pred_cps,
                   std::size_t margin);

// Segment covering: (1/N) sum over ground-truth segments r of
// |r| * max over predicted segments p of |r & p| / |r | p|.
double covering(const StateSequence& gt, const StateSequence& pred);

}  // namespace segeval
