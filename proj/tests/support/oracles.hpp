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

// Brute-force reference implementations used to check the library. They
// share no code with it beyond the StateSequence container.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "segeval/sequences.hpp"

namespace segeval::oracle {

// Pair-counting ARI over all N(N-1)/2 sample pairs.
double ari_all_pairs(std::span<const StateId> gt, std::span<const StateId> pred);

// Fraction of agreeing pairs.
double rand_index_all_pairs(std::span<const StateId> gt, std::span<const StateId> pred);

// NMI from per-sample frequency maps, natural logarithms.
double nmi_direct(std::span<const StateId> gt, std::span<const StateId> pred);

// min over change points c of min(|k - (c-1)|, |k - c|); zeros without any.
std::vector<std::int32_t> flank_distance(std::span<const StateId> labels);

// Largest total overlap over all injective pred -> gt label maps.
std::int64_t best_overlap(std::span<const StateId> gt, std::span<const StateId> pred);

// Exhaustive min-cost assignment on a rows x cols matrix: the optimum, and
// the lexicographically smallest optimal row -> col vector with "none"
// ranked after every column.
struct AssignmentOracle {
  std::int64_t cost = 0;
  std::vector<std::optional<std::size_t>> row_to_col;
};
AssignmentOracle assignment_enumerate(std::size_t rows, std::size_t cols,
                                      std::span<const std::int64_t> cost);

// Maximal runs [start, end] where mapped is constant and differs from gt.
struct Run {
  std::size_t start;
  std::size_t end;
};
std::vector<Run> wrong_runs(std::span<const StateId> gt, std::span<const StateId> mapped);

// Segment covering computed from explicit index sets.
double covering_sets(std::span<const StateId> gt, std::span<const StateId> pred);

}  // namespace segeval::oracle
