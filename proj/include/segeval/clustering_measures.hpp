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

#include <optional>
#include <string_view>

#include "segeval/contingency.hpp"
#include "segeval/sequences.hpp"

namespace segeval {

enum class ClusteringMeasure { kRi, kAri, kNmi, kWari, kWnmi };

std::string_view to_string(ClusteringMeasure m) noexcept;

struct ClusteringScore {
  double value = 0.0;
  ClusteringMeasure measure = ClusteringMeasure::kAri;
  std::optional<double> alpha;  // weighted variants only
};

// Fraction of sample pairs on which the two partitions agree.
ClusteringScore rand_index(const ContingencyMatrix& c);

// Adjusted Rand index under the permutation model. Pair counts use
// x(x-1)/2 on real masses, so the same code serves weighted tables.
// Two trivial partitions score 1. Throws kDegenerateInput when total <= 1.
ClusteringScore ari(const ContingencyMatrix& c);

// 2 I(U;V) / (H(U) + H(V)); 1 when both partitions are trivial.
ClusteringScore nmi(const ContingencyMatrix& c);

ClusteringScore ari(const StateSequence& gt, const StateSequence& pred);
ClusteringScore nmi(const StateSequence& gt, const StateSequence& pred);

// ARI / NMI on the table weighted by boundary_weights(gt, alpha).
// alpha == 0 reproduces ari / nmi bit for bit.
ClusteringScore wari(const StateSequence& gt, const StateSequence& pred, double alpha);
ClusteringScore wnmi(const StateSequence& gt, const StateSequence& pred, double alpha);

}  // namespace segeval
