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

#include "segeval/clustering_measures.hpp"

#include <algorithm>
#include <cmath>

#include "segeval/error.hpp"
#include "segeval/kernels.hpp"

namespace segeval {
namespace {

double pair_count(double x) { return (x * (x - 1.0)) * 0.5; }

struct PairSums {
  double index;     // sum over cells
  double rows;      // sum over row masses
  double cols;      // sum over column masses
  double total;     // pairs of the total mass
};

PairSums pair_sums(const ContingencyMatrix& c) {
  const auto& k = kernels::active();
  return {k.pair_count_sum(c.cells()), k.pair_count_sum(c.row_sums()),
          k.pair_count_sum(c.col_sums()), pair_count(c.total())};
}

void require_pairs(const ContingencyMatrix& c) {
  if (!(c.total() > 1.0)) {
    throw Error(ErrorCode::kDegenerateInput,
                "pair-counting measures need a total mass above 1 (got a single sample)");
  }
}

// -sum p log p over masses, p = mass / total.
double entropy(std::span<const double> masses, double total) {
  double h = 0.0;
  for (double m : masses) {
    if (m > 0.0) h += (m / total) * std::log(total / m);
  }
  return h;
}

}  // namespace

std::string_view to_string(ClusteringMeasure m) noexcept {
  switch (m) {
    case ClusteringMeasure::kRi: return "ri";
    case ClusteringMeasure::kAri: return "ari";
    case ClusteringMeasure::kNmi: return "nmi";
    case ClusteringMeasure::kWari: return "wari";
    case ClusteringMeasure::kWnmi: return "wnmi";
  }
  return "unknown";
}

ClusteringScore rand_index(const ContingencyMatrix& c) {
  require_pairs(c);
  const PairSums s = pair_sums(c);
  // agreeing pairs = together in both + apart in both
  const double agree = s.total + 2.0 * s.index - s.rows - s.cols;
  return {agree / s.total, ClusteringMeasure::kRi, std::nullopt};
}

ClusteringScore ari(const ContingencyMatrix& c) {
  require_pairs(c);
  const PairSums s = pair_sums(c);
  const double expected = s.rows * s.cols / s.total;
  const double max_index = 0.5 * (s.rows + s.cols);
  if (max_index == expected) return {1.0, ClusteringMeasure::kAri, std::nullopt};
  return {(s.index - expected) / (max_index - expected), ClusteringMeasure::kAri, std::nullopt};
}

ClusteringScore nmi(const ContingencyMatrix& c) {
  const double total = c.total();
  if (!(total > 0.0)) throw Error(ErrorCode::kDegenerateInput, "NMI needs a positive total mass");
  const double hu = entropy(c.row_sums(), total);
  const double hv = entropy(c.col_sums(), total);
  if (hu + hv == 0.0) return {1.0, ClusteringMeasure::kNmi, std::nullopt};

  const auto a = c.row_sums();
  const auto b = c.col_sums();
  double mi = 0.0;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const double n = c.at(i, j);
      if (n > 0.0) mi += (n / total) * std::log((n * total) / (a[i] * b[j]));
    }
  }
  const double value = std::clamp(2.0 * mi / (hu + hv), 0.0, 1.0);
  return {value, ClusteringMeasure::kNmi, std::nullopt};
}

ClusteringScore ari(const StateSequence& gt, const StateSequence& pred) {
  return ari(contingency_matrix(gt, pred));
}

ClusteringScore nmi(const StateSequence& gt, const StateSequence& pred) {
  return nmi(contingency_matrix(gt, pred));
}

ClusteringScore wari(const StateSequence& gt, const StateSequence& pred, double alpha) {
  require_equal_length(gt.size(), pred.size());
  ClusteringScore s = ari(contingency_matrix(gt, pred, boundary_weights(gt, alpha)));
  s.measure = ClusteringMeasure::kWari;
  s.alpha = alpha;
  return s;
}

ClusteringScore wnmi(const StateSequence& gt, const StateSequence& pred, double alpha) {
  require_equal_length(gt.size(), pred.size());
  ClusteringScore s = nmi(contingency_matrix(gt, pred, boundary_weights(gt, alpha)));
  s.measure = ClusteringMeasure::kWnmi;
  s.alpha = alpha;
  return s;
}

}  // namespace segeval
