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

#include "segeval/contingency.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "segeval/error.hpp"
#include "segeval/kernels.hpp"

namespace segeval {
namespace {

ContingencyMatrix build(const StateSequence& gt, const StateSequence& pred,
                        std::span<const double> weights) {
  require_equal_length(gt.size(), pred.size());
  const auto rows = static_cast<std::size_t>(gt.label_bound());
  const auto cols = static_cast<std::size_t>(pred.label_bound());
  if (rows * cols > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
    throw Error(ErrorCode::kInvalidParameter, "contingency table too large: " +
                                                  std::to_string(rows) + "x" + std::to_string(cols));
  }
  std::vector<double> cells(rows * cols, 0.0);
  kernels::active().accumulate_cells(gt.labels(), pred.labels(), cols, weights, cells);
  return ContingencyMatrix(rows, cols, std::move(cells));
}

}  // namespace

WeightVector boundary_weights(const StateSequence& gt, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidParameter, "alpha must be a finite non-negative number");
  }
  const auto d = distance_to_nearest_cp(gt);
  WeightVector out{std::vector<double>(d.size()), alpha};
  kernels::active().boundary_weights(d, alpha, out.w);
  return out;
}

ContingencyMatrix::ContingencyMatrix(std::size_t rows, std::size_t cols, std::vector<double> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)), row_sums_(rows, 0.0), col_sums_(cols, 0.0) {
  if (cells_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kInvalidParameter, "contingency cell count does not match its shape");
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      row_sums_[i] += cells_[i * cols_ + j];
      col_sums_[j] += cells_[i * cols_ + j];
    }
  }
  for (double a : row_sums_) total_ += a;
}

ContingencyMatrix contingency_matrix(const StateSequence& gt, const StateSequence& pred) {
  return build(gt, pred, {});
}

ContingencyMatrix contingency_matrix(const StateSequence& gt, const StateSequence& pred,
                                     const WeightVector& weights) {
  if (weights.w.size() != gt.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "weight vector length " + std::to_string(weights.w.size()) +
                    " does not match sequence length " + std::to_string(gt.size()));
  }
  return build(gt, pred, weights.w);
}

}  // namespace segeval
