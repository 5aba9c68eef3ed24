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
#include <span>
#include <vector>

#include "segeval/sequences.hpp"

namespace segeval {

// Per-sample weights w[k] = 1 + alpha * d[k], d measured on the ground truth.
struct WeightVector {
  std::vector<double> w;
  double alpha = 0.0;
};

WeightVector boundary_weights(const StateSequence& gt, double alpha);

// |rows| x |cols| table of (possibly weighted) co-occurrence masses. Row i is
// ground-truth id i, column j predicted id j.
class ContingencyMatrix {
 public:
  ContingencyMatrix(std::size_t rows, std::size_t cols, std::vector<double> cells);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double at(std::size_t i, std::size_t j) const noexcept { return cells_[i * cols_ + j]; }
  std::span<const double> cells() const noexcept { return cells_; }
  std::span<const double> row_sums() const noexcept { return row_sums_; }
  std::span<const double> col_sums() const noexcept { return col_sums_; }
  double total() const noexcept { return total_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> cells_;
  std::vector<double> row_sums_;
  std::vector<double> col_sums_;
  double total_ = 0.0;
};

ContingencyMatrix contingency_matrix(const StateSequence& gt, const StateSequence& pred);
ContingencyMatrix contingency_matrix(const StateSequence& gt, const StateSequence& pred,
                                     const WeightVector& weights);

}  // namespace segeval
