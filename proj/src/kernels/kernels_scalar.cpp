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

#include "kernels_internal.hpp"

namespace segeval::kernels::scalar {

void boundary_weights(std::span<const std::int32_t> distance, double alpha,
                      std::span<double> out) {
  for (std::size_t k = 0; k < distance.size(); ++k) {
    out[k] = 1.0 + alpha * static_cast<double>(distance[k]);
  }
}

std::size_t count_mismatches(std::span<const StateId> a, std::span<const StateId> b) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < a.size(); ++k) n += a[k] != b[k];
  return n;
}

void accumulate_cells(std::span<const StateId> rows, std::span<const StateId> cols,
                      std::size_t ncols, std::span<const double> weights,
                      std::span<double> cells) {
  const bool weighted = !weights.empty();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t idx = static_cast<std::size_t>(rows[k]) * ncols +
                            static_cast<std::size_t>(cols[k]);
    cells[idx] += weighted ? weights[k] : 1.0;
  }
}

double pair_count_sum(std::span<const double> masses) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < masses.size(); ++k) {
    const double x = masses[k];
    lane[k % 4] += (x * (x - 1.0)) * 0.5;
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace segeval::kernels::scalar
