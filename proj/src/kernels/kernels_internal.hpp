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

#include "segeval/kernels.hpp"

namespace segeval::kernels {

namespace scalar {
void boundary_weights(std::span<const std::int32_t> distance, double alpha, std::span<double> out);
std::size_t count_mismatches(std::span<const StateId> a, std::span<const StateId> b);
void accumulate_cells(std::span<const StateId> rows, std::span<const StateId> cols,
                      std::size_t ncols, std::span<const double> weights, std::span<double> cells);
double pair_count_sum(std::span<const double> masses);
}  // namespace scalar

#if defined(SEGEVAL_HAVE_AVX2)
namespace avx2 {
void boundary_weights(std::span<const std::int32_t> distance, double alpha, std::span<double> out);
std::size_t count_mismatches(std::span<const StateId> a, std::span<const StateId> b);
void accumulate_cells(std::span<const StateId> rows, std::span<const StateId> cols,
                      std::size_t ncols, std::span<const double> weights, std::span<double> cells);
double pair_count_sum(std::span<const double> masses);
}  // namespace avx2
#endif

}  // namespace segeval::kernels
