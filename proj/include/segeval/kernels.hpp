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

// Data-parallel inner loops behind the measures. Each kernel has a scalar
// reference and, where the build and the CPU allow it, an AVX2 variant.
// Variants are bitwise equivalent: the scalar reference reduces in the same
// lane order as the vector code, so the dispatch choice never changes a score.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "segeval/sequences.hpp"

namespace segeval::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;

  // out[k] = 1 + alpha * distance[k]
  void (*boundary_weights)(std::span<const std::int32_t> distance, double alpha,
                           std::span<double> out);

  // Number of positions where a[k] != b[k]. Spans have equal length.
  std::size_t (*count_mismatches)(std::span<const StateId> a, std::span<const StateId> b);

  // cells[rows[k] * ncols + cols[k]] += weights[k] (or 1 when weights is
  // empty), accumulated in ascending k.
  void (*accumulate_cells)(std::span<const StateId> rows, std::span<const StateId> cols,
                           std::size_t ncols, std::span<const double> weights,
                           std::span<double> cells);

  // sum over x of x(x-1)/2, four interleaved partial sums combined as
  // (s0 + s1) + (s2 + s3).
  double (*pair_count_sum)(std::span<const double> masses);
};

// Table chosen once per process: the widest ISA that was compiled in and is
// supported by the CPU. Setting SEG_EVAL_ISA=scalar forces the reference path.
const KernelTable& active();

// nullptr when the variant was not compiled or the CPU lacks the extension.
const KernelTable* table_for(Isa isa);

std::vector<Isa> supported_isas();

}  // namespace segeval::kernels
