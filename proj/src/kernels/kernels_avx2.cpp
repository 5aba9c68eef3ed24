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

#include <immintrin.h>

#include <bit>

#include "kernels_internal.hpp"

namespace segeval::kernels::avx2 {

void boundary_weights(std::span<const std::int32_t> distance, double alpha,
                      std::span<double> out) {
  const std::size_t n = distance.size();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m128i d = _mm_loadu_si128(reinterpret_cast<const __m128i*>(distance.data() + k));
    __m256d w = _mm256_add_pd(one, _mm256_mul_pd(a, _mm256_cvtepi32_pd(d)));
    _mm256_storeu_pd(out.data() + k, w);
  }
  for (; k < n; ++k) out[k] = 1.0 + alpha * static_cast<double>(distance[k]);
}

std::size_t count_mismatches(std::span<const StateId> a, std::span<const StateId> b) {
  const std::size_t n = a.size();
  std::size_t mismatches = 0;
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + k));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + k));
    const int eq = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb)));
    mismatches += 8 - static_cast<std::size_t>(std::popcount(static_cast<unsigned>(eq)));
  }
  for (; k < n; ++k) mismatches += a[k] != b[k];
  return mismatches;
}

void accumulate_cells(std::span<const StateId> rows, std::span<const StateId> cols,
                      std::size_t ncols, std::span<const double> weights,
                      std::span<double> cells) {
  const std::size_t n = rows.size();
  const bool weighted = !weights.empty();
  const __m256i width = _mm256_set1_epi32(static_cast<int>(ncols));
  alignas(32) std::int32_t flat[8];
  std::size_t k = 0;
  // Flat indices are computed eight at a time; the scatter stays sequential
  // so the accumulation order matches the scalar reference.
  for (; k + 8 <= n; k += 8) {
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows.data() + k));
    __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cols.data() + k));
    _mm256_store_si256(reinterpret_cast<__m256i*>(flat),
                       _mm256_add_epi32(_mm256_mullo_epi32(r, width), c));
    for (int l = 0; l < 8; ++l) {
      cells[static_cast<std::size_t>(flat[l])] += weighted ? weights[k + l] : 1.0;
    }
  }
  for (; k < n; ++k) {
    const std::size_t idx = static_cast<std::size_t>(rows[k]) * ncols +
                            static_cast<std::size_t>(cols[k]);
    cells[idx] += weighted ? weights[k] : 1.0;
  }
}

double pair_count_sum(std::span<const double> masses) {
  const std::size_t n = masses.size();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d x = _mm256_loadu_pd(masses.data() + k);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_mul_pd(x, _mm256_sub_pd(x, one)), half));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (; k < n; ++k) {
    const double x = masses[k];
    lane[k % 4] += (x * (x - 1.0)) * 0.5;
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace segeval::kernels::avx2
