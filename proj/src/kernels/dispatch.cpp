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

#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace segeval::kernels {
namespace {

constexpr KernelTable kScalarTable{
    Isa::kScalar,
    &scalar::boundary_weights,
    &scalar::count_mismatches,
    &scalar::accumulate_cells,
    &scalar::pair_count_sum,
};

#if defined(SEGEVAL_HAVE_AVX2)
constexpr KernelTable kAvx2Table{
    Isa::kAvx2,
    &avx2::boundary_weights,
    &avx2::count_mismatches,
    &avx2::accumulate_cells,
    &avx2::pair_count_sum,
};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#endif

const KernelTable& select() {
  const char* forced = std::getenv("SEG_EVAL_ISA");
  if (forced != nullptr && std::string_view(forced) == "scalar") return kScalarTable;
#if defined(SEGEVAL_HAVE_AVX2)
  if (cpu_has_avx2()) return kAvx2Table;
#endif
  return kScalarTable;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &kScalarTable;
    case Isa::kAvx2:
#if defined(SEGEVAL_HAVE_AVX2)
      return cpu_has_avx2() ? &kAvx2Table : nullptr;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out{Isa::kScalar};
  if (table_for(Isa::kAvx2) != nullptr) out.push_back(Isa::kAvx2);
  return out;
}

}  // namespace segeval::kernels
