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

#include <gtest/gtest.h>

#include <bit>
#include <cstdint>
#include <cstring>

#include "../support/generators.hpp"
#include "segeval/kernels.hpp"

namespace segeval::kernels {
namespace {

std::uint64_t bits(double x) { return std::bit_cast<std::uint64_t>(x); }

const KernelTable& scalar() { return *table_for(Isa::kScalar); }

TEST(Kernels, ScalarAlwaysAvailable) {
  ASSERT_NE(table_for(Isa::kScalar), nullptr);
  EXPECT_EQ(scalar().isa, Isa::kScalar);
  const auto isas = supported_isas();
  ASSERT_FALSE(isas.empty());
  EXPECT_EQ(isas.front(), Isa::kScalar);
  EXPECT_EQ(to_string(active().isa).empty(), false);
}

TEST(Kernels, ScalarReferenceValues) {
  const std::vector<std::int32_t> d{1, 0, 0, 1};
  std::vector<double> w(4);
  scalar().boundary_weights(d, 0.1, w);
  EXPECT_EQ(w, (std::vector<double>{1.1, 1.0, 1.0, 1.1}));

  const std::vector<StateId> a{0, 1, 2, 3, 4}, b{0, 2, 2, 3, 0};
  EXPECT_EQ(scalar().count_mismatches(a, b), 2u);

  std::vector<double> cells(4, 0.0);
  const std::vector<StateId> rows{0, 0, 1, 1}, cols{0, 1, 1, 1};
  scalar().accumulate_cells(rows, cols, 2, {}, cells);
  EXPECT_EQ(cells, (std::vector<double>{1, 1, 0, 2}));

  const std::vector<double> masses{2, 3, 4, 1, 0, 5};
  EXPECT_EQ(scalar().pair_count_sum(masses), 1.0 + 3.0 + 6.0 + 0.0 + 0.0 + 10.0);
}

// Every compiled-in variant must agree with the reference bit for bit.
TEST(Kernels, VariantsMatchScalarExactly) {
  gen::Rng rng(5);
  for (Isa isa : supported_isas()) {
    const KernelTable& t = *table_for(isa);
    SCOPED_TRACE(std::string(to_string(isa)));
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t n = gen::uniform(rng, 0, 257);
      std::vector<std::int32_t> d(n);
      for (auto& x : d) x = static_cast<std::int32_t>(gen::uniform(rng, 0, 1000));
      const double alpha = gen::uniform01(rng) * 3;
      std::vector<double> w1(n), w2(n);
      scalar().boundary_weights(d, alpha, w1);
      t.boundary_weights(d, alpha, w2);
      ASSERT_EQ(0, n == 0 ? 0 : std::memcmp(w1.data(), w2.data(), n * sizeof(double)));

      const std::size_t k = gen::uniform(rng, 1, 6);
      const auto a = gen::noise(rng, n, k);
      const auto b = gen::noise(rng, n, k);
      ASSERT_EQ(scalar().count_mismatches(a, b), t.count_mismatches(a, b));

      std::vector<double> c1(k * k, 0.0), c2(k * k, 0.0);
      const bool weighted = trial % 2 == 0;
      scalar().accumulate_cells(a, b, k, weighted ? std::span<const double>(w1) : std::span<const double>{}, c1);
      t.accumulate_cells(a, b, k, weighted ? std::span<const double>(w1) : std::span<const double>{}, c2);
      for (std::size_t i = 0; i < c1.size(); ++i) ASSERT_EQ(bits(c1[i]), bits(c2[i]));

      std::vector<double> masses(gen::uniform(rng, 0, 40));
      for (auto& m : masses) m = gen::uniform01(rng) * 500;
      ASSERT_EQ(bits(scalar().pair_count_sum(masses)), bits(t.pair_count_sum(masses)));
    }
  }
}

}  // namespace
}  // namespace segeval::kernels
