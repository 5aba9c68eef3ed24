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

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "segeval/error.hpp"
#include "segeval/state_mapping.hpp"

namespace segeval {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct SquareSolution {
  std::vector<std::size_t> row_to_col;
  std::vector<std::int64_t> u;  // row potentials
  std::vector<std::int64_t> v;  // column potentials
};

// Shortest augmenting path Hungarian method on an n x n matrix. Integer
// potentials stay feasible (u[i] + v[j] <= c[i][j]) and are tight on the
// returned matching.
SquareSolution hungarian(std::size_t n, const std::vector<std::int64_t>& c) {
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = c[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  SquareSolution s{std::vector<std::size_t>(n), std::vector<std::int64_t>(n),
                   std::vector<std::int64_t>(n)};
  for (std::size_t j = 1; j <= n; ++j) s.row_to_col[p[j] - 1] = j - 1;
  for (std::size_t i = 0; i < n; ++i) s.u[i] = u[i + 1];
  for (std::size_t j = 0; j < n; ++j) s.v[j] = v[j + 1];
  return s;
}

// Every optimal matching lives on the tight edges of an optimal dual. Walk
// rows in order and move each one to its smallest tight column that still
// admits a perfect matching, found as an alternating cycle through the
// rows not yet fixed.
void lexicographic_refine(std::size_t n, const std::vector<std::int64_t>& c,
                          SquareSolution& s) {
  auto tight = [&](std::size_t i, std::size_t j) { return s.u[i] + s.v[j] == c[i * n + j]; };
  std::vector<std::size_t>& col_of = s.row_to_col;
  std::vector<std::size_t> row_of(n);
  for (std::size_t i = 0; i < n; ++i) row_of[col_of[i]] = i;
  std::vector<bool> fixed(n, false);

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t target = col_of[i];
    for (std::size_t j = 0; j < target; ++j) {
      if (!tight(i, j) || fixed[row_of[j]]) continue;
      // Alternating path from row_of[j] to column `target`.
      const std::size_t start = row_of[j];
      std::vector<std::size_t> prev_row(n, n);  // column -> row that reached it
      std::vector<bool> seen(n, false);
      std::deque<std::size_t> queue{start};
      seen[start] = true;
      bool found = false;
      while (!queue.empty() && !found) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t y = 0; y < n; ++y) {
          if (y == col_of[x] || !tight(x, y)) continue;
          if (y == target) {
            prev_row[y] = x;
            found = true;
            break;
          }
          const std::size_t next = row_of[y];
          if (seen[next] || fixed[next] || next == i) continue;
          seen[next] = true;
          prev_row[y] = x;
          queue.push_back(next);
        }
      }
      if (!found) continue;
      // Rotate: each row on the path takes the column it reached.
      std::size_t y = target;
      while (true) {
        const std::size_t x = prev_row[y];
        const std::size_t vacated = col_of[x];
        col_of[x] = y;
        row_of[y] = x;
        if (x == start) break;
        y = vacated;
      }
      col_of[i] = j;
      row_of[j] = i;
      break;
    }
    fixed[i] = true;
  }
}

}  // namespace

Assignment solve_assignment(std::size_t rows, std::size_t cols,
                            std::span<const std::int64_t> cost) {
  if (cost.size() != rows * cols) {
    throw Error(ErrorCode::kInvalidParameter, "assignment cost matrix has the wrong size");
  }
  Assignment out;
  out.row_to_col.assign(rows, std::nullopt);
  const std::size_t n = std::max(rows, cols);
  if (n == 0) return out;

  std::vector<std::int64_t> square(n * n, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy_n(cost.begin() + static_cast<std::ptrdiff_t>(i * cols), cols,
                square.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  SquareSolution s = hungarian(n, square);
  lexicographic_refine(n, square, s);

  for (std::size_t i = 0; i < rows; ++i) {
    if (s.row_to_col[i] < cols) {
      out.row_to_col[i] = s.row_to_col[i];
      out.total_cost += cost[i * cols + s.row_to_col[i]];
    }
  }
  return out;
}

}  // namespace segeval
