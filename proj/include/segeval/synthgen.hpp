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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "segeval/evaluation.hpp"
#include "segeval/sequences.hpp"
#include "segeval/sms.hpp"

namespace segeval {

// Concatenated constant runs. Labels default to 0, 1, 2, ...; when given
// they must be non-negative and differ between adjacent segments.
StateSequence make_ground_truth(std::span<const std::size_t> segment_lengths,
                                std::span<const StateId> labels = {});

// One controlled error on the block [position, position + length - 1].
//
//   delay       block sits at one end of a segment and takes the label of
//               the adjacent segment (late or early boundary)
//   isolation   block lies strictly inside one segment, new label
//   transition  block covers exactly one change point, new label
//   missing     block covers three or more distinct states and takes the
//               label of a neighbouring sample outside the block
//
// Without a position, one is drawn from the feasible placements using seed.
// label overrides the painted label of isolation, transition and missing
// blocks (default: an unused id for the first two, a neighbour for missing).
struct CorruptionSpec {
  ErrorType kind = ErrorType::kDelay;
  std::size_t length = 1;
  std::optional<std::size_t> position;
  std::uint64_t seed = 0;
  std::optional<StateId> label;

  friend bool operator==(const CorruptionSpec&, const CorruptionSpec&) = default;
};

// Fills in the position (drawing it when absent) after checking that the
// corruption, once injected, survives state alignment as exactly one block
// of the requested kind and length. Throws kInvalidSpec otherwise.
CorruptionSpec place_corruption(const StateSequence& gt, const CorruptionSpec& spec);

// Prediction equal to gt except on the corrupted block.
StateSequence inject_error(const StateSequence& gt, const CorruptionSpec& spec);

enum class SweepAxis { kLength, kPosition, kType };

std::string_view to_string(SweepAxis a) noexcept;
std::optional<SweepAxis> parse_sweep_axis(std::string_view name) noexcept;

struct SweepRow {
  CorruptionSpec spec;  // with the resolved position
  MeasureKind measure;
  double score;
};

// One row per (spec, measure), in grid order then measure order. The axis
// names what varies: specs must agree on everything else (kind and position
// for a length sweep, kind and length for a position sweep, length for a
// type sweep).
std::vector<SweepRow> sweep(const StateSequence& gt, SweepAxis axis,
                            std::span<const CorruptionSpec> grid,
                            std::span<const MeasureKind> measures, const EvalConfig& config = {});

// A whole sweep experiment, as read from a sweep description file.
struct SweepSpec {
  std::vector<std::size_t> segments;
  std::vector<StateId> labels;
  SweepAxis axis = SweepAxis::kLength;
  std::vector<CorruptionSpec> grid;
  std::vector<MeasureKind> measures;
  EvalConfig config{};
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Columns: kind,length,position,measure,score. Scores use 6 significant digits.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

struct SyntheticPair {
  StateSequence gt;
  StateSequence pred;
};

// Ground truth with 3-8 segments over up to 5 recurring states and a
// prediction carrying 1-4 random non-overlapping corruptions of mixed kinds.
SyntheticPair random_fixture(std::uint64_t seed);

}  // namespace segeval
