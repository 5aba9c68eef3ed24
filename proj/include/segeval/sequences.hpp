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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace segeval {

using StateId = std::int32_t;

enum class LabelFormat { kOnePerLine, kCommaSeparated };

// A length-N sequence of discrete state ids.
//
// Sequences built from tokens (parse_label_sequence, from_tokens, densify)
// carry dense ids 0..K-1 in first-appearance order. from_ids keeps the
// caller's ids verbatim; mapped predictions use this to carry fresh ids.
class StateSequence {
 public:
  static StateSequence from_ids(std::vector<StateId> ids);
  static StateSequence densify(std::span<const StateId> raw);
  static StateSequence from_tokens(std::span<const std::string> tokens);

  std::size_t size() const noexcept { return ids_.size(); }
  std::span<const StateId> labels() const noexcept { return ids_; }
  StateId operator[](std::size_t k) const noexcept { return ids_[k]; }

  // One past the largest id present; rows/columns of contingency tables.
  StateId label_bound() const noexcept { return bound_; }
  // Sorted distinct ids present.
  std::vector<StateId> distinct_labels() const;
  std::size_t distinct_count() const;

  // Original token for a dense id, when the sequence came from text.
  std::optional<std::string_view> name_of(StateId id) const;
  std::span<const std::string> label_names() const noexcept { return names_; }

  friend bool operator==(const StateSequence& a, const StateSequence& b) {
    return a.ids_ == b.ids_;
  }

 private:
  StateSequence(std::vector<StateId> ids, std::vector<std::string> names);

  std::vector<StateId> ids_;
  std::vector<std::string> names_;
  StateId bound_ = 0;
};

// Inclusive on both ends.
struct Segment {
  std::size_t start = 0;
  std::size_t end = 0;
  StateId label = 0;

  std::size_t length() const noexcept { return end - start + 1; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Position c is the first index of the new segment: labels[c-1] != labels[c].
struct ChangePointList {
  std::vector<std::size_t> positions;

  std::size_t size() const noexcept { return positions.size(); }
  bool empty() const noexcept { return positions.empty(); }
  auto begin() const noexcept { return positions.begin(); }
  auto end() const noexcept { return positions.end(); }
  friend bool operator==(const ChangePointList&, const ChangePointList&) = default;
};

StateSequence parse_label_sequence(std::string_view text,
                                   LabelFormat format = LabelFormat::kOnePerLine);
StateSequence read_label_file(const std::filesystem::path& path,
                              LabelFormat format = LabelFormat::kOnePerLine);

ChangePointList change_points(const StateSequence& seq);
std::vector<Segment> segments(const StateSequence& seq);

// d[k] = distance from k to the nearest sample flanking a transition
// (c-1 or c for each change point c). All zero when there is no change point.
std::vector<std::int32_t> distance_to_nearest_cp(const StateSequence& seq);

}  // namespace segeval
