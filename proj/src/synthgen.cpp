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

#include "segeval/synthgen.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <variant>

#include "segeval/error.hpp"

namespace segeval {
namespace {

struct Placement {
  std::size_t start;
  std::size_t end;
  StateId label;
};

std::size_t segment_index(const std::vector<Segment>& segs, std::size_t k) {
  auto it = std::upper_bound(segs.begin(), segs.end(), k,
                             [](std::size_t x, const Segment& s) { return x < s.start; });
  return static_cast<std::size_t>(it - segs.begin()) - 1;
}

// Geometric feasibility and the label to paint; a reason string otherwise.
std::variant<Placement, std::string> locate(const StateSequence& gt,
                                            const std::vector<Segment>& segs, ErrorType kind,
                                            std::size_t start, std::size_t length,
                                            std::optional<StateId> label) {
  const std::size_t n = gt.size();
  if (length == 0) return std::string("corruption length must be positive");
  if (start >= n || length > n - start) {
    return "block [" + std::to_string(start) + ", " + std::to_string(start + length - 1) +
           "] exceeds the sequence length " + std::to_string(n);
  }
  const std::size_t end = start + length - 1;
  const std::size_t si = segment_index(segs, start);
  const std::size_t ei = segment_index(segs, end);
  const StateId fresh = gt.label_bound();
  if (label) {
    if (kind == ErrorType::kDelay) return std::string("a delay takes the adjacent segment's label");
    if (*label < 0) return std::string("corruption label must be non-negative");
    for (std::size_t k = start; k <= end; ++k) {
      if (gt[k] == *label) return std::string("corruption label must differ from the ground truth on the block");
    }
  }

  switch (kind) {
    case ErrorType::kDelay: {
      if (segs.size() < 2) return std::string("delay requires a ground-truth change point");
      if (si != ei) return std::string("delay must stay inside one ground-truth segment");
      if (si > 0 && start == segs[si].start) return Placement{start, end, segs[si - 1].label};
      if (si + 1 < segs.size() && end == segs[si].end) return Placement{start, end, segs[si + 1].label};
      return std::string("delay must start at, or end just before, a ground-truth change point");
    }
    case ErrorType::kIsolation:
      if (si != ei || start == segs[si].start || end == segs[si].end) {
        return std::string("isolation must lie strictly inside one ground-truth segment");
      }
      return Placement{start, end, label.value_or(fresh)};
    case ErrorType::kTransition:
      if (ei != si + 1) return std::string("transition must cover exactly one ground-truth change point");
      return Placement{start, end, label.value_or(fresh)};
    case ErrorType::kMissing: {
      std::set<StateId> inside;
      for (std::size_t s = si; s <= ei; ++s) inside.insert(segs[s].label);
      if (inside.size() < 3) return std::string("missing must cover three or more distinct states");
      if (label) return Placement{start, end, *label};
      if (start > 0 && inside.count(gt[start - 1]) == 0) return Placement{start, end, gt[start - 1]};
      if (end + 1 < n && inside.count(gt[end + 1]) == 0) return Placement{start, end, gt[end + 1]};
      return Placement{start, end, fresh};
    }
  }
  return std::string("unknown corruption kind");
}

std::vector<StateId> paint(const StateSequence& gt, const Placement& p) {
  std::vector<StateId> out(gt.labels().begin(), gt.labels().end());
  std::fill(out.begin() + static_cast<std::ptrdiff_t>(p.start),
            out.begin() + static_cast<std::ptrdiff_t>(p.end) + 1, p.label);
  return out;
}

// Empty string when the painted prediction yields exactly the intended block.
std::string survives_alignment(const StateSequence& gt, ErrorType kind, const Placement& p) {
  const SmsReport r = sms(gt, StateSequence::from_ids(paint(gt, p)));
  if (r.blocks.size() == 1 && r.blocks[0].start == p.start && r.blocks[0].end == p.end &&
      r.blocks[0].type == kind) {
    return {};
  }
  return "the optimal state mapping does not reproduce a single " + std::string(to_string(kind)) +
         " block on [" + std::to_string(p.start) + ", " + std::to_string(p.end) + "]";
}

std::string describe(const CorruptionSpec& spec) {
  return std::string(to_string(spec.kind)) + " of length " + std::to_string(spec.length);
}

[[noreturn]] void infeasible(const CorruptionSpec& spec, const std::string& reason) {
  throw Error(ErrorCode::kInvalidSpec, "infeasible " + describe(spec) + ": " + reason);
}

}  // namespace

StateSequence make_ground_truth(std::span<const std::size_t> segment_lengths,
                                std::span<const StateId> labels) {
  if (segment_lengths.empty()) throw Error(ErrorCode::kInvalidSpec, "no segments given");
  if (!labels.empty() && labels.size() != segment_lengths.size()) {
    throw Error(ErrorCode::kInvalidSpec, "need one label per segment");
  }
  std::vector<StateId> ids;
  for (std::size_t s = 0; s < segment_lengths.size(); ++s) {
    if (segment_lengths[s] == 0) throw Error(ErrorCode::kInvalidSpec, "segment lengths must be positive");
    const StateId label = labels.empty() ? static_cast<StateId>(s) : labels[s];
    if (label < 0) throw Error(ErrorCode::kInvalidSpec, "segment labels must be non-negative");
    if (s > 0 && !labels.empty() && labels[s - 1] == label) {
      throw Error(ErrorCode::kInvalidSpec,
                  "adjacent segments " + std::to_string(s - 1) + " and " + std::to_string(s) +
                      " share label " + std::to_string(label));
    }
    ids.insert(ids.end(), segment_lengths[s], label);
  }
  return StateSequence::from_ids(std::move(ids));
}

CorruptionSpec place_corruption(const StateSequence& gt, const CorruptionSpec& spec) {
  const auto segs = segments(gt);
  if (spec.position) {
    auto loc = locate(gt, segs, spec.kind, *spec.position, spec.length, spec.label);
    if (auto* reason = std::get_if<std::string>(&loc)) infeasible(spec, *reason);
    if (auto reason = survives_alignment(gt, spec.kind, std::get<Placement>(loc)); !reason.empty()) {
      infeasible(spec, reason);
    }
    return spec;
  }

  std::vector<Placement> candidates;
  std::string last_reason = "no placement fits";
  for (std::size_t s = 0; spec.length > 0 && s + spec.length <= gt.size(); ++s) {
    auto loc = locate(gt, segs, spec.kind, s, spec.length, spec.label);
    if (auto* p = std::get_if<Placement>(&loc)) candidates.push_back(*p);
    else last_reason = std::get<std::string>(loc);
  }
  std::mt19937_64 rng(spec.seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (const Placement& p : candidates) {
    if (survives_alignment(gt, spec.kind, p).empty()) {
      CorruptionSpec out = spec;
      out.position = p.start;
      return out;
    }
  }
  infeasible(spec, candidates.empty() ? last_reason : "no placement survives state alignment");
}

StateSequence inject_error(const StateSequence& gt, const CorruptionSpec& spec) {
  const CorruptionSpec placed = place_corruption(gt, spec);
  auto loc = locate(gt, segments(gt), placed.kind, *placed.position, placed.length, placed.label);
  return StateSequence::from_ids(paint(gt, std::get<Placement>(loc)));
}

std::string_view to_string(SweepAxis a) noexcept {
  switch (a) {
    case SweepAxis::kLength: return "length";
    case SweepAxis::kPosition: return "position";
    case SweepAxis::kType: return "type";
  }
  return "unknown";
}

std::optional<SweepAxis> parse_sweep_axis(std::string_view name) noexcept {
  for (SweepAxis a : {SweepAxis::kLength, SweepAxis::kPosition, SweepAxis::kType}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

std::vector<SweepRow> sweep(const StateSequence& gt, SweepAxis axis,
                            std::span<const CorruptionSpec> grid,
                            std::span<const MeasureKind> measures, const EvalConfig& config) {
  if (grid.empty()) throw Error(ErrorCode::kInvalidSpec, "sweep grid is empty");
  if (measures.empty()) throw Error(ErrorCode::kInvalidSpec, "sweep needs at least one measure");
  const CorruptionSpec& first = grid.front();
  for (const CorruptionSpec& s : grid) {
    const bool same_kind = s.kind == first.kind;
    const bool same_length = s.length == first.length;
    const bool same_position = s.position == first.position;
    bool ok = true;
    switch (axis) {
      case SweepAxis::kLength: ok = same_kind && same_position; break;
      case SweepAxis::kPosition: ok = same_kind && same_length; break;
      case SweepAxis::kType: ok = same_length; break;
    }
    if (!ok) {
      throw Error(ErrorCode::kInvalidSpec, "grid entries vary along more than the '" +
                                               std::string(to_string(axis)) + "' axis");
    }
  }

  EvalConfig cfg = config;
  cfg.measures.assign(measures.begin(), measures.end());
  std::vector<SweepRow> rows;
  rows.reserve(grid.size() * measures.size());
  for (const CorruptionSpec& s : grid) {
    const CorruptionSpec placed = place_corruption(gt, s);
    const EvaluationReport report = evaluate(gt, inject_error(gt, placed), cfg);
    for (MeasureKind m : measures) rows.push_back({placed, m, *report.score(m)});
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  const StateSequence gt = make_ground_truth(spec.segments, spec.labels);
  return sweep(gt, spec.axis, spec.grid, spec.measures, spec.config);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "kind,length,position,measure,score\n";
  char score[32];
  for (const SweepRow& r : rows) {
    std::snprintf(score, sizeof score, "%.6g", r.score);
    out << to_string(r.spec.kind) << ',' << r.spec.length << ',' << r.spec.position.value_or(0)
        << ',' << to_string(r.measure) << ',' << score << '\n';
  }
}

SyntheticPair random_fixture(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };

  const std::size_t n_segments = uniform(3, 8);
  const auto n_states = static_cast<StateId>(uniform(2, std::min<std::size_t>(5, n_segments)));
  std::vector<std::size_t> lengths(n_segments);
  std::vector<StateId> labels(n_segments);
  for (std::size_t s = 0; s < n_segments; ++s) {
    lengths[s] = uniform(30, 150);
    do {
      labels[s] = static_cast<StateId>(uniform(0, static_cast<std::size_t>(n_states) - 1));
    } while (s > 0 && labels[s] == labels[s - 1]);
  }
  StateSequence gt = StateSequence::densify(make_ground_truth(lengths, labels).labels());
  const auto segs = segments(gt);

  std::vector<StateId> pred(gt.labels().begin(), gt.labels().end());
  std::vector<bool> touched(gt.size(), false);
  const std::size_t n_errors = uniform(1, 4);
  std::size_t placed = 0;
  for (std::size_t attempt = 0; placed < n_errors && attempt < 64; ++attempt) {
    const auto kind = kErrorTypes[uniform(0, 3)];
    // Missing blocks must swallow a whole segment, so they get a longer range.
    const std::size_t max_length = kind == ErrorType::kMissing ? gt.size() / 8 : gt.size() / 40;
    const std::size_t length = uniform(1, std::max<std::size_t>(1, max_length));
    std::vector<Placement> options;
    for (std::size_t s = 0; s + length <= gt.size(); ++s) {
      auto loc = locate(gt, segs, kind, s, length, std::nullopt);
      auto* p = std::get_if<Placement>(&loc);
      if (p == nullptr) continue;
      const std::size_t lo = p->start > 0 ? p->start - 1 : 0;
      const std::size_t hi = std::min(p->end + 1, gt.size() - 1);
      bool clear = true;
      for (std::size_t k = lo; k <= hi && clear; ++k) clear = !touched[k];
      if (clear) options.push_back(*p);
    }
    if (options.empty()) continue;
    const Placement& p = options[uniform(0, options.size() - 1)];
    for (std::size_t k = p.start; k <= p.end; ++k) {
      pred[k] = p.label;
      touched[k] = true;
    }
    ++placed;
  }
  return {std::move(gt), StateSequence::from_ids(std::move(pred))};
}

}  // namespace segeval
