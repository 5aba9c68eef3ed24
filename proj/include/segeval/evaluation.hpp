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

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "segeval/changepoint_measures.hpp"
#include "segeval/sequences.hpp"
#include "segeval/sms.hpp"

namespace segeval {

enum class MeasureKind { kF1, kCovering, kAri, kNmi, kWari, kWnmi, kSms };

inline constexpr std::array<MeasureKind, 7> kAllMeasures{
    MeasureKind::kF1,   MeasureKind::kCovering, MeasureKind::kAri, MeasureKind::kNmi,
    MeasureKind::kWari, MeasureKind::kWnmi,     MeasureKind::kSms};

std::string_view to_string(MeasureKind m) noexcept;
std::optional<MeasureKind> parse_measure(std::string_view name) noexcept;

struct EvalConfig {
  double alpha = 0.1;
  PenaltyWeights weights{};
  std::optional<std::size_t> margin;  // nullopt: default_margin(N)
  std::vector<MeasureKind> measures{kAllMeasures.begin(), kAllMeasures.end()};

  std::size_t resolved_margin(std::size_t n) const {
    return margin ? *margin : default_margin(n);
  }
  bool wants(MeasureKind m) const;
  void validate() const;
};

struct EvaluationReport {
  std::size_t n = 0;
  double alpha = 0.0;
  PenaltyWeights weights{};
  std::size_t margin = 0;
  std::vector<MeasureKind> measures;

  std::optional<F1Result> f1;
  std::optional<double> covering;
  std::optional<double> ari;
  std::optional<double> nmi;
  std::optional<double> wari;
  std::optional<double> wnmi;
  std::optional<SmsReport> sms;

  // Headline value of a measure (f1 for F1, score for SMS).
  std::optional<double> score(MeasureKind m) const;
};

EvaluationReport evaluate(const StateSequence& gt, const StateSequence& pred,
                          const EvalConfig& config = {});

}  // namespace segeval
