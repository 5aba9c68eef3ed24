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

#include "segeval/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "segeval/clustering_measures.hpp"
#include "segeval/error.hpp"

namespace segeval {

std::string_view to_string(MeasureKind m) noexcept {
  switch (m) {
    case MeasureKind::kF1: return "f1";
    case MeasureKind::kCovering: return "covering";
    case MeasureKind::kAri: return "ari";
    case MeasureKind::kNmi: return "nmi";
    case MeasureKind::kWari: return "wari";
    case MeasureKind::kWnmi: return "wnmi";
    case MeasureKind::kSms: return "sms";
  }
  return "unknown";
}

std::optional<MeasureKind> parse_measure(std::string_view name) noexcept {
  for (MeasureKind m : kAllMeasures) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

bool EvalConfig::wants(MeasureKind m) const {
  return std::find(measures.begin(), measures.end(), m) != measures.end();
}

void EvalConfig::validate() const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidParameter, "alpha must be a finite non-negative number");
  }
  weights.validate();
  if (measures.empty()) throw Error(ErrorCode::kInvalidParameter, "no measures requested");
}

std::optional<double> EvaluationReport::score(MeasureKind m) const {
  switch (m) {
    case MeasureKind::kF1: return f1 ? std::optional(f1->f1) : std::nullopt;
    case MeasureKind::kCovering: return covering;
    case MeasureKind::kAri: return ari;
    case MeasureKind::kNmi: return nmi;
    case MeasureKind::kWari: return wari;
    case MeasureKind::kWnmi: return wnmi;
    case MeasureKind::kSms: return sms ? std::optional(sms->score) : std::nullopt;
  }
  return std::nullopt;
}

EvaluationReport evaluate(const StateSequence& gt, const StateSequence& pred,
                          const EvalConfig& config) {
  require_equal_length(gt.size(), pred.size());
  config.validate();

  EvaluationReport r;
  r.n = gt.size();
  r.alpha = config.alpha;
  r.weights = config.weights;
  r.margin = config.resolved_margin(r.n);
  for (MeasureKind m : kAllMeasures) {
    if (config.wants(m)) r.measures.push_back(m);
  }

  if (config.wants(MeasureKind::kF1)) {
    r.f1 = f1_margin(change_points(gt), change_points(pred), r.margin);
  }
  if (config.wants(MeasureKind::kCovering)) r.covering = covering(gt, pred);

  const bool plain = config.wants(MeasureKind::kAri) || config.wants(MeasureKind::kNmi);
  if (plain) {
    const ContingencyMatrix c = contingency_matrix(gt, pred);
    if (config.wants(MeasureKind::kAri)) r.ari = ari(c).value;
    if (config.wants(MeasureKind::kNmi)) r.nmi = nmi(c).value;
  }
  const bool weighted = config.wants(MeasureKind::kWari) || config.wants(MeasureKind::kWnmi);
  if (weighted) {
    const ContingencyMatrix c = contingency_matrix(gt, pred, boundary_weights(gt, config.alpha));
    if (config.wants(MeasureKind::kWari)) r.wari = ari(c).value;
    if (config.wants(MeasureKind::kWnmi)) r.wnmi = nmi(c).value;
  }
  if (config.wants(MeasureKind::kSms)) r.sms = sms(gt, pred, config.weights);
  return r;
}

}  // namespace segeval
