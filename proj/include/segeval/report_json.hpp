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

#include <string_view>

#include <nlohmann/json.hpp>

#include "segeval/evaluation.hpp"
#include "segeval/sms.hpp"
#include "segeval/synthgen.hpp"

namespace segeval::json_io {

inline constexpr std::string_view kSchema = "seg-eval/1";

// Rounds to 6 significant digits; every double written by the tools goes
// through this.
double round6(double x);

nlohmann::json to_json(const SmsReport& r);
nlohmann::json to_json(const EvaluationReport& r);
nlohmann::json to_json(const ErrorSummary& s);

// Accepts either a full evaluation document (reads its "sms" member) or a
// bare SMS report object.
SmsReport sms_report_from_json(const nlohmann::json& j);

// Overrides the fields present in j: alpha, weights {delay, transition,
// isolation, missing} (or flat w_delay, ...), margin (integer or "auto"),
// measures (array or comma-separated string).
void apply_config(const nlohmann::json& j, EvalConfig& config);

std::vector<MeasureKind> parse_measure_list(std::string_view csv);

// {"segments": [...], "labels": [...]?, "axis": "length", "grid": [{"kind",
//  "length", "position"?, "seed"?}], "measures": [...]?, plus config keys}
SweepSpec sweep_spec_from_json(const nlohmann::json& j, const EvalConfig& base = {});

}  // namespace segeval::json_io
