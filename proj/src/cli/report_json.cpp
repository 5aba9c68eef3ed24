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

#include "segeval/report_json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "segeval/error.hpp"

namespace segeval::json_io {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kInvalidSpec, what);
}

json number_or_null(const std::optional<double>& x) {
  return x ? json(round6(*x)) : json(nullptr);
}

double get_double(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) bad(std::string("expected a number for '") + key + "'");
  return j.at(key).get<double>();
}

std::size_t get_size(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0) {
    bad(std::string("expected a non-negative integer for '") + key + "'");
  }
  return j.at(key).get<std::size_t>();
}

}  // namespace

double round6(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return std::strtod(buf, nullptr);
}

json to_json(const SmsReport& r) {
  json blocks = json::array();
  for (const ErrorBlock& b : r.blocks) {
    blocks.push_back({
        {"start", b.start},
        {"end", b.end},
        {"length", b.length()},
        {"predicted_label", b.predicted_label},
        {"atomicity", b.atomicity},
        {"type", b.type ? std::string(to_string(*b.type)) : std::string()},
        {"d", number_or_null(b.boundary_distance)},
        {"penalty", round6(b.penalty)},
    });
  }
  json per_type = json::object();
  for (ErrorType t : kErrorTypes) {
    const TypeTotals& tt = r.totals(t);
    per_type[std::string(to_string(t))] = {
        {"count", tt.count}, {"length", tt.length}, {"penalty", round6(tt.penalty)}};
  }
  json mapping = json::array();
  for (const auto& [pred, target] : r.mapping.pairs()) {
    mapping.push_back({{"pred", pred}, {"target", target}, {"fresh", r.mapping.is_fresh(target)}});
  }
  return {
      {"score", round6(r.score)},
      {"n", r.n},
      {"total_error_length", r.total_error_length},
      {"mapping", mapping},
      {"blocks", blocks},
      {"per_type", per_type},
  };
}

json to_json(const EvaluationReport& r) {
  json j = {
      {"schema", std::string(kSchema)},
      {"n", r.n},
      {"config",
       {{"alpha", round6(r.alpha)},
        {"weights",
         {{"delay", round6(r.weights.delay)},
          {"transition", round6(r.weights.transition)},
          {"isolation", round6(r.weights.isolation)},
          {"missing", round6(r.weights.missing)}}},
        {"margin", r.margin}}},
  };
  for (MeasureKind m : r.measures) {
    const std::string key(to_string(m));
    switch (m) {
      case MeasureKind::kF1: {
        json matches = json::array();
        for (const auto& [p, g] : r.f1->matches) matches.push_back({p, g});
        j[key] = {{"f1", round6(r.f1->f1)},
                  {"precision", round6(r.f1->precision)},
                  {"recall", round6(r.f1->recall)},
                  {"margin", r.f1->margin},
                  {"matches", matches}};
        break;
      }
      case MeasureKind::kSms:
        j[key] = to_json(*r.sms);
        break;
      default:
        j[key] = number_or_null(r.score(m));
        break;
    }
  }
  return j;
}

json to_json(const ErrorSummary& s) {
  json per_type = json::object();
  for (ErrorType t : kErrorTypes) {
    const TypeAggregate& a = s.of(t);
    per_type[std::string(to_string(t))] = {{"mean_count", round6(a.mean_count)},
                                           {"mean_length", round6(a.mean_length)},
                                           {"mean_penalty_share", round6(a.mean_penalty_share)}};
  }
  return {{"schema", std::string(kSchema)},
          {"reports", s.reports},
          {"mean_sms", round6(s.mean_score)},
          {"per_type", per_type}};
}

SmsReport sms_report_from_json(const json& doc) {
  const json& j = doc.contains("sms") ? doc.at("sms") : doc;
  if (!j.is_object()) bad("SMS report must be a JSON object");
  SmsReport r;
  r.score = get_double(j, "score");
  r.n = get_size(j, "n");
  if (r.n == 0) bad("SMS report has n = 0");
  r.total_error_length = j.contains("total_error_length") ? get_size(j, "total_error_length") : 0;

  if (j.contains("blocks")) {
    for (const json& jb : j.at("blocks")) {
      ErrorBlock b;
      b.start = get_size(jb, "start");
      b.end = get_size(jb, "end");
      if (b.end < b.start) bad("error block ends before it starts");
      b.predicted_label = jb.value("predicted_label", 0);
      b.atomicity = jb.contains("atomicity") ? get_size(jb, "atomicity") : 0;
      const auto type = parse_error_type(jb.value("type", std::string()));
      if (!type) bad("unknown error type in block");
      b.type = type;
      if (jb.contains("d") && jb.at("d").is_number()) b.boundary_distance = jb.at("d").get<double>();
      b.penalty = get_double(jb, "penalty");
      r.blocks.push_back(b);
    }
  }

  if (j.contains("per_type")) {
    const json& pt = j.at("per_type");
    for (ErrorType t : kErrorTypes) {
      const std::string key(to_string(t));
      if (!pt.contains(key)) continue;
      TypeTotals& tt = r.per_type[static_cast<std::size_t>(t)];
      tt.count = get_size(pt.at(key), "count");
      tt.length = get_size(pt.at(key), "length");
      tt.penalty = get_double(pt.at(key), "penalty");
    }
  } else {
    for (const ErrorBlock& b : r.blocks) {
      TypeTotals& tt = r.per_type[static_cast<std::size_t>(*b.type)];
      ++tt.count;
      tt.length += b.length();
      tt.penalty += b.penalty;
    }
  }
  if (!j.contains("total_error_length")) {
    for (const TypeTotals& tt : r.per_type) r.total_error_length += tt.length;
  }
  return r;
}

std::vector<MeasureKind> parse_measure_list(std::string_view csv) {
  std::vector<MeasureKind> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view name = csv.substr(pos, comma == csv.npos ? csv.npos : comma - pos);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    auto m = parse_measure(name);
    if (!m) bad("unknown measure '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
    if (comma == csv.npos) break;
    pos = comma + 1;
  }
  return out;
}

void apply_config(const json& j, EvalConfig& config) {
  if (!j.is_object()) bad("configuration must be a JSON object");
  static const char* kWeightKeys[] = {"w_delay", "w_transition", "w_isolation", "w_missing"};
  for (const auto& [key, value] : j.items()) {
    if (key == "alpha") {
      config.alpha = get_double(j, "alpha");
    } else if (key == "weights") {
      if (!value.is_object()) bad("'weights' must be an object");
      for (const auto& [wk, wv] : value.items()) {
        auto t = parse_error_type(wk);
        if (!t || !wv.is_number()) bad("bad entry '" + wk + "' in 'weights'");
        const double w = wv.get<double>();
        switch (*t) {
          case ErrorType::kDelay: config.weights.delay = w; break;
          case ErrorType::kTransition: config.weights.transition = w; break;
          case ErrorType::kIsolation: config.weights.isolation = w; break;
          case ErrorType::kMissing: config.weights.missing = w; break;
        }
      }
    } else if (std::find(std::begin(kWeightKeys), std::end(kWeightKeys), key) != std::end(kWeightKeys)) {
      const double w = get_double(j, key.c_str());
      if (key == "w_delay") config.weights.delay = w;
      else if (key == "w_transition") config.weights.transition = w;
      else if (key == "w_isolation") config.weights.isolation = w;
      else config.weights.missing = w;
    } else if (key == "margin") {
      if (value.is_string() && value.get<std::string>() == "auto") config.margin.reset();
      else config.margin = get_size(j, "margin");
    } else if (key == "measures") {
      if (value.is_string()) {
        config.measures = parse_measure_list(value.get<std::string>());
      } else if (value.is_array()) {
        config.measures.clear();
        for (const json& m : value) {
          auto kind = m.is_string() ? parse_measure(m.get<std::string>()) : std::nullopt;
          if (!kind) bad("unknown measure in 'measures'");
          config.measures.push_back(*kind);
        }
      } else {
        bad("'measures' must be an array or a comma-separated string");
      }
    } else {
      bad("unknown configuration key '" + key + "'");
    }
  }
}

SweepSpec sweep_spec_from_json(const json& j, const EvalConfig& base) {
  if (!j.is_object()) bad("sweep spec must be a JSON object");
  SweepSpec spec;
  spec.config = base;
  json config = json::object();
  for (const auto& [key, value] : j.items()) {
    if (key == "segments") {
      if (!value.is_array()) bad("'segments' must be an array of positive integers");
      for (const json& s : value) {
        if (!s.is_number_integer() || s.get<long long>() <= 0) bad("segment lengths must be positive integers");
        spec.segments.push_back(s.get<std::size_t>());
      }
    } else if (key == "labels") {
      if (!value.is_array()) bad("'labels' must be an array of integers");
      for (const json& l : value) {
        if (!l.is_number_integer()) bad("labels must be integers");
        spec.labels.push_back(l.get<StateId>());
      }
    } else if (key == "axis") {
      auto axis = value.is_string() ? parse_sweep_axis(value.get<std::string>()) : std::nullopt;
      if (!axis) bad("'axis' must be one of length, position, type");
      spec.axis = *axis;
    } else if (key == "grid") {
      if (!value.is_array()) bad("'grid' must be an array");
      for (const json& g : value) {
        CorruptionSpec c;
        auto kind = g.contains("kind") && g.at("kind").is_string()
                        ? parse_error_type(g.at("kind").get<std::string>())
                        : std::nullopt;
        if (!kind) bad("grid entry needs a kind: delay, isolation, transition or missing");
        c.kind = *kind;
        c.length = get_size(g, "length");
        if (g.contains("position")) c.position = get_size(g, "position");
        if (g.contains("seed")) c.seed = get_size(g, "seed");
        if (g.contains("label")) {
          if (!g.at("label").is_number_integer()) bad("grid 'label' must be an integer");
          c.label = g.at("label").get<StateId>();
        }
        spec.grid.push_back(c);
      }
    } else {
      config[key] = value;
    }
  }
  if (spec.segments.empty()) bad("sweep spec needs 'segments'");
  if (spec.grid.empty()) bad("sweep spec needs a non-empty 'grid'");
  apply_config(config, spec.config);
  spec.measures = spec.config.measures;
  return spec;
}

}  // namespace segeval::json_io
