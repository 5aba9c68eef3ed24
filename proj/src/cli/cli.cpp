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

#include "segeval/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "segeval/error.hpp"
#include "segeval/evaluation.hpp"
#include "segeval/report_json.hpp"
#include "segeval/sequences.hpp"
#include "segeval/sms.hpp"
#include "segeval/synthgen.hpp"

namespace segeval::cli {
namespace {

using nlohmann::json;

constexpr const char* kConfigEnv = "SEG_EVAL_CONFIG";

struct Flags {
  std::optional<double> alpha;
  std::optional<double> w_delay;
  std::optional<double> w_transition;
  std::optional<double> w_isolation;
  std::optional<double> w_missing;
  std::optional<std::string> margin;
  std::optional<std::string> measures;
  std::string format = "lines";
  std::string out;
};

void add_config_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("--alpha", f.alpha, "Boundary weight slope for wari/wnmi (default 0.1)");
  cmd.add_option("--w-delay", f.w_delay, "Delay penalty weight (default 0.1)");
  cmd.add_option("--w-transition", f.w_transition, "Transition penalty weight (default 0.3)");
  cmd.add_option("--w-isolation", f.w_isolation, "Isolation penalty weight (default 0.8)");
  cmd.add_option("--w-missing", f.w_missing, "Missing penalty weight (default 0.5)");
  cmd.add_option("--margin", f.margin, "F1 margin in samples, or auto");
  cmd.add_option("--measures", f.measures,
                 "Comma-separated subset of f1,covering,ari,nmi,wari,wnmi,sms");
}

void add_format_flag(CLI::App& cmd, Flags& f) {
  cmd.add_option("--format", f.format, "Label file layout: lines or csv")
      ->check(CLI::IsMember({"lines", "csv"}));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidSpec, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidSpec, path + ": invalid JSON: " + e.what());
  }
}

// defaults < SEG_EVAL_CONFIG file
EvalConfig base_config() {
  EvalConfig config;
  if (const char* path = std::getenv(kConfigEnv); path && *path) {
    try {
      json_io::apply_config(read_json_file(path), config);
    } catch (const Error& e) {
      throw Error(e.code(), std::string(kConfigEnv) + ": " + e.what());
    }
  }
  return config;
}

void apply_flags(const Flags& f, EvalConfig& config) {
  if (f.alpha) config.alpha = *f.alpha;
  if (f.w_delay) config.weights.delay = *f.w_delay;
  if (f.w_transition) config.weights.transition = *f.w_transition;
  if (f.w_isolation) config.weights.isolation = *f.w_isolation;
  if (f.w_missing) config.weights.missing = *f.w_missing;
  if (f.margin) {
    if (*f.margin == "auto") {
      config.margin.reset();
    } else {
      std::size_t used = 0;
      long long m = -1;
      try {
        m = std::stoll(*f.margin, &used);
      } catch (const std::exception&) {
      }
      if (m < 0 || used != f.margin->size()) {
        throw Error(ErrorCode::kInvalidParameter, "--margin expects a non-negative integer or auto");
      }
      config.margin = static_cast<std::size_t>(m);
    }
  }
  if (f.measures) config.measures = json_io::parse_measure_list(*f.measures);
}

LabelFormat label_format(const Flags& f) {
  return f.format == "csv" ? LabelFormat::kCommaSeparated : LabelFormat::kOnePerLine;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw Error(ErrorCode::kInvalidParameter, out_path + ": cannot open for writing");
  file << text;
  if (!file) throw Error(ErrorCode::kInvalidParameter, out_path + ": write failed");
}

std::string format_score(std::optional<double> x) {
  if (!x) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", *x);
  return buf;
}

int cmd_evaluate(const std::string& gt_path, const std::string& pred_path, const Flags& f,
                 std::ostream& out) {
  EvalConfig config = base_config();
  apply_flags(f, config);
  const StateSequence gt = read_label_file(gt_path, label_format(f));
  const StateSequence pred = read_label_file(pred_path, label_format(f));
  const EvaluationReport report = evaluate(gt, pred, config);
  emit(json_io::to_json(report).dump(2) + "\n", f.out, out);
  return kExitOk;
}

int cmd_compare(const std::string& gt_path, const std::vector<std::string>& pred_paths,
                const Flags& f, std::ostream& out) {
  EvalConfig config = base_config();
  apply_flags(f, config);
  config.validate();
  const StateSequence gt = read_label_file(gt_path, label_format(f));

  std::vector<std::future<EvaluationReport>> jobs;
  jobs.reserve(pred_paths.size());
  for (const std::string& path : pred_paths) {
    jobs.push_back(std::async(std::launch::async, [&gt, &config, &f, path] {
      return evaluate(gt, read_label_file(path, label_format(f)), config);
    }));
  }
  std::vector<EvaluationReport> reports;
  reports.reserve(jobs.size());
  std::optional<Error> failure;
  for (auto& job : jobs) {
    try {
      reports.push_back(job.get());
    } catch (const Error& e) {
      if (!failure) failure = e;
    }
  }
  if (failure) throw *failure;

  std::ostringstream csv;
  csv << "prediction";
  for (MeasureKind m : reports.front().measures) csv << ',' << to_string(m);
  csv << '\n';
  for (std::size_t i = 0; i < reports.size(); ++i) {
    csv << pred_paths[i];
    for (MeasureKind m : reports[i].measures) csv << ',' << format_score(reports[i].score(m));
    csv << '\n';
  }
  emit(csv.str(), f.out, out);
  return kExitOk;
}

// defaults < SEG_EVAL_CONFIG < sweep file < flags
int cmd_sweep(const std::string& spec_path, const std::string& out_path, const Flags& f,
              std::ostream& out) {
  SweepSpec spec = json_io::sweep_spec_from_json(read_json_file(spec_path), base_config());
  apply_flags(f, spec.config);
  if (f.measures) spec.measures = spec.config.measures;
  const std::vector<SweepRow> rows = run_sweep(spec);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  emit(csv.str(), out_path.empty() ? f.out : out_path, out);
  return kExitOk;
}

int cmd_report(const std::vector<std::string>& paths, const Flags& f, std::ostream& out) {
  std::vector<SmsReport> reports;
  reports.reserve(paths.size());
  for (const std::string& path : paths) {
    try {
      reports.push_back(json_io::sms_report_from_json(read_json_file(path)));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kInvalidSpec, path + ": " + e.what());
    } catch (const Error& e) {
      const std::string msg = e.what();
      if (msg.rfind(path, 0) == 0) throw;
      throw Error(e.code(), path + ": " + msg);
    }
  }
  const ErrorSummary summary = error_report(reports);
  emit(json_io::to_json(summary).dump(2) + "\n", f.out, out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate time-series segmentations against ground truth", "seg_eval"};
  app.require_subcommand(1);

  Flags f;
  std::string gt_path;
  std::string pred_path;
  std::vector<std::string> paths;
  std::string out_path;

  CLI::App* evaluate_cmd = app.add_subcommand("evaluate", "Score one prediction, JSON report");
  evaluate_cmd->add_option("gt", gt_path, "Ground-truth label file")->required();
  evaluate_cmd->add_option("pred", pred_path, "Predicted label file")->required();
  add_config_flags(*evaluate_cmd, f);
  add_format_flag(*evaluate_cmd, f);
  evaluate_cmd->add_option("--out", f.out, "Write to this file instead of stdout");

  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Score several predictions, one CSV row each");
  compare_cmd->add_option("gt", gt_path, "Ground-truth label file")->required();
  compare_cmd->add_option("preds", paths, "Predicted label files")->required();
  add_config_flags(*compare_cmd, f);
  add_format_flag(*compare_cmd, f);
  compare_cmd->add_option("--out", f.out, "Write to this file instead of stdout");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run a synthetic corruption sweep, CSV rows");
  sweep_cmd->add_option("spec", gt_path, "Sweep description (JSON)")->required();
  sweep_cmd->add_option("out_path", out_path, "Output CSV file (default stdout)");
  add_config_flags(*sweep_cmd, f);
  sweep_cmd->add_option("--out", f.out, "Write to this file instead of stdout");

  CLI::App* report_cmd =
      app.add_subcommand("report", "Aggregate error types over evaluation JSON files");
  report_cmd->add_option("reports", paths, "Evaluation or SMS report JSON files")->required();
  report_cmd->add_option("--out", f.out, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = e.get_exit_code();
    if (code == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "seg_eval: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*evaluate_cmd) return cmd_evaluate(gt_path, pred_path, f, out);
    if (*compare_cmd) return cmd_compare(gt_path, paths, f, out);
    if (*sweep_cmd) return cmd_sweep(gt_path, out_path, f, out);
    return cmd_report(paths, f, out);
  } catch (const Error& e) {
    err << "seg_eval: " << e.what() << '\n';
  } catch (const json::exception& e) {
    err << "seg_eval: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "seg_eval: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace segeval::cli
