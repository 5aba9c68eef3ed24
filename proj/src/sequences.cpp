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

#include "segeval/sequences.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "segeval/error.hpp"

namespace segeval {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

// Trims surrounding blanks and rejects whitespace inside the token.
Token trim_token(std::string_view raw, std::size_t line, std::size_t column) {
  std::size_t b = 0;
  while (b < raw.size() && is_space(raw[b])) ++b;
  std::size_t e = raw.size();
  while (e > b && is_space(raw[e - 1])) --e;
  std::string_view body = raw.substr(b, e - b);
  for (std::size_t k = 0; k < body.size(); ++k) {
    if (is_space(body[k])) {
      throw ParseError(line, column + b + k, "whitespace inside label token");
    }
  }
  return {body, line, column + b};
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_space);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  while (!lines.empty() && blank(lines.back())) lines.pop_back();
  return lines;
}

std::vector<std::string> tokens_one_per_line(std::string_view text) {
  std::vector<std::string> out;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (blank(lines[i])) throw ParseError(line_no, 1, "empty line inside label sequence");
    Token tok = trim_token(lines[i], line_no, 1);
    if (auto comma = tok.text.find(','); comma != std::string_view::npos) {
      throw ParseError(line_no, tok.column + comma,
                       "unexpected ',' in one-per-line input (use comma-separated format)");
    }
    out.emplace_back(tok.text);
  }
  return out;
}

std::vector<std::string> tokens_comma_separated(std::string_view text) {
  std::vector<std::string> out;
  const auto lines = split_lines(text);
  std::size_t content_line = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    if (content_line != 0) {
      throw ParseError(i + 1, 1, "comma-separated input must be a single line");
    }
    content_line = i + 1;
  }
  if (content_line == 0) return out;
  std::string_view line = lines[content_line - 1];
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    std::string_view raw = line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos);
    Token tok = trim_token(raw, content_line, pos + 1);
    if (tok.text.empty()) throw ParseError(content_line, pos + 1, "empty label token");
    out.emplace_back(tok.text);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

StateSequence::StateSequence(std::vector<StateId> ids, std::vector<std::string> names)
    : ids_(std::move(ids)), names_(std::move(names)) {
  if (ids_.empty()) throw Error(ErrorCode::kEmptySequence, "label sequence is empty");
  if (ids_.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
    throw Error(ErrorCode::kInvalidParameter, "label sequence longer than 2^31-1 samples");
  }
  StateId hi = -1;
  for (StateId id : ids_) {
    if (id < 0) throw Error(ErrorCode::kInvalidParameter, "state ids must be non-negative");
    hi = std::max(hi, id);
  }
  bound_ = hi + 1;
}

StateSequence StateSequence::from_ids(std::vector<StateId> ids) {
  return StateSequence(std::move(ids), {});
}

StateSequence StateSequence::densify(std::span<const StateId> raw) {
  std::unordered_map<StateId, StateId> dense;
  std::vector<StateId> ids;
  std::vector<std::string> names;
  ids.reserve(raw.size());
  for (StateId r : raw) {
    auto [it, inserted] = dense.try_emplace(r, static_cast<StateId>(dense.size()));
    if (inserted) names.push_back(std::to_string(r));
    ids.push_back(it->second);
  }
  return StateSequence(std::move(ids), std::move(names));
}

StateSequence StateSequence::from_tokens(std::span<const std::string> tokens) {
  std::unordered_map<std::string, StateId> dense;
  std::vector<StateId> ids;
  std::vector<std::string> names;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto [it, inserted] = dense.try_emplace(t, static_cast<StateId>(dense.size()));
    if (inserted) names.push_back(t);
    ids.push_back(it->second);
  }
  return StateSequence(std::move(ids), std::move(names));
}

std::vector<StateId> StateSequence::distinct_labels() const {
  std::vector<bool> seen(static_cast<std::size_t>(bound_), false);
  for (StateId id : ids_) seen[static_cast<std::size_t>(id)] = true;
  std::vector<StateId> out;
  for (StateId id = 0; id < bound_; ++id) {
    if (seen[static_cast<std::size_t>(id)]) out.push_back(id);
  }
  return out;
}

std::size_t StateSequence::distinct_count() const { return distinct_labels().size(); }

std::optional<std::string_view> StateSequence::name_of(StateId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= names_.size()) return std::nullopt;
  return names_[static_cast<std::size_t>(id)];
}

StateSequence parse_label_sequence(std::string_view text, LabelFormat format) {
  if (blank(text)) throw Error(ErrorCode::kEmptySequence, "label input is empty");
  std::vector<std::string> tokens = format == LabelFormat::kOnePerLine
                                        ? tokens_one_per_line(text)
                                        : tokens_comma_separated(text);
  if (tokens.empty()) throw Error(ErrorCode::kEmptySequence, "label input is empty");
  return StateSequence::from_tokens(tokens);
}

StateSequence read_label_file(const std::filesystem::path& path, LabelFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open label file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_label_sequence(buf.str(), format);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) {
      throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
    }
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

ChangePointList change_points(const StateSequence& seq) {
  ChangePointList cps;
  const auto labels = seq.labels();
  for (std::size_t c = 1; c < labels.size(); ++c) {
    if (labels[c - 1] != labels[c]) cps.positions.push_back(c);
  }
  return cps;
}

std::vector<Segment> segments(const StateSequence& seq) {
  std::vector<Segment> out;
  const auto labels = seq.labels();
  std::size_t start = 0;
  for (std::size_t k = 1; k <= labels.size(); ++k) {
    if (k == labels.size() || labels[k] != labels[start]) {
      out.push_back({start, k - 1, labels[start]});
      start = k;
    }
  }
  return out;
}

std::vector<std::int32_t> distance_to_nearest_cp(const StateSequence& seq) {
  const auto labels = seq.labels();
  const std::size_t n = labels.size();
  std::vector<std::int32_t> d(n, 0);

  std::vector<bool> flank(n, false);
  bool any = false;
  for (std::size_t c = 1; c < n; ++c) {
    if (labels[c - 1] != labels[c]) {
      flank[c - 1] = flank[c] = true;
      any = true;
    }
  }
  if (!any) return d;

  // Two sweeps of a 1-D distance transform to the flanking samples.
  constexpr std::int32_t kFar = std::numeric_limits<std::int32_t>::max();
  std::int32_t run = kFar;
  for (std::size_t k = 0; k < n; ++k) {
    run = flank[k] ? 0 : (run == kFar ? kFar : run + 1);
    d[k] = run;
  }
  run = kFar;
  for (std::size_t k = n; k-- > 0;) {
    run = flank[k] ? 0 : (run == kFar ? kFar : run + 1);
    d[k] = std::min(d[k], run);
  }
  return d;
}

}  // namespace segeval
