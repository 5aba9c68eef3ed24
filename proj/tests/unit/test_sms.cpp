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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "segeval/error.hpp"
#include "segeval/sms.hpp"

namespace segeval {
namespace {

StateSequence seq(std::vector<StateId> v) { return StateSequence::from_ids(std::move(v)); }

std::vector<StateId> runs(std::initializer_list<std::pair<StateId, std::size_t>> parts) {
  std::vector<StateId> out;
  for (auto [label, n] : parts) out.insert(out.end(), n, label);
  return out;
}

ErrorBlock single_block(const StateSequence& gt, const StateSequence& mapped) {
  const auto blocks = error_blocks(gt, mapped);
  EXPECT_EQ(blocks.size(), 1u);
  return blocks.empty() ? ErrorBlock{} : blocks.front();
}

TEST(ErrorTypeNames, RoundTrip) {
  for (ErrorType t : kErrorTypes) EXPECT_EQ(parse_error_type(to_string(t)), t);
  EXPECT_EQ(parse_error_type("bogus"), std::nullopt);
}

TEST(ErrorBlocks, Examples) {
  EXPECT_TRUE(error_blocks(seq({0, 0, 1, 1}), seq({0, 0, 1, 1})).empty());

  const auto one = error_blocks(seq({0, 0, 0, 1, 1, 1}), seq({0, 0, 1, 1, 1, 1}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].start, 2u);
  EXPECT_EQ(one[0].end, 2u);
  EXPECT_EQ(one[0].atomicity, 1u);

  const auto two = error_blocks(seq({0, 0, 0, 0}), seq({0, 1, 2, 0}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].start, 1u);
  EXPECT_EQ(two[0].end, 1u);
  EXPECT_EQ(two[1].start, 2u);
  EXPECT_EQ(two[1].end, 2u);
}

TEST(ClassifyBlock, FourTypes) {
  {
    const auto gt = seq(runs({{0, 4}, {1, 4}}));
    const auto mapped = seq(runs({{0, 6}, {1, 2}}));
    const auto c = classify_block(gt, mapped, single_block(gt, mapped));
    EXPECT_EQ(c.type, ErrorType::kDelay);
    EXPECT_EQ(c.boundary_distance, std::nullopt);
  }
  {
    const auto gt = seq(runs({{1, 8}}));
    const auto mapped = seq(runs({{1, 3}, {2, 2}, {1, 3}}));
    const auto c = classify_block(gt, mapped, single_block(gt, mapped));
    EXPECT_EQ(c.type, ErrorType::kIsolation);
    // No change point: b_prev = 0, b_next = N, d = 2 min(3, 3) / 8.
    EXPECT_EQ(c.boundary_distance, std::optional<double>(0.75));
  }
  {
    const auto gt = seq(runs({{0, 4}, {1, 4}}));
    const auto mapped = seq(runs({{0, 3}, {2, 2}, {1, 3}}));
    const auto b = single_block(gt, mapped);
    EXPECT_EQ(b.start, 3u);
    EXPECT_EQ(b.end, 4u);
    EXPECT_EQ(b.atomicity, 2u);
    const auto c = classify_block(gt, mapped, b);
    EXPECT_EQ(c.type, ErrorType::kTransition);
    // Only change point is 4, covered by the block: b_prev = 0, b_next = 8.
    EXPECT_EQ(c.boundary_distance, std::optional<double>(2.0 * 3 / 8));
  }
  {
    const auto gt = seq(runs({{0, 2}, {1, 2}, {2, 2}, {3, 2}}));
    const auto mapped = seq(runs({{0, 8}}));
    const auto b = single_block(gt, mapped);
    EXPECT_EQ(b.start, 2u);
    EXPECT_EQ(b.end, 7u);
    EXPECT_EQ(b.atomicity, 3u);
    EXPECT_EQ(classify_block(gt, mapped, b).type, ErrorType::kMissing);
  }
}

TEST(ClassifyBlock, EarlyDelayAndBoundaryDistance) {
  // Prediction switches two samples early: block takes the next label.
  const auto gt = seq(runs({{0, 10}, {1, 10}}));
  const auto early = seq(runs({{0, 8}, {1, 12}}));
  EXPECT_EQ(classify_block(gt, early, single_block(gt, early)).type, ErrorType::kDelay);

  // Isolation at [13, 14] inside [10, 19]: d = 2 min(13 - 10, 20 - 14) / 20.
  auto iso = runs({{0, 10}, {1, 10}});
  iso[13] = iso[14] = 0;
  const auto mapped = seq(iso);
  const auto c = classify_block(gt, mapped, single_block(gt, mapped));
  EXPECT_EQ(c.type, ErrorType::kIsolation);
  EXPECT_DOUBLE_EQ(*c.boundary_distance, 0.3);
}

TEST(BlockPenalty, Examples) {
  const PenaltyWeights w;
  ErrorBlock delay{0, 0, 1, 1, ErrorType::kDelay, std::nullopt, 0.0};
  EXPECT_DOUBLE_EQ(block_penalty(delay, w), 1.1);
  ErrorBlock iso{0, 1, 1, 1, ErrorType::kIsolation, 0.5, 0.0};
  EXPECT_DOUBLE_EQ(block_penalty(iso, w), 2.8);
  ErrorBlock missing{0, 5, 1, 3, ErrorType::kMissing, std::nullopt, 0.0};
  EXPECT_DOUBLE_EQ(block_penalty(missing, w), 7.5);
  ErrorBlock unclassified{0, 0, 1, 1, std::nullopt, std::nullopt, 0.0};
  EXPECT_THROW(block_penalty(unclassified, w), Error);
}

TEST(PenaltyWeights, DefaultsAndValidation) {
  const PenaltyWeights w;
  EXPECT_EQ(w.of(ErrorType::kDelay), 0.1);
  EXPECT_EQ(w.of(ErrorType::kTransition), 0.3);
  EXPECT_EQ(w.of(ErrorType::kIsolation), 0.8);
  EXPECT_EQ(w.of(ErrorType::kMissing), 0.5);
  EXPECT_EQ(w.max(), 0.8);
  EXPECT_THROW((PenaltyWeights{-0.1, 0, 0, 0}.validate()), Error);
}

TEST(Sms, Examples) {
  const auto s = seq(runs({{0, 3}, {2, 5}, {1, 2}}));
  const SmsReport perfect = sms(s, s);
  EXPECT_EQ(perfect.score, 1.0);
  EXPECT_TRUE(perfect.blocks.empty());

  const SmsReport r = sms(seq(runs({{0, 3}, {1, 3}})), seq(runs({{0, 4}, {1, 2}})));
  ASSERT_EQ(r.blocks.size(), 1u);
  EXPECT_EQ(r.blocks[0].type, ErrorType::kDelay);
  EXPECT_EQ(r.blocks[0].length(), 1u);
  EXPECT_DOUBLE_EQ(r.blocks[0].penalty, 1.1);
  EXPECT_NEAR(r.score, 1.0 - 1.1 / 6.0, 1e-15);
  EXPECT_EQ(r.totals(ErrorType::kDelay).count, 1u);
  EXPECT_EQ(r.total_error_length, 1u);
  EXPECT_EQ(r.n, 6u);
}

TEST(Sms, LengthMismatch) {
  EXPECT_THROW(sms(seq({0, 1}), seq({0})), Error);
}

TEST(SmsProperties, ReportIsConsistent) {
  gen::Rng rng(51);
  for (int trial = 0; trial < 400; ++trial) {
    const auto p = gen::pair(rng, 120, 5);
    const PenaltyWeights w = gen::weights(rng);
    const SmsReport r = sms(p.gt, p.pred, w);
    SCOPED_TRACE(trial);

    const StateSequence mapped = apply_mapping(p.pred, r.mapping);
    const auto expected = oracle::wrong_runs(p.gt.labels(), mapped.labels());
    ASSERT_EQ(r.blocks.size(), expected.size());
    const std::size_t errors = p.gt.size() - mapped_overlap(p.gt, p.pred, r.mapping);
    EXPECT_EQ(r.total_error_length, errors);

    double sum = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const ErrorBlock& b = r.blocks[i];
      EXPECT_EQ(b.start, expected[i].start);
      EXPECT_EQ(b.end, expected[i].end);
      std::set<StateId> inside(p.gt.labels().begin() + static_cast<std::ptrdiff_t>(b.start),
                               p.gt.labels().begin() + static_cast<std::ptrdiff_t>(b.end) + 1);
      EXPECT_EQ(b.atomicity, inside.size());
      ASSERT_TRUE(b.type.has_value());
      if (b.atomicity == 2) {
        EXPECT_EQ(*b.type, ErrorType::kTransition);
      }
      if (b.atomicity >= 3) {
        EXPECT_EQ(*b.type, ErrorType::kMissing);
      }
      if (b.atomicity == 1) {
        EXPECT_TRUE(*b.type == ErrorType::kDelay || *b.type == ErrorType::kIsolation);
      }
      if (*b.type == ErrorType::kIsolation || *b.type == ErrorType::kTransition) {
        ASSERT_TRUE(b.boundary_distance.has_value());
        EXPECT_GE(*b.boundary_distance, 0.0);
        EXPECT_LE(*b.boundary_distance, 1.0);
      }
      EXPECT_DOUBLE_EQ(b.penalty, block_penalty(b, w));
      sum += b.penalty;
    }
    EXPECT_DOUBLE_EQ(r.score, 1.0 - sum / static_cast<double>(p.gt.size()));

    const double e = static_cast<double>(errors) / static_cast<double>(p.gt.size());
    EXPECT_LE(r.score, 1.0 - e + 1e-12);
    EXPECT_GE(r.score, 1.0 - (1.0 + w.max()) * e - 1e-12);
    EXPECT_EQ(sms(p.gt, p.pred, PenaltyWeights{0, 0, 0, 0}).score, 1.0 - e);
  }
}

// Number of optimal full-cardinality pred -> gt matchings (zero-overlap
// pairs included), by enumeration.
std::size_t optimal_matchings(const StateSequence& gt, const StateSequence& pred) {
  const auto us = gt.distinct_labels();
  const auto vs = pred.distinct_labels();
  const std::size_t n = std::max(us.size(), vs.size());
  std::vector<std::int64_t> overlap(vs.size() * us.size(), 0);
  for (std::size_t k = 0; k < gt.size(); ++k) {
    const auto r = std::lower_bound(vs.begin(), vs.end(), pred[k]) - vs.begin();
    const auto c = std::lower_bound(us.begin(), us.end(), gt[k]) - us.begin();
    ++overlap[static_cast<std::size_t>(r) * us.size() + static_cast<std::size_t>(c)];
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<std::size_t>> best_set;
  std::int64_t best = -1;
  do {
    std::int64_t total = 0;
    std::vector<std::size_t> key;
    for (std::size_t r = 0; r < vs.size(); ++r) {
      const std::size_t c = perm[r] < us.size() ? perm[r] : us.size();
      if (c < us.size()) total += overlap[r * us.size() + c];
      key.push_back(c);
    }
    if (total > best) {
      best = total;
      best_set.clear();
    }
    if (total == best) best_set.insert(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best_set.size();
}

// Relabelling the prediction leaves SMS unchanged whenever the optimal
// matching is unique; with ties the tie-break follows the ids.
TEST(SmsProperties, PredictionRelabellingInvarianceUnderUniqueOptimum) {
  gen::Rng rng(52);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = gen::pair(rng, 60, 4);
    if (optimal_matchings(p.gt, p.pred) != 1) continue;
    std::vector<StateId> perm(static_cast<std::size_t>(p.pred.label_bound()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<StateId> relabelled(p.pred.labels().begin(), p.pred.labels().end());
    for (auto& x : relabelled) x = perm[static_cast<std::size_t>(x)] + 7;
    SCOPED_TRACE(trial);
    const SmsReport a = sms(p.gt, p.pred);
    const SmsReport b = sms(p.gt, seq(relabelled));
    EXPECT_EQ(a.score, b.score);
    ASSERT_EQ(a.blocks.size(), b.blocks.size());
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(ErrorReport, Examples) {
  const auto gt = seq(runs({{0, 3}, {1, 3}}));
  const SmsReport perfect = sms(gt, gt);
  const ErrorSummary a = error_report(std::vector<SmsReport>{perfect});
  EXPECT_EQ(a.reports, 1u);
  EXPECT_EQ(a.mean_score, 1.0);
  for (ErrorType t : kErrorTypes) {
    EXPECT_EQ(a.of(t).mean_count, 0.0);
    EXPECT_EQ(a.of(t).mean_length, 0.0);
    EXPECT_EQ(a.of(t).mean_penalty_share, 0.0);
  }

  const SmsReport d = sms(gt, seq(runs({{0, 4}, {1, 2}})));
  const ErrorSummary b = error_report(std::vector<SmsReport>{d, d});
  EXPECT_EQ(b.of(ErrorType::kDelay).mean_count, 1.0);
  EXPECT_EQ(b.of(ErrorType::kDelay).mean_length, 1.0);
  EXPECT_NEAR(b.of(ErrorType::kDelay).mean_penalty_share, 1.1 / 6.0, 1e-15);

  EXPECT_THROW(error_report(std::vector<SmsReport>{}), Error);
}

TEST(ErrorReport, MatchesRecomputedAggregates) {
  gen::Rng rng(53);
  std::vector<SmsReport> batch;
  for (int i = 0; i < 25; ++i) {
    const auto p = gen::pair(rng, 100, 5);
    batch.push_back(sms(p.gt, p.pred));
  }
  const ErrorSummary s = error_report(batch);
  double shares = 0.0;
  for (ErrorType t : kErrorTypes) {
    double count = 0, length = 0, share = 0;
    for (const SmsReport& r : batch) {
      for (const ErrorBlock& b : r.blocks) {
        if (b.type != t) continue;
        count += 1;
        length += static_cast<double>(b.length());
        share += b.penalty / static_cast<double>(r.n);
      }
    }
    EXPECT_NEAR(s.of(t).mean_count, count / 25, 1e-12);
    EXPECT_NEAR(s.of(t).mean_length, length / 25, 1e-12);
    EXPECT_NEAR(s.of(t).mean_penalty_share, share / 25, 1e-12);
    shares += s.of(t).mean_penalty_share;
  }
  double mean = 0.0;
  for (const SmsReport& r : batch) mean += r.score / 25;
  EXPECT_NEAR(s.mean_score, mean, 1e-12);
  EXPECT_NEAR(shares, 1.0 - s.mean_score, 1e-12);
}

}  // namespace
}  // namespace segeval
