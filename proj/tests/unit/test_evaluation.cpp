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

#include "../support/oracles.hpp"
#include "segeval/error.hpp"
#include "segeval/evaluation.hpp"

namespace segeval {
namespace {

StateSequence seq(std::vector<StateId> v) { return StateSequence::from_ids(std::move(v)); }

TEST(MeasureNames, RoundTrip) {
  for (MeasureKind m : kAllMeasures) EXPECT_EQ(parse_measure(to_string(m)), m);
  EXPECT_EQ(parse_measure("ARI"), std::nullopt);
}

TEST(EvalConfig, Defaults) {
  const EvalConfig c;
  EXPECT_EQ(c.alpha, 0.1);
  EXPECT_EQ(c.weights, (PenaltyWeights{0.1, 0.3, 0.8, 0.5}));
  EXPECT_EQ(c.margin, std::nullopt);
  EXPECT_EQ(c.resolved_margin(1000), 10u);
  EXPECT_EQ(c.measures.size(), kAllMeasures.size());
}

TEST(Evaluate, IdenticalSequencesScoreOne) {
  const auto s = seq({0, 0, 1, 1});
  const EvaluationReport r = evaluate(s, s);
  for (MeasureKind m : kAllMeasures) EXPECT_NEAR(*r.score(m), 1.0, 1e-15) << to_string(m);
}

TEST(Evaluate, HandTracedFixture) {
  const auto gt = seq({0, 0, 0, 1, 1, 1});
  const auto pred = seq({0, 0, 0, 0, 1, 1});
  const EvaluationReport r = evaluate(gt, pred);
  EXPECT_NEAR(*r.score(MeasureKind::kSms), 0.816667, 1e-5);
  EXPECT_NEAR(*r.ari, oracle::ari_all_pairs(gt.labels(), pred.labels()), 1e-12);
  EXPECT_EQ(r.margin, 1u);
  EXPECT_EQ(r.f1->f1, 1.0);
}

TEST(Evaluate, OnlyRequestedMeasures) {
  EvalConfig c;
  c.measures = {MeasureKind::kSms, MeasureKind::kAri};
  const EvaluationReport r = evaluate(seq({0, 1}), seq({0, 1}), c);
  EXPECT_EQ(r.measures, (std::vector<MeasureKind>{MeasureKind::kAri, MeasureKind::kSms}));
  EXPECT_FALSE(r.f1.has_value());
  EXPECT_FALSE(r.wari.has_value());
  EXPECT_TRUE(r.sms.has_value());
}

TEST(Evaluate, Errors) {
  EXPECT_THROW(evaluate(seq({0, 1}), seq({0})), Error);
  EvalConfig bad;
  bad.alpha = -1;
  EXPECT_THROW(evaluate(seq({0, 1}), seq({0, 1}), bad), Error);
  EvalConfig none;
  none.measures.clear();
  EXPECT_THROW(evaluate(seq({0, 1}), seq({0, 1}), none), Error);
}

}  // namespace
}  // namespace segeval
