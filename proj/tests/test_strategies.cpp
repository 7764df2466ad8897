// Copyright 2026 The Criticality Metrics Authors
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


#include "criticality/strategies/strategies.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace criticality::strategies
{
namespace
{

using testing::car;

TEST(MetricInstance, NamesCarryThreshold)
{
  EXPECT_EQ(make_instance(MetricKind::kTtc, {}, 2.0).name, "TTC@2.0");
  EXPECT_EQ(make_instance(MetricKind::kRss, {}, 0.5).name, "RSS@0.5");
  EXPECT_EQ(make_instance(MetricKind::kCif, {}, 100.0).name, "CIF@100");
  EXPECT_EQ(make_instance(MetricKind::kLsm).name, "LSM");
}

TEST(MetricInstance, ThresholdRejectedForThresholdlessKinds)
{
  EXPECT_THROW(make_instance(MetricKind::kLsm, {}, 1.0), ConfigurationError);
  EXPECT_THROW(make_instance(MetricKind::kSacred, {}, 1.0), ConfigurationError);
}

TEST(MetricInstance, KindLookupAcceptsLabelAndIdentifier)
{
  for (auto k : kAllMetricKinds) {
    EXPECT_EQ(metric_kind_from_string(identifier(k)), k);
    EXPECT_EQ(metric_kind_from_string(display_name(k)), k);
  }
  EXPECT_EQ(metric_kind_from_string("Sure-Val"), MetricKind::kSureVal);
  EXPECT_THROW(metric_kind_from_string("ttx"), ConfigurationError);
}

TEST(Aggregate, OrOverMembers)
{
  const auto ego = car("ego", 0, 0, 0, 20);
  const auto other = car("other", 44, 0, 0, 10);  // TTC 4.0 s, gap 40 m
  const auto ttc4 = make_instance(MetricKind::kTtc, {}, 4.5);
  const auto lsm = make_instance(MetricKind::kLsm);
  EXPECT_FALSE(evaluate_metric(lsm, ego, other).critical);
  const StrategyVerdict v = aggregate({ttc4, lsm}, ego, other);
  EXPECT_TRUE(v.critical);
  ASSERT_EQ(v.contributing.size(), 1u);
  EXPECT_EQ(v.contributing[0].metric_name, "TTC@4.5");
  EXPECT_EQ(v.contributing[0].direction, Direction::kEgoToOther);
}

TEST(Aggregate, NothingFires)
{
  const auto ego = car("ego", 0, 0, 0, 10);
  const auto other = car("other", 300, 0, 0, 10);
  const StrategyVerdict v =
    aggregate({make_instance(MetricKind::kTtc, {}, 4.0), make_instance(MetricKind::kLsm)}, ego, other);
  EXPECT_FALSE(v.critical);
  EXPECT_TRUE(v.contributing.empty());
}

TEST(Aggregate, EmptyListIsAConfigurationError)
{
  const auto ego = car("ego", 0, 0, 0, 10);
  EXPECT_THROW(aggregate({}, ego, ego), ConfigurationError);
  EXPECT_THROW(aggregate_rule({}), ConfigurationError);
}

TEST(Bidirectional, ForwardFiresAlone)
{
  const auto ego = car("ego", 0, 0, 0, 20);
  const auto other = car("other", 24, 0, 0, 0);
  const StrategyVerdict v = bidirectional(make_instance(MetricKind::kTtc, {}, 2.0), ego, other);
  EXPECT_TRUE(v.critical);
  EXPECT_EQ(v.contributing.front().direction, Direction::kEgoToOther);
}

TEST(Bidirectional, StandingEgoHitFromTheSide)
{
  // The other crosses the ego's lane and will strike its side in 0.9 s.
  const auto ego = car("ego", 0, 0, 0, 0);
  const auto other = car("other", 0, -12, kPi / 2, 10);
  const auto m = make_instance(MetricKind::kTtc, {}, 4.0);
  const auto forward = evaluate_metric(m, ego, other);
  const auto reverse = evaluate_metric(m, other, ego);
  EXPECT_FALSE(forward.critical);
  EXPECT_TRUE(reverse.critical);
  EXPECT_NEAR(reverse.raw_value, 0.9, 1e-12);

  const StrategyVerdict v = bidirectional(m, ego, other);
  EXPECT_TRUE(v.critical);
  ASSERT_EQ(v.contributing.size(), 1u);
  EXPECT_EQ(v.contributing[0].direction, Direction::kOtherToEgo);
}

TEST(Bidirectional, SymmetricHeadOn)
{
  const auto ego = car("ego", 0, 0, 0, 12);
  const auto other = car("other", 40, 0, kPi, 12);
  for (auto kind : {MetricKind::kTtc, MetricKind::kMttc, MetricKind::kRss, MetricKind::kSacred}) {
    const auto m = make_instance(kind);
    const auto f = evaluate_metric(m, ego, other);
    const auto r = evaluate_metric(m, other, ego);
    EXPECT_EQ(f.critical, r.critical) << m.name;
    EXPECT_NEAR(f.raw_value, r.raw_value, 1e-9) << m.name;
  }
}

TEST(Rate, BidirectionalAggregateCoversEveryMemberAndDirection)
{
  const auto ego = car("ego", 0, 0, 0, 0);
  const auto other = car("other", 0, -12, kPi / 2, 10);
  const Rule rule = aggregate_rule(
    {make_instance(MetricKind::kTtc, {}, 4.0), make_instance(MetricKind::kMttc, {}, 4.0)});
  EXPECT_EQ(rule.name, "TTC+MTTC");
  EXPECT_EQ(rule.threshold_label, "4.0 / 4.0");
  const StrategyVerdict uni = rate(rule, RatingMode::kUnidirectional, ego, other);
  const StrategyVerdict bi = rate(rule, RatingMode::kBidirectional, ego, other);
  EXPECT_GE(bi.contributing.size(), uni.contributing.size());
  EXPECT_TRUE(bi.critical);
}

TEST(TimeDistanceCombinations, EightTimeDistancePairs)
{
  const auto rules = time_distance_combinations();
  ASSERT_EQ(rules.size(), 8u);
  std::vector<std::string> names;
  for (const auto & r : rules) {
    EXPECT_EQ(r.members.size(), 2u);
    names.push_back(r.name);
  }
  for (const char * expected : {"TTC+LSM", "TTC+RSS", "TTC+SACRED", "TTC+SURE-VAL", "TTA+LSM",
                                "TTA+RSS", "TTA+SACRED", "TTA+SURE-VAL"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
  }
  EXPECT_EQ(rules[1].threshold_label, "4.0 / 1.0");
}

TEST(PairContext, SwapExchangesObstacleGaps)
{
  PairContext ctx;
  ctx.obstacle_gaps = StaticObstacleGaps{1.0, 2.0};
  EXPECT_DOUBLE_EQ(ctx.swapped().obstacle_gaps->ego, 2.0);
  EXPECT_DOUBLE_EQ(ctx.swapped().obstacle_gaps->other, 1.0);
}

}  // namespace
}  // namespace criticality::strategies
