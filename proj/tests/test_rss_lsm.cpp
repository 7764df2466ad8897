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


#include "criticality/metrics/rss_lsm.hpp"
#include "oracles/worst_case.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace criticality::metrics
{
namespace
{

using testing::car;

TEST(Lsm, RequiredRangeSubstitution)
{
  EXPECT_DOUBLE_EQ(lsm_required_range(car("ego", 0, 0, 0, 20), {}), 38.5);
}

TEST(Lsm, StandingEgoNeedsNoRange)
{
  const auto ego = car("ego", 0, 0, 0, 0);
  EXPECT_DOUBLE_EQ(lsm_required_range(ego, {}), 0.0);
  EXPECT_FALSE(lsm_verdict(ego, car("other", 5, 0, 0, 0), {}).critical);
}

TEST(Lsm, UrbanSpeedCrossCheck)
{
  const LsmParameters p{0.3, 6.0, 1.1};
  const double v = 13.89;
  const double reaction = v * 0.3;
  const double braking = v * v / 12.0;
  EXPECT_NEAR(lsm_required_range(car("ego", 0, 0, 0, v), p), 1.1 * (reaction + braking), 1e-12);
  EXPECT_NEAR(lsm_required_range(car("ego", 0, 0, 0, v), p), 22.27, 5e-3);
}

TEST(Lsm, OnlyForwardObjectsCount)
{
  const auto ego = car("ego", 0, 0, 0, 20);
  EXPECT_TRUE(lsm_verdict(ego, car("ahead", 30, 0, 0, 20), {}).critical);
  EXPECT_FALSE(lsm_verdict(ego, car("ahead", 60, 0, 0, 20), {}).critical);
  EXPECT_FALSE(lsm_verdict(ego, car("behind", -20, 0, 0, 20), {}).critical);
}

TEST(RssLongSame, MatchesWorstCaseSimulation)
{
  const RssParameters p;
  const double d = rss_d_long_same(20, 20, p);
  EXPECT_NEAR(d, 65.78125, 1e-9);
  const double boundary =
    oracle::boundary_gap([&](double g) { return oracle::rss_same_direction(g, 20, 20, p); });
  EXPECT_NEAR(d, boundary, 0.02);
}

TEST(RssLongSame, StandingVehicles)
{
  const RssParameters p;
  EXPECT_DOUBLE_EQ(rss_d_long_same(0, 0, p), 0.5 * 3.5 + 3.5 * 3.5 / 8.0);
}

TEST(RssLongSame, FastLeadClampsToZero)
{
  EXPECT_DOUBLE_EQ(rss_d_long_same(5, 40, {}), 0.0);
}

TEST(RssLongOpposite, MatchesWorstCaseSimulation)
{
  const RssParameters p;
  const double d = rss_d_long_opposite(10, -10, p);
  EXPECT_NEAR(d, 76.65625, 1e-9);
  const double boundary =
    oracle::boundary_gap([&](double g) { return oracle::rss_opposite_direction(g, 10, 10, p); });
  EXPECT_NEAR(d, boundary, 0.02);
}

TEST(RssLongOpposite, RejectsWrongSigns)
{
  EXPECT_THROW(rss_d_long_opposite(10, 5, {}), WrongConfiguration);
  EXPECT_THROW(rss_d_long_opposite(-1, -5, {}), WrongConfiguration);
}

TEST(RssLateral, ZeroResponseWindow)
{
  RssParameters p;
  p.rho = 0.0;
  p.mu = 0.4;
  EXPECT_DOUBLE_EQ(rss_d_lat(0, 0, p), 0.4);
}

TEST(RssLateral, MatchesWorstCaseSimulation)
{
  RssParameters p;
  p.mu = 1.0;
  const double d = rss_d_lat(0, 0, p);
  EXPECT_NEAR(d, 1.25, 1e-12);
  const double boundary =
    oracle::boundary_gap([&](double g) { return oracle::rss_lateral(g, 0, 0, p); });
  EXPECT_NEAR(d - p.mu, boundary, 0.005);
}

TEST(RssLateral, DivergingClampsToMargin)
{
  RssParameters p;
  p.mu = 0.3;
  EXPECT_DOUBLE_EQ(rss_d_lat(-5, 5, p), 0.3);
}

TEST(RssVerdict, FollowingTooCloseAtEqualSpeed)
{
  const RssParameters p;
  const double d = rss_d_long_same(25, 25, p);
  const auto ego = car("ego", 0, 0, 0, 25);
  const auto close = car("lead", 4 + 0.5 * d, 0, 0, 25);
  const auto far = car("lead", 4 + 2 * d, 0, 0, 25);
  EXPECT_TRUE(rss_verdict(ego, close, p).critical);
  EXPECT_EQ(rss_verdict(ego, close, p).sub_case, SubCase::kRssLongSame);
  EXPECT_FALSE(rss_verdict(ego, far, p).critical);
}

TEST(RssVerdict, StationaryFarApart)
{
  EXPECT_FALSE(rss_verdict(car("ego", 0, 0, 0, 0), car("o", 200, 0, 0, 0), {}).critical);
}

TEST(RssVerdict, ContactIsCritical)
{
  const MetricVerdict v = rss_verdict(car("ego", 0, 0, 0, 0), car("o", 1, 0, 0, 0), {});
  EXPECT_TRUE(v.critical);
  EXPECT_EQ(v.sub_case, SubCase::kRssContact);
}

TEST(RssVerdict, OncomingUsesOppositeDefinition)
{
  const auto ego = car("ego", 0, 0, 0, 10);
  const auto other = car("o", 50, 0, kPi, 10);
  const MetricVerdict v = rss_verdict(ego, other, {});
  EXPECT_EQ(v.sub_case, SubCase::kRssLongOpposite);
  EXPECT_TRUE(v.critical);
}

TEST(RssProperties, LongSameMonotoneInSpeeds)
{
  std::mt19937_64 rng(11);
  const RssParameters p;
  for (int i = 0; i < 2000; ++i) {
    const double v1 = testing::uniform(rng, 0, 40);
    const double v2 = testing::uniform(rng, 0, 40);
    const double dv = testing::uniform(rng, 0, 5);
    EXPECT_LE(rss_d_long_same(v1, v2, p), rss_d_long_same(v1 + dv, v2, p));
    EXPECT_GE(rss_d_long_same(v1, v2, p), rss_d_long_same(v1, v2 + dv, p));
    EXPECT_GE(rss_d_long_same(v1, v2, p), 0.0);
  }
}

TEST(RssProperties, LargerMarginNeverReducesLateralDistance)
{
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    RssParameters p;
    const double v1 = testing::uniform(rng, -3, 3);
    const double v2 = testing::uniform(rng, -3, 3);
    p.mu = testing::uniform(rng, 0, 1);
    const double base = rss_d_lat(v1, v2, p);
    p.mu += 0.5;
    EXPECT_NEAR(rss_d_lat(v1, v2, p) - base, 0.5, 1e-12);
  }
}

TEST(RssParameters, RejectsInconsistentBraking)
{
  RssParameters p;
  p.a_min_brake_lon = 9.0;
  EXPECT_THROW(validate(p), std::invalid_argument);
}

}  // namespace
}  // namespace criticality::metrics
