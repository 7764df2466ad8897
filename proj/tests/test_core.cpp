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


#include "criticality/core/dynamics.hpp"
#include "criticality/core/geometry.hpp"
#include "criticality/core/types.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace criticality
{
namespace
{

using testing::car;

TEST(Geometry, GapSubtractsHalfLengthsAlongAxis)
{
  const auto ego = car("ego", 0, 0, 0, 10);
  const auto other = car("other", 20, 0, 0, 5);
  const RelativeGeometry g = relative_geometry(ego, other);
  EXPECT_DOUBLE_EQ(g.center_distance, 20.0);
  EXPECT_DOUBLE_EQ(g.gap, 16.0);
  EXPECT_DOUBLE_EQ(g.closing_speed, 5.0);
  EXPECT_EQ(g.configuration, Configuration::kLeadFollowSameDirection);
}

TEST(Geometry, CoincidentObjectsHaveZeroGap)
{
  const auto ego = car("ego", 3, 4, 0, 10);
  const auto other = car("other", 3, 4, kPi, 10);
  EXPECT_DOUBLE_EQ(relative_geometry(ego, other).gap, 0.0);
}

TEST(Geometry, BothAtRestIsStationaryTarget)
{
  const auto ego = car("ego", 0, 0, 0, 0);
  const auto other = car("other", 20, 0, 0, 0);
  const RelativeGeometry g = relative_geometry(ego, other);
  EXPECT_DOUBLE_EQ(g.closing_speed, 0.0);
  EXPECT_EQ(g.configuration, Configuration::kStationaryTarget);
}

TEST(Geometry, ConfigurationTable)
{
  const auto ego = car("ego", 0, 0, 0, 10);
  EXPECT_EQ(relative_geometry(ego, car("o", 30, 0, kPi, 10)).configuration, Configuration::kHeadsOn);
  EXPECT_EQ(relative_geometry(ego, car("o", 30, 0, 0, 20)).configuration, Configuration::kDiverging);
  EXPECT_EQ(
    relative_geometry(ego, car("o", 30, -30, kPi / 2, 10)).configuration, Configuration::kCrossing);
  EXPECT_EQ(
    relative_geometry(ego, car("o", 1, 3, -0.2, 12)).configuration, Configuration::kLateralAdjacent);
}

TEST(Geometry, LaneFrameAhead)
{
  const auto ego = car("ego", 0, 0, 0, 10);
  const auto other = car("other", 30, 0, 0, 10);
  const LaneFrame f = longitudinal_lateral_decompose(ego, other);
  EXPECT_DOUBLE_EQ(f.lon_offset, 30.0);
  EXPECT_DOUBLE_EQ(f.lon_gap, 26.0);
  EXPECT_DOUBLE_EQ(f.lat_gap, 0.0);
}

TEST(Geometry, LaneFrameBeside)
{
  const auto ego = car("ego", 0, 0, 0, 10);
  const auto other = car("other", 0, 3, 0, 10);
  const LaneFrame f = longitudinal_lateral_decompose(ego, other);
  EXPECT_DOUBLE_EQ(f.lat_gap, 1.0);
  EXPECT_DOUBLE_EQ(f.lon_gap, 0.0);
}

TEST(Geometry, CrossingVelocityRotatesIntoEgoFrame)
{
  const double h = 0.7;
  const auto ego = car("ego", 0, 0, h, 10);
  const auto other = car("other", 10, 10, h + kPi / 2, 6);
  const LaneFrame f = longitudinal_lateral_decompose(ego, other);
  EXPECT_NEAR(f.other_lon_vel, 0.0, 1e-12);
  EXPECT_NEAR(f.other_lat_vel, 6.0, 1e-12);
  EXPECT_NEAR(f.ego_lon_vel, 10.0, 1e-12);
}

TEST(Geometry, HeadingDifferenceWraps)
{
  EXPECT_NEAR(heading_difference(3.0, -3.0), 2 * kPi - 6.0, 1e-12);
  EXPECT_NEAR(heading_difference(0.1, 0.1 + 2 * kPi), 0.0, 1e-12);
}

TEST(Geometry, GapIsSymmetricAndRigidMotionInvariant)
{
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto a = car("a", testing::uniform(rng, -50, 50), testing::uniform(rng, -50, 50),
                 testing::uniform(rng, -kPi, kPi), testing::uniform(rng, 0, 30));
    auto b = car("b", testing::uniform(rng, -50, 50), testing::uniform(rng, -50, 50),
                 testing::uniform(rng, -kPi, kPi), testing::uniform(rng, 0, 30));
    const RelativeGeometry ab = relative_geometry(a, b);
    const RelativeGeometry ba = relative_geometry(b, a);
    EXPECT_NEAR(ab.gap, ba.gap, 1e-9);
    EXPECT_NEAR(ab.closing_speed, ba.closing_speed, 1e-9);

    const double rot = testing::uniform(rng, -kPi, kPi);
    const Vec2 shift{testing::uniform(rng, -100, 100), testing::uniform(rng, -100, 100)};
    auto move = [&](ObjectState s) {
      const double c = std::cos(rot);
      const double sn = std::sin(rot);
      auto r = [&](Vec2 v) { return Vec2{c * v.x - sn * v.y, sn * v.x + c * v.y}; };
      s.position = r(s.position) + shift;
      s.velocity = r(s.velocity);
      s.acceleration = r(s.acceleration);
      s.heading += rot;
      return s;
    };
    const RelativeGeometry moved = relative_geometry(move(a), move(b));
    EXPECT_NEAR(moved.gap, ab.gap, 1e-8);
    EXPECT_NEAR(moved.closing_speed, ab.closing_speed, 1e-8);
  }
}

TEST(Types, ValidateRejectsNegativeExtent)
{
  auto s = car("x", 0, 0, 0, 1);
  s.length = -1.0;
  EXPECT_THROW(validate(s), ValidationError);
}

TEST(Types, ObjectClassRoundTrip)
{
  for (auto c : {ObjectClass::kCar, ObjectClass::kTruck, ObjectClass::kPedestrian,
                 ObjectClass::kCyclist, ObjectClass::kOther}) {
    EXPECT_EQ(object_class_from_string(to_string(c)), c);
  }
}

TEST(Dynamics, FiniteDifferencesRecoverQuadraticMotion)
{
  Scenario s;
  s.scenario_id = "fd";
  s.ego_id = "ego";
  s.collider_id = "ego";
  s.frame_period = 0.5;
  std::set<StateKey> missing_v;
  std::set<StateKey> missing_a;
  for (std::size_t i = 0; i < 5; ++i) {
    const double t = 0.5 * static_cast<double>(i);
    ScenarioFrame f;
    f.timestamp = t;
    f.states.push_back(car("ego", 3.0 * t + t * t, 0, 0, 0));
    s.frames.push_back(f);
    missing_v.insert({i, "ego"});
    missing_a.insert({i, "ego"});
  }
  estimate_missing_dynamics(s, missing_v, missing_a);
  // x = 3t + t^2: v = 3 + 2t, a = 2. Central differences are exact for quadratics.
  EXPECT_NEAR(s.frames[2].states[0].velocity.x, 3.0 + 2.0 * 1.0, 1e-12);
  EXPECT_NEAR(s.frames[1].states[0].velocity.x, 3.0 + 2.0 * 0.5, 1e-12);
  EXPECT_NEAR(s.frames[2].states[0].acceleration.x, 2.0, 1e-12);
  EXPECT_NEAR(s.frames[2].states[0].velocity.y, 0.0, 1e-12);
}

}  // namespace
}  // namespace criticality
