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

#include "criticality/core/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace criticality
{

namespace
{
constexpr double kCoincidentDistance = 1e-9;
}  // namespace

std::string_view to_string(Configuration c)
{
  switch (c) {
    case Configuration::kLeadFollowSameDirection:
      return "lead_follow_same_direction";
    case Configuration::kHeadsOn:
      return "heads_on";
    case Configuration::kLateralAdjacent:
      return "lateral_adjacent";
    case Configuration::kCrossing:
      return "crossing";
    case Configuration::kDiverging:
      return "diverging";
    case Configuration::kStationaryTarget:
      return "stationary_target";
  }
  return "diverging";
}

double heading_difference(double a, double b)
{
  const double d = std::remainder(a - b, 2.0 * kPi);
  return std::abs(d);
}

HeadingRelation heading_relation(const ObjectState & a, const ObjectState & b)
{
  const double diff = heading_difference(a.heading, b.heading);
  if (diff < kSameDirectionAngle) return HeadingRelation::kSame;
  if (diff > kOppositeDirectionAngle) return HeadingRelation::kOpposite;
  return HeadingRelation::kCrossing;
}

double support_half_extent(const ObjectState & state, const Vec2 & axis)
{
  const Vec2 forward = Vec2::unit(state.heading);
  const Vec2 left{-forward.y, forward.x};
  return 0.5 * state.length * std::abs(forward.dot(axis)) +
         0.5 * state.width * std::abs(left.dot(axis));
}

LaneFrame longitudinal_lateral_decompose(const ObjectState & ego, const ObjectState & other)
{
  const Vec2 lon = Vec2::unit(ego.heading);
  const Vec2 lat{-lon.y, lon.x};
  const Vec2 offset = other.position - ego.position;

  LaneFrame f;
  f.lon_offset = offset.dot(lon);
  f.lat_offset = offset.dot(lat);
  f.lon_gap =
    std::max(0.0, std::abs(f.lon_offset) - 0.5 * ego.length - support_half_extent(other, lon));
  f.lat_gap =
    std::max(0.0, std::abs(f.lat_offset) - 0.5 * ego.width - support_half_extent(other, lat));
  f.ego_lon_vel = ego.velocity.dot(lon);
  f.other_lon_vel = other.velocity.dot(lon);
  f.ego_lat_vel = ego.velocity.dot(lat);
  f.other_lat_vel = other.velocity.dot(lat);
  f.ego_lon_accel = ego.acceleration.dot(lon);
  f.other_lon_accel = other.acceleration.dot(lon);
  return f;
}

RelativeGeometry relative_geometry(const ObjectState & ego, const ObjectState & other)
{
  RelativeGeometry g;
  const Vec2 offset = other.position - ego.position;
  g.center_distance = offset.norm();
  g.ego_speed = ego.speed();
  g.other_speed = other.speed();

  if (g.center_distance > kCoincidentDistance) {
    const Vec2 axis = offset * (1.0 / g.center_distance);
    g.gap = std::max(
      0.0,
      g.center_distance - support_half_extent(ego, axis) - support_half_extent(other, axis));
    g.closing_speed = -axis.dot(other.velocity - ego.velocity);
    g.relative_accel = -axis.dot(other.acceleration - ego.acceleration);
  }

  if (g.other_speed < kStationarySpeed && g.closing_speed >= 0.0) {
    g.configuration = Configuration::kStationaryTarget;
  } else if (g.closing_speed <= 0.0) {
    g.configuration = Configuration::kDiverging;
  } else {
    switch (heading_relation(ego, other)) {
      case HeadingRelation::kSame: {
        const LaneFrame f = longitudinal_lateral_decompose(ego, other);
        g.configuration = (f.lon_gap <= 0.0 && f.lat_gap > 0.0)
                            ? Configuration::kLateralAdjacent
                            : Configuration::kLeadFollowSameDirection;
        break;
      }
      case HeadingRelation::kOpposite:
        g.configuration = Configuration::kHeadsOn;
        break;
      case HeadingRelation::kCrossing:
        g.configuration = Configuration::kCrossing;
        break;
    }
  }
  return g;
}

}  // namespace criticality
