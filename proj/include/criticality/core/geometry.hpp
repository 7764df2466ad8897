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

#ifndef CRITICALITY__CORE__GEOMETRY_HPP_
#define CRITICALITY__CORE__GEOMETRY_HPP_

#include "criticality/core/types.hpp"

#include <string_view>

namespace criticality
{

inline constexpr double kPi = 3.14159265358979323846;

/// Speed below which an object counts as a stationary target (m/s).
inline constexpr double kStationarySpeed = 0.1;
/// Heading difference below which two objects travel in the same direction (rad).
inline constexpr double kSameDirectionAngle = kPi / 4.0;
/// Heading difference above which two objects travel head-on (rad).
inline constexpr double kOppositeDirectionAngle = 3.0 * kPi / 4.0;

enum class Configuration {
  kLeadFollowSameDirection,
  kHeadsOn,
  kLateralAdjacent,
  kCrossing,
  kDiverging,
  kStationaryTarget,
};

std::string_view to_string(Configuration c);

/// Relative kinematics of `other` as seen from `ego`.
///
/// `gap` is the extent-adjusted separation: center distance minus each box's
/// half-extent projected onto the center-connecting axis, clamped at zero.
/// `closing_speed` and `relative_accel` are positive when the objects approach.
struct RelativeGeometry
{
  double center_distance{0.0};
  double gap{0.0};
  double closing_speed{0.0};
  double relative_accel{0.0};
  double ego_speed{0.0};
  double other_speed{0.0};
  Configuration configuration{Configuration::kDiverging};
};

/// Heading relation independent of the closing-speed sign.
enum class HeadingRelation { kSame, kOpposite, kCrossing };

/// Wrapped absolute heading difference in [0, pi].
double heading_difference(double a, double b);
HeadingRelation heading_relation(const ObjectState & a, const ObjectState & b);

/// Half-extent of an oriented box along the unit direction `axis`.
double support_half_extent(const ObjectState & state, const Vec2 & axis);

RelativeGeometry relative_geometry(const ObjectState & ego, const ObjectState & other);

/// Decomposition of the pair in the ego lane frame (ego heading = longitudinal axis,
/// lateral axis points to the ego's left).
struct LaneFrame
{
  double lon_offset{0.0};  // signed center offset of other, + ahead of ego
  double lat_offset{0.0};  // signed center offset of other, + left of ego
  double lon_gap{0.0};     // extent-adjusted, >= 0
  double lat_gap{0.0};     // extent-adjusted, >= 0
  double ego_lon_vel{0.0};
  double other_lon_vel{0.0};
  double ego_lat_vel{0.0};
  double other_lat_vel{0.0};
  double ego_lon_accel{0.0};
  double other_lon_accel{0.0};
};

LaneFrame longitudinal_lateral_decompose(const ObjectState & ego, const ObjectState & other);

}  // namespace criticality

#endif  // CRITICALITY__CORE__GEOMETRY_HPP_
