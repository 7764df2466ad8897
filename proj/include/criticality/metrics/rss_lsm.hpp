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

#ifndef CRITICALITY__METRICS__RSS_LSM_HPP_
#define CRITICALITY__METRICS__RSS_LSM_HPP_

#include "criticality/core/geometry.hpp"
#include "criticality/core/types.hpp"
#include "criticality/metrics/verdict.hpp"

#include <stdexcept>

namespace criticality::metrics
{

struct LsmParameters
{
  double t_delay{0.5};  // s
  double a_brake{8.0};  // m/s^2
  double safety_factor{1.1};
};

void validate(const LsmParameters & p);

/// Required longitudinal perception range: safety_factor * (v t_delay + v^2 / 2a).
double lsm_required_range(const ObjectState & ego, const LsmParameters & p);

/// Critical when `other` lies in the ego's forward half-plane closer than the
/// required range (extent-adjusted gap).
MetricVerdict lsm_verdict(
  const ObjectState & ego, const ObjectState & other, const LsmParameters & p);

/// RSS kinematic parameters. All accelerations are magnitudes.
struct RssParameters
{
  double rho{1.0};                 // response time, s
  double a_max_accel_lon{3.5};
  double a_min_brake_lon{4.0};
  double a_max_brake_lon{8.0};
  double a_min_brake_correct{3.0};
  double a_max_accel_lat{0.2};
  double a_min_brake_lat{0.8};
  double mu{0.0};                  // lateral drift margin, m
};

void validate(const RssParameters & p);

/// Thrown when an RSS distance is requested for speeds outside its definition.
class WrongConfiguration : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Longitudinal safety distance, same direction; ego (speed ego_v) follows other.
double rss_d_long_same(double ego_v, double other_v, const RssParameters & p);

/// Longitudinal safety distance, opposite direction. Requires ego_v >= 0, other_v < 0
/// (signed lane-frame speeds).
double rss_d_long_opposite(double ego_v, double other_v, const RssParameters & p);

/// Lateral safety distance with the ego to the left of other. Speeds are signed
/// along the axis pointing from the ego towards the other, so positive ego_vlat
/// and negative other_vlat mean approaching.
double rss_d_lat(double ego_vlat, double other_vlat, const RssParameters & p);

/// RSS verdict with automatic selection of the applicable distance definition.
MetricVerdict rss_verdict(
  const ObjectState & ego, const ObjectState & other, const RssParameters & p);

}  // namespace criticality::metrics

#endif  // CRITICALITY__METRICS__RSS_LSM_HPP_
