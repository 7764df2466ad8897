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

#include <algorithm>
#include <cmath>
#include <string>

namespace criticality::metrics
{

namespace
{

double positive_part(double x) { return std::max(x, 0.0); }

void require(bool ok, const std::string & what)
{
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void validate(const LsmParameters & p)
{
  require(p.t_delay >= 0.0 && std::isfinite(p.t_delay), "lsm: t_delay must be >= 0");
  require(p.a_brake > 0.0 && std::isfinite(p.a_brake), "lsm: a_brake must be > 0");
  require(p.safety_factor >= 1.0 && std::isfinite(p.safety_factor),
          "lsm: safety_factor must be >= 1");
}

double lsm_required_range(const ObjectState & ego, const LsmParameters & p)
{
  const double v = ego.speed();
  return p.safety_factor * (v * p.t_delay + v * v / (2.0 * p.a_brake));
}

MetricVerdict lsm_verdict(
  const ObjectState & ego, const ObjectState & other, const LsmParameters & p)
{
  const LaneFrame f = longitudinal_lateral_decompose(ego, other);
  if (f.lon_offset <= 0.0) {
    return MetricVerdict{false, kInfinity, SubCase::kNotApplicable, "LSM"};
  }
  const double slack = relative_geometry(ego, other).gap - lsm_required_range(ego, p);
  return MetricVerdict{slack < 0.0, slack, SubCase::kLsm, "LSM"};
}

void validate(const RssParameters & p)
{
  auto positive = [](double v, const char * name) {
    require(v > 0.0 && std::isfinite(v), std::string("rss: ") + name + " must be > 0");
  };
  positive(p.rho, "rho");
  positive(p.a_max_accel_lon, "a_max_accel_lon");
  positive(p.a_min_brake_lon, "a_min_brake_lon");
  positive(p.a_max_brake_lon, "a_max_brake_lon");
  positive(p.a_min_brake_correct, "a_min_brake_correct");
  positive(p.a_max_accel_lat, "a_max_accel_lat");
  positive(p.a_min_brake_lat, "a_min_brake_lat");
  require(p.mu >= 0.0 && std::isfinite(p.mu), "rss: mu must be >= 0");
  require(p.a_min_brake_lon <= p.a_max_brake_lon, "rss: a_min_brake_lon must be <= a_max_brake_lon");
}

double rss_d_long_same(double ego_v, double other_v, const RssParameters & p)
{
  const double v_rho = ego_v + p.rho * p.a_max_accel_lon;
  return positive_part(
    ego_v * p.rho + 0.5 * p.a_max_accel_lon * p.rho * p.rho +
    v_rho * v_rho / (2.0 * p.a_min_brake_lon) - other_v * other_v / (2.0 * p.a_max_brake_lon));
}

double rss_d_long_opposite(double ego_v, double other_v, const RssParameters & p)
{
  if (ego_v < 0.0 || other_v >= 0.0) {
    throw WrongConfiguration(
      "rss_d_long_opposite requires ego_v >= 0 and other_v < 0 (got " + std::to_string(ego_v) +
      ", " + std::to_string(other_v) + ")");
  }
  const double v1_rho = ego_v + p.rho * p.a_max_accel_lon;
  const double v2 = std::abs(other_v);
  const double v2_rho = v2 + p.rho * p.a_max_accel_lon;
  return 0.5 * (ego_v + v1_rho) * p.rho + v1_rho * v1_rho / (2.0 * p.a_min_brake_correct) +
         0.5 * (v2 + v2_rho) * p.rho + v2_rho * v2_rho / (2.0 * p.a_min_brake_lon);
}

double rss_d_lat(double ego_vlat, double other_vlat, const RssParameters & p)
{
  const double v1_rho = ego_vlat + p.rho * p.a_max_accel_lat;
  const double v2_rho = other_vlat - p.rho * p.a_max_accel_lat;
  // Signed displacement of each vehicle along the ego->other axis; v|v| keeps the
  // braking phase pointing the right way when a vehicle is moving away.
  const double ego_travel =
    0.5 * (ego_vlat + v1_rho) * p.rho + v1_rho * std::abs(v1_rho) / (2.0 * p.a_min_brake_lat);
  const double other_travel =
    0.5 * (other_vlat + v2_rho) * p.rho + v2_rho * std::abs(v2_rho) / (2.0 * p.a_min_brake_lat);
  return p.mu + positive_part(ego_travel - other_travel);
}

MetricVerdict rss_verdict(
  const ObjectState & ego, const ObjectState & other, const RssParameters & p)
{
  const LaneFrame f = longitudinal_lateral_decompose(ego, other);
  MetricVerdict verdict{false, kInfinity, SubCase::kNotApplicable, "RSS"};

  if (f.lon_gap <= 0.0 && f.lat_gap <= 0.0) {
    verdict.critical = true;
    verdict.raw_value = 0.0;
    verdict.sub_case = SubCase::kRssContact;
    return verdict;
  }

  // The tightest check decides; any violated distance makes the pair critical.
  auto consider = [&](double slack, SubCase sub) {
    if (slack < verdict.raw_value) {
      verdict.raw_value = slack;
      verdict.sub_case = sub;
    }
    verdict.critical = verdict.raw_value < 0.0;
  };

  if (f.lon_gap > 0.0 && f.lon_offset > 0.0) {
    const double v1 = std::max(f.ego_lon_vel, 0.0);
    if (f.other_lon_vel >= 0.0) {
      consider(f.lon_gap - rss_d_long_same(v1, f.other_lon_vel, p), SubCase::kRssLongSame);
    } else {
      consider(f.lon_gap - rss_d_long_opposite(v1, f.other_lon_vel, p), SubCase::kRssLongOpposite);
    }
  }
  if (f.lat_gap > 0.0) {
    const double towards = f.lat_offset > 0.0 ? 1.0 : -1.0;
    consider(
      f.lat_gap - rss_d_lat(f.ego_lat_vel * towards, f.other_lat_vel * towards, p),
      SubCase::kRssLateral);
  }
  return verdict;
}

}  // namespace criticality::metrics
