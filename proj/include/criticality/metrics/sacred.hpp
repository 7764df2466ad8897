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

#ifndef CRITICALITY__METRICS__SACRED_HPP_
#define CRITICALITY__METRICS__SACRED_HPP_

#include "criticality/core/geometry.hpp"
#include "criticality/core/types.hpp"
#include "criticality/metrics/verdict.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace criticality::metrics
{

enum class SacredSubMetric { kNone, kRta, kRatMinus, kRtt, kTxt, kSureStatic, kTxtPrime };

std::string_view to_string(SacredSubMetric m);

/// Stopping term inside the crossing (T.XT') bound.
///  kStoppingDistance:  v^2 / (2a), dimensionally a distance.
///  kPrintedSquareRoot: sqrt(v^2 / (2a)), kept for forensic comparison only.
enum class TxtPrimeStoppingTerm { kStoppingDistance, kPrintedSquareRoot };

struct SacredParameters
{
  double t_react_ego{1.0};           // s
  double t_react_other{1.0};         // s
  double a_worst_case{3.5};          // m/s^2
  double a_brake_radial_ego{6.0};    // m/s^2
  double a_brake_radial_other{6.0};  // m/s^2
  double a_lat_gain{1.0};            // m/s^2
  // Target speed for the lane-change and merge projections. Unset means: the
  // scenario speed limit if known, otherwise the other vehicle's current speed.
  std::optional<double> v_desired;
  TxtPrimeStoppingTerm txt_prime_stopping_term{TxtPrimeStoppingTerm::kStoppingDistance};
};

void validate(const SacredParameters & p);

/// Scenario-level inputs that some sub-metrics need.
struct SacredContext
{
  std::optional<double> speed_limit;
  std::optional<StaticObstacleGaps> obstacle_gaps;
};

/// d_min is signed slack: the pair is critical when d_min <= 0.
struct SacredVerdict
{
  bool critical{false};
  double d_min{kInfinity};
  SacredSubMetric sub_metric{SacredSubMetric::kNone};
};

// Closed-form minimum distances. `center_distance` is measured between the
// object centers along the radial axis and `s1`, `s2` are the half-extents of
// ego and other along that axis. Speeds are radial magnitudes.

/// Ego braking duration after the reaction window: (v1 + t_1r a_max) / a_1rb.
double rtt_ego_braking_time(double v1, const SacredParameters & p);

double rta_min_distance(
  double center_distance, double s1, double s2, double v1, double v2, const SacredParameters & p);
double rat_minus_min_distance(
  double d_at_td, double v1_desired, double v2_desired, const SacredParameters & p);
double rtt_min_distance(
  double center_distance, double s1, double s2, double v1, double v2, const SacredParameters & p);
double txt_min_distance(double d_at_td, double v2_initial, double t_d, const SacredParameters & p);
double sureval_static_min_distance(
  double center_distance, const StaticObstacleGaps & obstacle, double s1, double s2, double v1,
  double v2, const SacredParameters & p);
/// Perpendicular range below which a crossing object is relevant.
double txt_prime_range_bound(double v_perp, const SacredParameters & p);

struct DesiredSpeedProjection
{
  double d_at_td{0.0};  // extent-adjusted radial distance at t_d, m
  double t_d{0.0};      // s
};

/// Time for the ego to reach the desired speed under a_worst_case and the
/// radial distance at that time, with the other object at constant velocity.
/// Throws std::invalid_argument if the desired speed is below the ego speed.
DesiredSpeedProjection project_distance_at_desired_speed(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx = {});

// Sub-metrics return std::nullopt when the pair configuration does not match.

std::optional<SacredVerdict> sacred_rta(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p);
std::optional<SacredVerdict> sacred_rat_minus(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx = {});
std::optional<SacredVerdict> sacred_rtt(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p);
std::optional<SacredVerdict> sacred_txt(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx = {});
std::optional<SacredVerdict> sureval_static(
  const ObjectState & ego, const ObjectState & other, const std::optional<StaticObstacleGaps> & gaps,
  const SacredParameters & p);
std::optional<SacredVerdict> sureval_txt_prime(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p);

/// Every applicable SACRED sub-verdict (R.TA, R.AT-, R.TT, T.XT order).
std::vector<SacredVerdict> sacred_applicable(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx = {});
/// Every applicable SURE-Val sub-verdict (static obstacle, T.XT' order).
std::vector<SacredVerdict> sureval_applicable(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx = {});

/// OR over the applicable sub-verdicts. Records the first firing sub-metric, or
/// the tightest applicable one when nothing fires, or kNone.
SacredVerdict combine(const std::vector<SacredVerdict> & sub_verdicts);

SacredVerdict sacred_combined(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx = {});
SacredVerdict sureval_combined(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx = {});

MetricVerdict to_metric_verdict(const SacredVerdict & v, std::string_view metric_name);

}  // namespace criticality::metrics

#endif  // CRITICALITY__METRICS__SACRED_HPP_
