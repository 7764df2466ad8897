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

#ifndef CRITICALITY__METRICS__TIME_METRICS_HPP_
#define CRITICALITY__METRICS__TIME_METRICS_HPP_

#include "criticality/core/geometry.hpp"
#include "criticality/core/types.hpp"
#include "criticality/metrics/verdict.hpp"

#include <stdexcept>

namespace criticality::metrics
{

/// Denominators at or below this value (m/s) make a time metric infinite.
inline constexpr double kSpeedEpsilon = 1e-6;

enum class TtaMeanSpeedMode { kPairMean, kEgoOnly };

/// Which radicand the MTTC quadratic uses.
///  kRelativeSpeed:   sqrt(dv^2 + 2 da D), the root of 0.5 da t^2 + dv t - D = 0.
///  kPrintedEgoSpeed: sqrt(v_1^2 + 2 da D), kept for forensic comparison only.
enum class MttcRadicand { kRelativeSpeed, kPrintedEgoSpeed };

struct TimeMetricConfig
{
  double ttc_threshold{2.0};   // s
  double mttc_threshold{2.0};  // s
  double ttb_threshold{1.0};   // s
  double tta_threshold{1.5};   // s
  double cif_threshold{100.0};  // m^2/s^3
  TtaMeanSpeedMode tta_mean_speed_mode{TtaMeanSpeedMode::kPairMean};
  double ttb_brake_decel{8.0};  // m/s^2, > 0
  MttcRadicand mttc_radicand{MttcRadicand::kRelativeSpeed};
};

void validate(const TimeMetricConfig & cfg);

/// Thrown when the Crash Index is requested for a non-finite or non-positive MTTC.
class UndefinedCrashIndex : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Time-to-Collision with the sub-case chosen by the pair configuration.
/// Crossing and diverging pairs have no applicable formula and yield +infinity.
MetricVerdict ttc(const RelativeGeometry & geom, const TimeMetricConfig & cfg);

/// Modified TTC: smallest positive root of 0.5 da t^2 + dv t - D = 0.
MetricVerdict mttc(const RelativeGeometry & geom, const TimeMetricConfig & cfg);

/// Crash Index from longitudinal (ego lane frame) speeds and accelerations.
double crash_index(const ObjectState & ego, const ObjectState & other, double mttc_value);

/// Time-to-Brake with the braking deceleration taken from the configuration.
MetricVerdict ttb(
  const ObjectState & ego, const ObjectState & other, double gap, const TimeMetricConfig & cfg);

MetricVerdict tta(const ObjectState & ego, double mean_speed, const TimeMetricConfig & cfg);

/// V_m for TTA per the configured mean-speed mode.
double tta_mean_speed(
  const ObjectState & ego, const ObjectState & other, const TimeMetricConfig & cfg);

/// Criticality Index Function v_1^2 / TTC. Critical above the threshold.
MetricVerdict cif(const ObjectState & ego, double ttc_value, const TimeMetricConfig & cfg);

}  // namespace criticality::metrics

#endif  // CRITICALITY__METRICS__TIME_METRICS_HPP_
