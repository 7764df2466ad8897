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

#include "criticality/metrics/time_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace criticality::metrics
{

std::string_view to_string(SubCase c)
{
  switch (c) {
    case SubCase::kNotApplicable:
      return "not_applicable";
    case SubCase::kTtcStationary:
      return "ttc_stationary";
    case SubCase::kTtcSameDirection:
      return "ttc_same_direction";
    case SubCase::kTtcHeadsOn:
      return "ttc_heads_on";
    case SubCase::kMttcQuadratic:
      return "mttc_quadratic";
    case SubCase::kMttcLinear:
      return "mttc_linear";
    case SubCase::kTtb:
      return "ttb";
    case SubCase::kTta:
      return "tta";
    case SubCase::kCif:
      return "cif";
    case SubCase::kLsm:
      return "lsm";
    case SubCase::kRssLongSame:
      return "rss_long_same";
    case SubCase::kRssLongOpposite:
      return "rss_long_opposite";
    case SubCase::kRssLateral:
      return "rss_lateral";
    case SubCase::kRssContact:
      return "rss_contact";
    case SubCase::kSacredRta:
      return "sacred_rta";
    case SubCase::kSacredRatMinus:
      return "sacred_rat_minus";
    case SubCase::kSacredRtt:
      return "sacred_rtt";
    case SubCase::kSacredTxt:
      return "sacred_txt";
    case SubCase::kSureValStatic:
      return "sureval_static";
    case SubCase::kSureValTxtPrime:
      return "sureval_txt_prime";
  }
  return "not_applicable";
}

void validate(const TimeMetricConfig & cfg)
{
  auto positive = [](double v, const char * name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("time metrics: ") + name + " must be > 0");
    }
  };
  positive(cfg.ttc_threshold, "ttc_threshold");
  positive(cfg.mttc_threshold, "mttc_threshold");
  positive(cfg.ttb_threshold, "ttb_threshold");
  positive(cfg.tta_threshold, "tta_threshold");
  positive(cfg.cif_threshold, "cif_threshold");
  positive(cfg.ttb_brake_decel, "ttb_brake_decel");
}

namespace
{

MetricVerdict below_threshold(const char * name, double value, double threshold, SubCase sub)
{
  return MetricVerdict{value < threshold, value, sub, name};
}

// Smallest strictly positive root of a t^2 + b t + c = 0 with a != 0.
double smallest_positive_root(double a, double b, double c)
{
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return kInfinity;
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (b + std::copysign(sq, b));
  double best = kInfinity;
  if (q != 0.0) {
    for (double r : {q / a, c / q}) {
      if (r > 0.0) best = std::min(best, r);
    }
  } else {
    // b == 0 and disc == 0: double root at zero.
    return kInfinity;
  }
  return best;
}

}  // namespace

MetricVerdict ttc(const RelativeGeometry & geom, const TimeMetricConfig & cfg)
{
  double denominator = 0.0;
  SubCase sub = SubCase::kNotApplicable;
  switch (geom.configuration) {
    case Configuration::kStationaryTarget:
      if (geom.closing_speed <= 0.0) break;
      denominator = geom.ego_speed;
      sub = SubCase::kTtcStationary;
      break;
    case Configuration::kLeadFollowSameDirection:
    case Configuration::kLateralAdjacent:
      denominator = std::abs(geom.ego_speed - geom.other_speed);
      sub = SubCase::kTtcSameDirection;
      break;
    case Configuration::kHeadsOn:
      denominator = geom.ego_speed + geom.other_speed;
      sub = SubCase::kTtcHeadsOn;
      break;
    case Configuration::kCrossing:
    case Configuration::kDiverging:
      break;
  }
  if (sub == SubCase::kNotApplicable) {
    return MetricVerdict{false, kInfinity, sub, "TTC"};
  }
  const double value = denominator <= kSpeedEpsilon ? kInfinity : geom.gap / denominator;
  return below_threshold("TTC", value, cfg.ttc_threshold, sub);
}

MetricVerdict mttc(const RelativeGeometry & geom, const TimeMetricConfig & cfg)
{
  const double dv = geom.closing_speed;
  const double da = geom.relative_accel;
  const double d = geom.gap;
  constexpr double kAccelEpsilon = 1e-9;

  if (d <= 0.0) {
    const bool closing = dv > 0.0 || (dv == 0.0 && da > 0.0);
    return below_threshold(
      "MTTC", closing ? 0.0 : kInfinity, cfg.mttc_threshold, SubCase::kMttcLinear);
  }

  if (std::abs(da) < kAccelEpsilon) {
    const double value = dv > kSpeedEpsilon ? d / dv : kInfinity;
    return below_threshold("MTTC", value, cfg.mttc_threshold, SubCase::kMttcLinear);
  }

  double value = kInfinity;
  if (cfg.mttc_radicand == MttcRadicand::kRelativeSpeed) {
    value = smallest_positive_root(0.5 * da, dv, -d);
  } else {
    const double radicand = geom.ego_speed * geom.ego_speed + 2.0 * da * d;
    if (radicand >= 0.0) {
      const double sq = std::sqrt(radicand);
      for (double r : {(-dv + sq) / da, (-dv - sq) / da}) {
        if (r > 0.0) value = std::min(value, r);
      }
    }
  }
  return below_threshold("MTTC", value, cfg.mttc_threshold, SubCase::kMttcQuadratic);
}

double crash_index(const ObjectState & ego, const ObjectState & other, double mttc_value)
{
  if (!std::isfinite(mttc_value) || mttc_value <= 0.0) {
    throw UndefinedCrashIndex("crash index undefined for MTTC = " + std::to_string(mttc_value));
  }
  const LaneFrame f = longitudinal_lateral_decompose(ego, other);
  const double v1 = f.ego_lon_vel + f.ego_lon_accel * mttc_value;
  const double v2 = f.other_lon_vel + f.other_lon_accel * mttc_value;
  return (v1 * v1 - v2 * v2) / (2.0 * mttc_value);
}

MetricVerdict ttb(
  const ObjectState & ego, const ObjectState & other, double gap, const TimeMetricConfig & cfg)
{
  const double a1 = cfg.ttb_brake_decel;
  if (!(a1 > 0.0)) throw std::invalid_argument("ttb: braking deceleration must be > 0");
  const LaneFrame f = longitudinal_lateral_decompose(ego, other);
  const double dv = f.ego_lon_vel - f.other_lon_vel;
  const double radicand = dv * dv + 2.0 * a1 * gap;
  const double value = radicand < 0.0 ? kInfinity : (-dv + std::sqrt(radicand)) / a1;
  return below_threshold("TTB", value, cfg.ttb_threshold, SubCase::kTtb);
}

double tta_mean_speed(
  const ObjectState & ego, const ObjectState & other, const TimeMetricConfig & cfg)
{
  if (cfg.tta_mean_speed_mode == TtaMeanSpeedMode::kEgoOnly) return ego.speed();
  return 0.5 * (ego.speed() + other.speed());
}

MetricVerdict tta(const ObjectState & ego, double mean_speed, const TimeMetricConfig & cfg)
{
  const double v1 = ego.speed();
  const double value = 1.5 * v1 / (16.7 * std::exp(-0.0306 * 0.5 * mean_speed));
  return below_threshold("TTA", value, cfg.tta_threshold, SubCase::kTta);
}

MetricVerdict cif(const ObjectState & ego, double ttc_value, const TimeMetricConfig & cfg)
{
  const double v1 = ego.speed();
  double value = 0.0;
  if (std::isinf(ttc_value) || v1 == 0.0) {
    value = 0.0;
  } else if (ttc_value <= 0.0) {
    value = kInfinity;  // contact at non-zero speed
  } else {
    value = v1 * v1 / ttc_value;
  }
  return MetricVerdict{value > cfg.cif_threshold, value, SubCase::kCif, "CIF"};
}

}  // namespace criticality::metrics
