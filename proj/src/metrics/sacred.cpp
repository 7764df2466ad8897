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

#include "criticality/metrics/sacred.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace criticality::metrics
{

std::string_view to_string(SacredSubMetric m)
{
  switch (m) {
    case SacredSubMetric::kNone:
      return "none";
    case SacredSubMetric::kRta:
      return "R.TA";
    case SacredSubMetric::kRatMinus:
      return "R.AT-";
    case SacredSubMetric::kRtt:
      return "R.TT";
    case SacredSubMetric::kTxt:
      return "T.XT";
    case SacredSubMetric::kSureStatic:
      return "SURE-Val static";
    case SacredSubMetric::kTxtPrime:
      return "T.XT'";
  }
  return "none";
}

void validate(const SacredParameters & p)
{
  auto non_negative = [](double v, const char * name) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("sacred: ") + name + " must be >= 0");
    }
  };
  auto positive = [](double v, const char * name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("sacred: ") + name + " must be > 0");
    }
  };
  non_negative(p.t_react_ego, "t_react_ego");
  non_negative(p.t_react_other, "t_react_other");
  positive(p.a_worst_case, "a_worst_case");
  positive(p.a_brake_radial_ego, "a_brake_radial_ego");
  positive(p.a_brake_radial_other, "a_brake_radial_other");
  positive(p.a_lat_gain, "a_lat_gain");
  if (p.v_desired) non_negative(*p.v_desired, "v_desired");
}

double rtt_ego_braking_time(double v1, const SacredParameters & p)
{
  return (v1 + p.t_react_ego * p.a_worst_case) / p.a_brake_radial_ego;
}

double rta_min_distance(
  double center_distance, double s1, double s2, double v1, double v2, const SacredParameters & p)
{
  const double tr = p.t_react_ego;
  const double a = p.a_worst_case;
  const double v1_after = v1 + tr * a;
  return center_distance - s1 - s2 + v2 * v2 / (2.0 * p.a_brake_radial_other) - v1 * tr -
         0.5 * a * tr * tr - v1_after * v1_after / (2.0 * p.a_brake_radial_ego);
}

double rat_minus_min_distance(
  double d_at_td, double v1_desired, double v2_desired, const SacredParameters & p)
{
  const double tr = p.t_react_other;
  const double a = p.a_worst_case;
  const double v2_after = v2_desired + tr * a;
  return d_at_td + v1_desired * v1_desired / (2.0 * p.a_brake_radial_ego) - v2_desired * tr -
         0.5 * a * tr * tr - v2_after * v2_after / (2.0 * p.a_brake_radial_other);
}

double rtt_min_distance(
  double center_distance, double s1, double s2, double v1, double v2, const SacredParameters & p)
{
  const double tr = p.t_react_ego;
  const double a = p.a_worst_case;
  const double v1_after = v1 + tr * a;
  const double tb = rtt_ego_braking_time(v1, p);
  return center_distance - s1 - s2 - v1 * tr - 0.5 * a * tr * tr -
         v1_after * v1_after / (2.0 * p.a_brake_radial_ego) - v2 * tb - 0.5 * a * tb * tb;
}

double txt_min_distance(double d_at_td, double v2_initial, double t_d, const SacredParameters & p)
{
  const double tr = p.t_react_other;
  const double a = p.a_worst_case;
  const double v2_desired = v2_initial + a * t_d;
  const double v1_parallel = v2_initial;
  const double v2_after = v2_desired + tr * a;
  return d_at_td + v1_parallel * v1_parallel / (2.0 * p.a_brake_radial_ego) - v2_desired * tr -
         0.5 * a * tr * tr - v2_after * v2_after / (2.0 * p.a_lat_gain);
}

double sureval_static_min_distance(
  double center_distance, const StaticObstacleGaps & obstacle, double s1, double s2, double v1,
  double v2, const SacredParameters & p)
{
  return rtt_min_distance(center_distance - obstacle.ego - obstacle.other, s1, s2, v1, v2, p);
}

double txt_prime_range_bound(double v_perp, const SacredParameters & p)
{
  const double tr = p.t_react_ego;
  const double a = p.a_worst_case;
  double stopping = v_perp * v_perp / (2.0 * p.a_brake_radial_ego);
  if (p.txt_prime_stopping_term == TxtPrimeStoppingTerm::kPrintedSquareRoot) {
    stopping = std::sqrt(stopping);
  }
  const double horizon = tr + (v_perp + tr * a) / p.a_brake_radial_ego;
  return v_perp * tr + stopping + 0.5 * a * horizon * horizon;
}

namespace
{

// Pair geometry along the center-connecting (radial) axis.
struct Radial
{
  Vec2 axis;              // unit, ego -> other
  double center_distance{0.0};
  double s1{0.0};
  double s2{0.0};
  double ego_towards{0.0};   // ego velocity along axis
  double other_along{0.0};   // other velocity along axis (+ = away from ego)
  double ego_heading_along{0.0};
  double other_heading_along{0.0};

  double gap() const { return center_distance - s1 - s2; }
};

Radial radial(const ObjectState & ego, const ObjectState & other)
{
  Radial r;
  const Vec2 offset = other.position - ego.position;
  r.center_distance = offset.norm();
  r.axis = r.center_distance > 1e-9 ? offset * (1.0 / r.center_distance) : Vec2::unit(ego.heading);
  r.s1 = support_half_extent(ego, r.axis);
  r.s2 = support_half_extent(other, r.axis);
  r.ego_towards = ego.velocity.dot(r.axis);
  r.other_along = other.velocity.dot(r.axis);
  r.ego_heading_along = Vec2::unit(ego.heading).dot(r.axis);
  r.other_heading_along = Vec2::unit(other.heading).dot(r.axis);
  return r;
}

SacredVerdict make_verdict(double d_min, SacredSubMetric sub)
{
  return SacredVerdict{!(d_min > 0.0), d_min, sub};
}

double desired_speed(
  const ObjectState & other, const SacredParameters & p, const SacredContext & ctx)
{
  if (p.v_desired) return *p.v_desired;
  if (ctx.speed_limit) return *ctx.speed_limit;
  return other.speed();
}

// Radial gap at time t with the ego accelerating along its heading at a_worst_case
// and the other accelerating along its heading at `other_accel`.
double projected_gap(const Radial & r, double t, double a, double other_accel)
{
  return r.gap() + (r.other_along - r.ego_towards) * t - 0.5 * a * r.ego_heading_along * t * t +
         0.5 * other_accel * r.other_heading_along * t * t;
}

}  // namespace

DesiredSpeedProjection project_distance_at_desired_speed(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx)
{
  const double v_des = desired_speed(other, p, ctx);
  const double v1 = ego.speed();
  if (v_des < v1) {
    throw std::invalid_argument(
      "desired speed " + std::to_string(v_des) + " below ego speed " + std::to_string(v1));
  }
  const Radial r = radial(ego, other);
  DesiredSpeedProjection out;
  out.t_d = (v_des - v1) / p.a_worst_case;
  out.d_at_td = projected_gap(r, out.t_d, p.a_worst_case, 0.0);
  return out;
}

std::optional<SacredVerdict> sacred_rta(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p)
{
  if (heading_relation(ego, other) != HeadingRelation::kSame) return std::nullopt;
  const LaneFrame f = longitudinal_lateral_decompose(ego, other);
  if (!(f.lon_offset > 0.0) || f.lat_gap > 0.0) return std::nullopt;
  const Radial r = radial(ego, other);
  const double v1 = std::max(r.ego_towards, 0.0);
  const double v2 = std::max(r.other_along, 0.0);
  return make_verdict(
    rta_min_distance(r.center_distance, r.s1, r.s2, v1, v2, p), SacredSubMetric::kRta);
}

std::optional<SacredVerdict> sacred_rat_minus(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx)
{
  if (heading_relation(ego, other) != HeadingRelation::kSame) return std::nullopt;
  const LaneFrame f = longitudinal_lateral_decompose(ego, other);
  if (!(f.lon_offset < 0.0) || !(f.other_lon_vel > f.ego_lon_vel)) return std::nullopt;
  const Radial r = radial(ego, other);
  const double v1 = ego.speed();
  const double v1_desired = std::max(desired_speed(other, p, ctx), v1);
  const double t_d = (v1_desired - v1) / p.a_worst_case;
  const double d_at_td = projected_gap(r, t_d, p.a_worst_case, 0.0);
  const double v2_desired = std::max(-r.other_along, 0.0);
  return make_verdict(
    rat_minus_min_distance(d_at_td, v1_desired, v2_desired, p), SacredSubMetric::kRatMinus);
}

std::optional<SacredVerdict> sacred_rtt(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p)
{
  if (relative_geometry(ego, other).configuration != Configuration::kHeadsOn) {
    return std::nullopt;
  }
  const Radial r = radial(ego, other);
  const double v1 = std::max(r.ego_towards, 0.0);
  const double v2 = std::max(-r.other_along, 0.0);
  return make_verdict(
    rtt_min_distance(r.center_distance, r.s1, r.s2, v1, v2, p), SacredSubMetric::kRtt);
}

std::optional<SacredVerdict> sacred_txt(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx)
{
  const HeadingRelation rel = heading_relation(ego, other);
  if (rel == HeadingRelation::kOpposite) return std::nullopt;
  const LaneFrame f = longitudinal_lateral_decompose(ego, other);
  if (!(f.lon_offset < 0.0)) return std::nullopt;
  if (rel == HeadingRelation::kSame && !(f.lat_gap > 0.0)) return std::nullopt;
  const Radial r = radial(ego, other);
  const double v1 = ego.speed();
  const double t_d = std::max(desired_speed(other, p, ctx) - v1, 0.0) / p.a_worst_case;
  const double d_at_td = projected_gap(r, t_d, p.a_worst_case, p.a_worst_case);
  const double v2_initial = std::max(-r.other_along, 0.0);
  return make_verdict(txt_min_distance(d_at_td, v2_initial, t_d, p), SacredSubMetric::kTxt);
}

std::optional<SacredVerdict> sureval_static(
  const ObjectState & ego, const ObjectState & other, const std::optional<StaticObstacleGaps> & gaps,
  const SacredParameters & p)
{
  if (!gaps) return std::nullopt;
  if (relative_geometry(ego, other).configuration != Configuration::kHeadsOn) {
    return std::nullopt;
  }
  const Radial r = radial(ego, other);
  const double v1 = std::max(r.ego_towards, 0.0);
  const double v2 = std::max(-r.other_along, 0.0);
  return make_verdict(
    sureval_static_min_distance(r.center_distance, *gaps, r.s1, r.s2, v1, v2, p),
    SacredSubMetric::kSureStatic);
}

std::optional<SacredVerdict> sureval_txt_prime(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p)
{
  if (relative_geometry(ego, other).configuration != Configuration::kCrossing) {
    return std::nullopt;
  }
  // Range and speed of the ego perpendicular to the other's path.
  const Vec2 dir = Vec2::unit(other.heading);
  const Vec2 normal{-dir.y, dir.x};
  const double side = normal.dot(ego.position - other.position);
  const double towards_path = side > 0.0 ? -1.0 : 1.0;
  const double range = std::max(
    0.0, std::abs(side) - support_half_extent(ego, normal) - support_half_extent(other, normal));
  const double v_perp = std::max(towards_path * normal.dot(ego.velocity), 0.0);
  return make_verdict(range - txt_prime_range_bound(v_perp, p), SacredSubMetric::kTxtPrime);
}

std::vector<SacredVerdict> sacred_applicable(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx)
{
  std::vector<SacredVerdict> out;
  for (auto v : {sacred_rta(ego, other, p), sacred_rat_minus(ego, other, p, ctx),
                 sacred_rtt(ego, other, p), sacred_txt(ego, other, p, ctx)}) {
    if (v) out.push_back(*v);
  }
  return out;
}

std::vector<SacredVerdict> sureval_applicable(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx)
{
  std::vector<SacredVerdict> out;
  for (auto v : {sureval_static(ego, other, ctx.obstacle_gaps, p), sureval_txt_prime(ego, other, p)}) {
    if (v) out.push_back(*v);
  }
  return out;
}

SacredVerdict combine(const std::vector<SacredVerdict> & sub_verdicts)
{
  SacredVerdict out;
  for (const auto & v : sub_verdicts) {
    if (v.critical) return v;
    if (v.d_min < out.d_min || out.sub_metric == SacredSubMetric::kNone) out = v;
  }
  return out;
}

SacredVerdict sacred_combined(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx)
{
  return combine(sacred_applicable(ego, other, p, ctx));
}

SacredVerdict sureval_combined(
  const ObjectState & ego, const ObjectState & other, const SacredParameters & p,
  const SacredContext & ctx)
{
  return combine(sureval_applicable(ego, other, p, ctx));
}

MetricVerdict to_metric_verdict(const SacredVerdict & v, std::string_view metric_name)
{
  SubCase sub = SubCase::kNotApplicable;
  switch (v.sub_metric) {
    case SacredSubMetric::kNone:
      sub = SubCase::kNotApplicable;
      break;
    case SacredSubMetric::kRta:
      sub = SubCase::kSacredRta;
      break;
    case SacredSubMetric::kRatMinus:
      sub = SubCase::kSacredRatMinus;
      break;
    case SacredSubMetric::kRtt:
      sub = SubCase::kSacredRtt;
      break;
    case SacredSubMetric::kTxt:
      sub = SubCase::kSacredTxt;
      break;
    case SacredSubMetric::kSureStatic:
      sub = SubCase::kSureValStatic;
      break;
    case SacredSubMetric::kTxtPrime:
      sub = SubCase::kSureValTxtPrime;
      break;
  }
  return MetricVerdict{v.critical, v.d_min, sub, std::string(metric_name)};
}

}  // namespace criticality::metrics
