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

#include "criticality/strategies/metric_instance.hpp"

#include "criticality/core/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace criticality::strategies
{

namespace
{

struct KindNames
{
  MetricKind kind;
  std::string_view display;
  std::string_view id;
};

constexpr KindNames kKindNames[] = {
  {MetricKind::kTtc, "TTC", "ttc"},
  {MetricKind::kMttc, "MTTC", "mttc"},
  {MetricKind::kTtb, "TTB", "ttb"},
  {MetricKind::kTta, "TTA", "tta"},
  {MetricKind::kCif, "CIF", "cif"},
  {MetricKind::kLsm, "LSM", "lsm"},
  {MetricKind::kRss, "RSS", "rss"},
  {MetricKind::kSacred, "SACRED", "sacred"},
  {MetricKind::kSacredRta, "R.TA", "rta"},
  {MetricKind::kSacredRatMinus, "R.AT-", "rat_minus"},
  {MetricKind::kSacredRtt, "R.TT", "rtt"},
  {MetricKind::kSacredTxt, "T.XT", "txt"},
  {MetricKind::kSureVal, "SURE-VAL", "sureval"},
  {MetricKind::kSureValStatic, "SURE-VAL static", "sureval_static"},
  {MetricKind::kSureValTxtPrime, "T.XT'", "txt_prime"},
};

const KindNames & names_of(MetricKind kind)
{
  for (const auto & n : kKindNames) {
    if (n.kind == kind) return n;
  }
  return kKindNames[0];
}

std::string lower(std::string_view s)
{
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

}  // namespace

std::string_view display_name(MetricKind kind) { return names_of(kind).display; }

std::string_view identifier(MetricKind kind) { return names_of(kind).id; }

MetricKind metric_kind_from_string(std::string_view name)
{
  const std::string key = lower(name);
  for (const auto & n : kKindNames) {
    if (key == n.id || key == lower(n.display)) return n.kind;
  }
  throw ConfigurationError("unknown metric kind '" + std::string(name) + "'");
}

bool has_threshold(MetricKind kind)
{
  switch (kind) {
    case MetricKind::kTtc:
    case MetricKind::kMttc:
    case MetricKind::kTtb:
    case MetricKind::kTta:
    case MetricKind::kCif:
    case MetricKind::kRss:
      return true;
    default:
      return false;
  }
}

std::optional<double> threshold_of(const MetricInstance & m)
{
  if (const auto * t = std::get_if<metrics::TimeMetricConfig>(&m.config)) {
    switch (m.kind) {
      case MetricKind::kTtc:
        return t->ttc_threshold;
      case MetricKind::kMttc:
        return t->mttc_threshold;
      case MetricKind::kTtb:
        return t->ttb_threshold;
      case MetricKind::kTta:
        return t->tta_threshold;
      case MetricKind::kCif:
        return t->cif_threshold;
      default:
        return std::nullopt;
    }
  }
  if (const auto * r = std::get_if<metrics::RssParameters>(&m.config)) return r->mu;
  return std::nullopt;
}

std::string format_threshold(double value)
{
  char buf[64];
  if (value == std::round(value) && std::abs(value) < 10.0) {
    std::snprintf(buf, sizeof(buf), "%.1f", value);
  } else {
    std::snprintf(buf, sizeof(buf), "%.10g", value);
  }
  return buf;
}

MetricInstance make_instance(
  MetricKind kind, const MetricDefaults & defaults, std::optional<double> threshold)
{
  MetricInstance m;
  m.kind = kind;
  switch (kind) {
    case MetricKind::kTtc:
    case MetricKind::kMttc:
    case MetricKind::kTtb:
    case MetricKind::kTta:
    case MetricKind::kCif: {
      auto cfg = defaults.time;
      if (threshold) {
        switch (kind) {
          case MetricKind::kTtc:
            cfg.ttc_threshold = *threshold;
            break;
          case MetricKind::kMttc:
            cfg.mttc_threshold = *threshold;
            break;
          case MetricKind::kTtb:
            cfg.ttb_threshold = *threshold;
            break;
          case MetricKind::kTta:
            cfg.tta_threshold = *threshold;
            break;
          default:
            cfg.cif_threshold = *threshold;
            break;
        }
      }
      metrics::validate(cfg);
      m.config = cfg;
      break;
    }
    case MetricKind::kLsm:
      if (threshold) throw ConfigurationError("LSM takes no threshold");
      metrics::validate(defaults.lsm);
      m.config = defaults.lsm;
      break;
    case MetricKind::kRss: {
      auto cfg = defaults.rss;
      if (threshold) cfg.mu = *threshold;
      metrics::validate(cfg);
      m.config = cfg;
      break;
    }
    default:
      if (threshold) {
        throw ConfigurationError(std::string(display_name(kind)) + " takes no threshold");
      }
      metrics::validate(defaults.sacred);
      m.config = defaults.sacred;
      break;
  }
  m.name = std::string(display_name(kind));
  if (const auto t = threshold_of(m)) m.name += "@" + format_threshold(*t);
  return m;
}

PairContext PairContext::swapped() const
{
  PairContext out = *this;
  if (obstacle_gaps) out.obstacle_gaps = StaticObstacleGaps{obstacle_gaps->other, obstacle_gaps->ego};
  return out;
}

metrics::MetricVerdict evaluate_metric(
  const MetricInstance & m, const ObjectState & actor, const ObjectState & target,
  const PairContext & ctx)
{
  metrics::MetricVerdict v;
  const metrics::SacredContext sacred_ctx{ctx.speed_limit, ctx.obstacle_gaps};

  auto sacred = [&](const std::optional<metrics::SacredVerdict> & sv) {
    return metrics::to_metric_verdict(sv.value_or(metrics::SacredVerdict{}), m.name);
  };

  switch (m.kind) {
    case MetricKind::kTtc: {
      const auto & cfg = std::get<metrics::TimeMetricConfig>(m.config);
      v = metrics::ttc(relative_geometry(actor, target), cfg);
      break;
    }
    case MetricKind::kMttc: {
      const auto & cfg = std::get<metrics::TimeMetricConfig>(m.config);
      v = metrics::mttc(relative_geometry(actor, target), cfg);
      break;
    }
    case MetricKind::kTtb: {
      const auto & cfg = std::get<metrics::TimeMetricConfig>(m.config);
      v = metrics::ttb(actor, target, relative_geometry(actor, target).gap, cfg);
      break;
    }
    case MetricKind::kTta: {
      const auto & cfg = std::get<metrics::TimeMetricConfig>(m.config);
      v = metrics::tta(actor, metrics::tta_mean_speed(actor, target, cfg), cfg);
      break;
    }
    case MetricKind::kCif: {
      const auto & cfg = std::get<metrics::TimeMetricConfig>(m.config);
      const auto t = metrics::ttc(relative_geometry(actor, target), cfg);
      v = metrics::cif(actor, t.raw_value, cfg);
      break;
    }
    case MetricKind::kLsm:
      v = metrics::lsm_verdict(actor, target, std::get<metrics::LsmParameters>(m.config));
      break;
    case MetricKind::kRss:
      v = metrics::rss_verdict(actor, target, std::get<metrics::RssParameters>(m.config));
      break;
    case MetricKind::kSacred:
      v = metrics::to_metric_verdict(
        metrics::sacred_combined(
          actor, target, std::get<metrics::SacredParameters>(m.config), sacred_ctx),
        m.name);
      break;
    case MetricKind::kSacredRta:
      v = sacred(metrics::sacred_rta(actor, target, std::get<metrics::SacredParameters>(m.config)));
      break;
    case MetricKind::kSacredRatMinus:
      v = sacred(metrics::sacred_rat_minus(
        actor, target, std::get<metrics::SacredParameters>(m.config), sacred_ctx));
      break;
    case MetricKind::kSacredRtt:
      v = sacred(metrics::sacred_rtt(actor, target, std::get<metrics::SacredParameters>(m.config)));
      break;
    case MetricKind::kSacredTxt:
      v = sacred(metrics::sacred_txt(
        actor, target, std::get<metrics::SacredParameters>(m.config), sacred_ctx));
      break;
    case MetricKind::kSureVal:
      v = metrics::to_metric_verdict(
        metrics::sureval_combined(
          actor, target, std::get<metrics::SacredParameters>(m.config), sacred_ctx),
        m.name);
      break;
    case MetricKind::kSureValStatic:
      v = sacred(metrics::sureval_static(
        actor, target, ctx.obstacle_gaps, std::get<metrics::SacredParameters>(m.config)));
      break;
    case MetricKind::kSureValTxtPrime:
      v = sacred(
        metrics::sureval_txt_prime(actor, target, std::get<metrics::SacredParameters>(m.config)));
      break;
  }
  v.metric_name = m.name;
  return v;
}

}  // namespace criticality::strategies
