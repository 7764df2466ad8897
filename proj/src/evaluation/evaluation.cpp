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

#include "criticality/evaluation/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace criticality::evaluation
{

std::string_view to_string(FrMode m)
{
  return m == FrMode::kPooled ? "pooled" : "per_scenario_mean";
}

FrMode fr_mode_from_string(std::string_view s)
{
  if (s == "pooled") return FrMode::kPooled;
  if (s == "per_scenario_mean") return FrMode::kPerScenarioMean;
  throw strategies::ConfigurationError("unknown fr_mode '" + std::string(s) + "'");
}

strategies::PairContext pair_context(const Scenario & s)
{
  return strategies::PairContext{s.speed_limit, s.obstacle_gaps};
}

ScenarioResult evaluate_scenario(const Scenario & s, const strategies::Rule & rule, RatingMode mode)
{
  ScenarioResult result;
  result.scenario_id = s.scenario_id;
  const auto ctx = pair_context(s);

  bool ego_seen = false;
  bool collider_seen = false;
  for (const auto & frame : s.frames) {
    if (s.collision_time && frame.timestamp > *s.collision_time + kCollisionTimeTolerance) break;
    const ObjectState * ego = frame.find(s.ego_id);
    const ObjectState * other = frame.find(s.collider_id);
    ego_seen = ego_seen || ego;
    collider_seen = collider_seen || other;
    if (!ego || !other) continue;

    const bool critical = strategies::rate(rule, mode, *ego, *other, ctx).critical;
    result.per_frame_verdicts.push_back({frame.timestamp, critical});
    ++result.frames_total;
    if (critical) {
      ++result.frames_critical;
      if (!result.first_critical_time) result.first_critical_time = frame.timestamp;
    }
  }

  if (result.frames_total == 0) {
    std::string reason = !ego_seen        ? "ego '" + s.ego_id + "' never present"
                         : !collider_seen ? "collider '" + s.collider_id + "' never present"
                                          : "ego and collider never present in a common frame";
    throw ScenarioSkipped("scenario '" + s.scenario_id + "': " + reason + " before the collision");
  }
  if (result.first_critical_time && s.collision_time) {
    result.tau = std::max(0.0, *s.collision_time - *result.first_critical_time);
  }
  return result;
}

ScenarioResult evaluate_scenario(
  const Scenario & s, const strategies::MetricInstance & m, RatingMode mode)
{
  return evaluate_scenario(s, strategies::single_metric_rule(m), mode);
}

EvaluationReport evaluate_corpus(
  const std::vector<Scenario> & scenarios, const strategies::Rule & rule, RatingMode mode,
  FrMode fr_mode)
{
  EvaluationReport report;
  report.metric_name = rule.name;
  report.threshold_label = rule.threshold_label;
  report.mode = mode;
  report.fr_mode = fr_mode;

  for (const auto & s : scenarios) {
    try {
      report.scenario_results.push_back(evaluate_scenario(s, rule, mode));
    } catch (const ScenarioSkipped & e) {
      report.skipped.push_back({s.scenario_id, e.what()});
    }
  }
  if (report.scenario_results.empty()) {
    throw EmptyCorpus(
      "no evaluable scenario for '" + rule.name + "' (" + std::to_string(scenarios.size()) +
      " given, " + std::to_string(report.skipped.size()) + " skipped)");
  }

  auto by_id = [](const auto & a, const auto & b) { return a.scenario_id < b.scenario_id; };
  std::stable_sort(report.scenario_results.begin(), report.scenario_results.end(), by_id);
  std::stable_sort(report.skipped.begin(), report.skipped.end(), by_id);

  const auto & results = report.scenario_results;
  const double n = static_cast<double>(results.size());

  std::size_t flagged = 0;
  std::size_t frames = 0;
  std::size_t critical_frames = 0;
  double ratio_sum = 0.0;
  std::vector<double> taus;
  for (const auto & r : results) {
    if (r.frames_critical > 0) ++flagged;
    frames += r.frames_total;
    critical_frames += r.frames_critical;
    ratio_sum += static_cast<double>(r.frames_critical) / static_cast<double>(r.frames_total);
    if (r.tau) taus.push_back(*r.tau);
  }
  report.sr = static_cast<double>(flagged) / n;
  report.fr = fr_mode == FrMode::kPooled
                ? static_cast<double>(critical_frames) / static_cast<double>(frames)
                : ratio_sum / n;

  if (!taus.empty()) {
    const double m = std::accumulate(taus.begin(), taus.end(), 0.0) / taus.size();
    double var = 0.0;
    for (double t : taus) var += (t - m) * (t - m);
    report.tau_mean = m;
    report.tau_std = std::sqrt(var / taus.size());
    report.tau_min = *std::min_element(taus.begin(), taus.end());
  }
  return report;
}

EvaluationReport evaluate_corpus(
  const std::vector<Scenario> & scenarios, const strategies::MetricInstance & m, RatingMode mode,
  FrMode fr_mode)
{
  return evaluate_corpus(scenarios, strategies::single_metric_rule(m), mode, fr_mode);
}

std::vector<double> default_grid(strategies::MetricKind kind)
{
  using strategies::MetricKind;
  switch (kind) {
    case MetricKind::kTtc:
    case MetricKind::kMttc:
      return {1.0, 2.0, 3.0, 4.0};
    case MetricKind::kTtb:
      return {1.0};
    case MetricKind::kTta:
      return {1.5};
    case MetricKind::kCif:
      return {80.0, 100.0, 120.0};
    case MetricKind::kRss:
      return {0.0, 0.1, 0.5, 1.0};
    default:
      return {};
  }
}

std::vector<EvaluationReport> threshold_sweep(
  const std::vector<Scenario> & scenarios, strategies::MetricKind kind,
  const std::vector<double> & thresholds, const strategies::MetricDefaults & defaults,
  RatingMode mode, FrMode fr_mode)
{
  std::vector<EvaluationReport> out;
  if (!strategies::has_threshold(kind) || thresholds.empty()) {
    if (strategies::has_threshold(kind)) {
      throw strategies::ConfigurationError(
        "threshold sweep for " + std::string(strategies::display_name(kind)) +
        " needs at least one threshold");
    }
    out.push_back(evaluate_corpus(scenarios, strategies::make_instance(kind, defaults), mode, fr_mode));
    return out;
  }
  for (double t : thresholds) {
    out.push_back(
      evaluate_corpus(scenarios, strategies::make_instance(kind, defaults, t), mode, fr_mode));
  }
  return out;
}

}  // namespace criticality::evaluation
