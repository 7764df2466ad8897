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

#ifndef CRITICALITY__EVALUATION__EVALUATION_HPP_
#define CRITICALITY__EVALUATION__EVALUATION_HPP_

#include "criticality/core/types.hpp"
#include "criticality/strategies/strategies.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace criticality::evaluation
{

using strategies::RatingMode;

/// How the frame ratio is aggregated over scenarios.
enum class FrMode { kPooled, kPerScenarioMean };

std::string_view to_string(FrMode m);
FrMode fr_mode_from_string(std::string_view s);

/// Slack when comparing frame timestamps against the collision time, s.
inline constexpr double kCollisionTimeTolerance = 1e-6;

struct FrameVerdict
{
  double timestamp{0.0};
  bool critical{false};
  bool operator==(const FrameVerdict &) const = default;
};

struct ScenarioResult
{
  std::string scenario_id;
  std::vector<FrameVerdict> per_frame_verdicts;
  std::optional<double> first_critical_time;
  std::optional<double> tau;  // collision_time - first_critical_time
  std::size_t frames_total{0};
  std::size_t frames_critical{0};
};

struct SkippedScenario
{
  std::string scenario_id;
  std::string reason;
};

struct EvaluationReport
{
  std::string metric_name;
  std::string threshold_label{"-"};
  RatingMode mode{RatingMode::kUnidirectional};
  FrMode fr_mode{FrMode::kPerScenarioMean};
  double sr{0.0};
  double fr{0.0};
  // Absent when no scenario produced a tau.
  std::optional<double> tau_mean;
  std::optional<double> tau_std;  // population standard deviation
  std::optional<double> tau_min;
  std::vector<ScenarioResult> scenario_results;  // sorted by scenario_id
  std::vector<SkippedScenario> skipped;
};

/// The scenario cannot be rated (ego or collider never visible together before the collision).
class ScenarioSkipped : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Every scenario of a corpus was skipped, or the corpus was empty.
class EmptyCorpus : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

strategies::PairContext pair_context(const Scenario & s);

/// Rates the collider for the ego in every frame where both are present and the
/// timestamp does not exceed the collision time.
ScenarioResult evaluate_scenario(const Scenario & s, const strategies::Rule & rule, RatingMode mode);
ScenarioResult evaluate_scenario(
  const Scenario & s, const strategies::MetricInstance & m, RatingMode mode);

/// SR, FR and tau statistics over a corpus. Skipped scenarios are listed in the
/// report and excluded from every ratio.
EvaluationReport evaluate_corpus(
  const std::vector<Scenario> & scenarios, const strategies::Rule & rule, RatingMode mode,
  FrMode fr_mode = FrMode::kPerScenarioMean);
EvaluationReport evaluate_corpus(
  const std::vector<Scenario> & scenarios, const strategies::MetricInstance & m, RatingMode mode,
  FrMode fr_mode = FrMode::kPerScenarioMean);

/// Default threshold grid; empty for kinds without a threshold.
std::vector<double> default_grid(strategies::MetricKind kind);

/// One report per threshold (a single report when the kind has no threshold).
std::vector<EvaluationReport> threshold_sweep(
  const std::vector<Scenario> & scenarios, strategies::MetricKind kind,
  const std::vector<double> & thresholds, const strategies::MetricDefaults & defaults = {},
  RatingMode mode = RatingMode::kUnidirectional, FrMode fr_mode = FrMode::kPerScenarioMean);

}  // namespace criticality::evaluation

#endif  // CRITICALITY__EVALUATION__EVALUATION_HPP_
