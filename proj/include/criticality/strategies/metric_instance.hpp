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

#ifndef CRITICALITY__STRATEGIES__METRIC_INSTANCE_HPP_
#define CRITICALITY__STRATEGIES__METRIC_INSTANCE_HPP_

#include "criticality/core/types.hpp"
#include "criticality/metrics/rss_lsm.hpp"
#include "criticality/metrics/sacred.hpp"
#include "criticality/metrics/time_metrics.hpp"
#include "criticality/metrics/verdict.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace criticality::strategies
{

enum class MetricKind {
  kTtc,
  kMttc,
  kTtb,
  kTta,
  kCif,
  kLsm,
  kRss,
  kSacred,
  kSacredRta,
  kSacredRatMinus,
  kSacredRtt,
  kSacredTxt,
  kSureVal,
  kSureValStatic,
  kSureValTxtPrime,
};

inline constexpr MetricKind kAllMetricKinds[] = {
  MetricKind::kTtc,       MetricKind::kMttc,           MetricKind::kTtb,
  MetricKind::kTta,       MetricKind::kCif,            MetricKind::kLsm,
  MetricKind::kRss,       MetricKind::kSacredRta,      MetricKind::kSacredRatMinus,
  MetricKind::kSacredRtt, MetricKind::kSacredTxt,      MetricKind::kSureValTxtPrime,
  MetricKind::kSacred,    MetricKind::kSureValStatic,  MetricKind::kSureVal,
};

/// Display label used in reports, e.g. "TTC", "R.AT-", "SURE-VAL".
std::string_view display_name(MetricKind kind);
/// Lower-case identifier used on the command line and in config files, e.g. "ttc", "rat_minus".
std::string_view identifier(MetricKind kind);
/// Accepts either the identifier or the display label (case-insensitive).
MetricKind metric_kind_from_string(std::string_view name);

using MetricConfig = std::variant<
  metrics::TimeMetricConfig, metrics::LsmParameters, metrics::RssParameters,
  metrics::SacredParameters>;

/// Parameter records every instance is built from.
struct MetricDefaults
{
  metrics::TimeMetricConfig time;
  metrics::LsmParameters lsm;
  metrics::RssParameters rss;
  metrics::SacredParameters sacred;
};

class ConfigurationError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A named, fully parameterised metric.
struct MetricInstance
{
  std::string name;
  MetricKind kind{MetricKind::kTtc};
  MetricConfig config;
};

/// Whether the kind has a sweepable threshold (time threshold, CIF threshold or RSS mu).
bool has_threshold(MetricKind kind);
std::optional<double> threshold_of(const MetricInstance & m);

/// Builds an instance with the kind-appropriate record from `defaults`; `threshold`
/// overrides that record's threshold (mu for RSS). Name: "TTC@2.0", "RSS@1.0", "LSM".
MetricInstance make_instance(
  MetricKind kind, const MetricDefaults & defaults = {},
  std::optional<double> threshold = std::nullopt);

/// "2.0", "0.1", "100".
std::string format_threshold(double value);

/// Scenario-level inputs handed to every metric evaluation.
struct PairContext
{
  std::optional<double> speed_limit;
  std::optional<StaticObstacleGaps> obstacle_gaps;

  /// The same context seen with actor and target exchanged.
  PairContext swapped() const;
};

/// Applies `m` with `actor` as the acting vehicle and `target` as the rated object.
metrics::MetricVerdict evaluate_metric(
  const MetricInstance & m, const ObjectState & actor, const ObjectState & target,
  const PairContext & ctx = {});

}  // namespace criticality::strategies

#endif  // CRITICALITY__STRATEGIES__METRIC_INSTANCE_HPP_
