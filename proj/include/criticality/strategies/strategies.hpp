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

#ifndef CRITICALITY__STRATEGIES__STRATEGIES_HPP_
#define CRITICALITY__STRATEGIES__STRATEGIES_HPP_

#include "criticality/strategies/metric_instance.hpp"

#include <string>
#include <vector>

namespace criticality::strategies
{

enum class Direction { kEgoToOther, kOtherToEgo };

std::string_view to_string(Direction d);

struct Contribution
{
  std::string metric_name;
  Direction direction{Direction::kEgoToOther};
  bool operator==(const Contribution &) const = default;
};

/// critical == !contributing.empty()
struct StrategyVerdict
{
  bool critical{false};
  std::vector<Contribution> contributing;
};

enum class RatingMode { kUnidirectional, kBidirectional };

std::string_view to_string(RatingMode m);

/// A set of metrics OR-ed together under one report name. A single metric is a
/// rule with one member.
struct Rule
{
  std::string name;             // report label, e.g. "TTC" or "TTC+RSS"
  std::string threshold_label;  // e.g. "4.0", "4.0 / 1.0", "-"
  std::vector<MetricInstance> members;
};

/// Wraps one instance; name = display label, threshold label from the instance.
Rule single_metric_rule(const MetricInstance & m);
/// Joins members with '+' and their threshold labels with " / ".
Rule aggregate_rule(const std::vector<MetricInstance> & members);

/// Multi-metric aggregation: OR over member verdicts, ego as actor.
/// Throws ConfigurationError on an empty member list.
StrategyVerdict aggregate(
  const std::vector<MetricInstance> & metrics, const ObjectState & ego, const ObjectState & other,
  const PairContext & ctx = {});

/// Bidirectional criticality rating: m(ego -> other) OR m(other -> ego).
StrategyVerdict bidirectional(
  const MetricInstance & metric, const ObjectState & ego, const ObjectState & other,
  const PairContext & ctx = {});

/// Rates `other` for `ego` under a rule in the given mode. Bidirectional
/// evaluation of an aggregate is the OR over every member in both directions.
StrategyVerdict rate(
  const Rule & rule, RatingMode mode, const ObjectState & ego, const ObjectState & other,
  const PairContext & ctx = {});

/// The eight time+distance aggregates: TTC@4 and TTA@1.5 each combined with
/// LSM, RSS (mu = 1.0), SACRED and SURE-VAL.
std::vector<Rule> time_distance_combinations(const MetricDefaults & defaults = {});

}  // namespace criticality::strategies

#endif  // CRITICALITY__STRATEGIES__STRATEGIES_HPP_
