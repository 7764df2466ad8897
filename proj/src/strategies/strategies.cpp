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

#include "criticality/strategies/strategies.hpp"

namespace criticality::strategies
{

std::string_view to_string(Direction d)
{
  return d == Direction::kEgoToOther ? "ego->other" : "other->ego";
}

std::string_view to_string(RatingMode m)
{
  return m == RatingMode::kUnidirectional ? "unidirectional" : "bidirectional";
}

namespace
{

std::string threshold_label(const MetricInstance & m)
{
  const auto t = threshold_of(m);
  return t ? format_threshold(*t) : "-";
}

void append(
  StrategyVerdict & out, const MetricInstance & m, const ObjectState & actor,
  const ObjectState & target, const PairContext & ctx, Direction direction)
{
  if (evaluate_metric(m, actor, target, ctx).critical) {
    out.critical = true;
    out.contributing.push_back({m.name, direction});
  }
}

}  // namespace

Rule single_metric_rule(const MetricInstance & m)
{
  return Rule{std::string(display_name(m.kind)), threshold_label(m), {m}};
}

Rule aggregate_rule(const std::vector<MetricInstance> & members)
{
  if (members.empty()) throw ConfigurationError("aggregate needs at least one metric");
  if (members.size() == 1) return single_metric_rule(members.front());
  Rule rule;
  rule.members = members;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) {
      rule.name += "+";
      rule.threshold_label += " / ";
    }
    rule.name += display_name(members[i].kind);
    rule.threshold_label += threshold_label(members[i]);
  }
  return rule;
}

StrategyVerdict aggregate(
  const std::vector<MetricInstance> & metrics, const ObjectState & ego, const ObjectState & other,
  const PairContext & ctx)
{
  if (metrics.empty()) throw ConfigurationError("aggregate needs at least one metric");
  StrategyVerdict out;
  for (const auto & m : metrics) append(out, m, ego, other, ctx, Direction::kEgoToOther);
  return out;
}

StrategyVerdict bidirectional(
  const MetricInstance & metric, const ObjectState & ego, const ObjectState & other,
  const PairContext & ctx)
{
  StrategyVerdict out;
  append(out, metric, ego, other, ctx, Direction::kEgoToOther);
  append(out, metric, other, ego, ctx.swapped(), Direction::kOtherToEgo);
  return out;
}

StrategyVerdict rate(
  const Rule & rule, RatingMode mode, const ObjectState & ego, const ObjectState & other,
  const PairContext & ctx)
{
  if (mode == RatingMode::kUnidirectional) return aggregate(rule.members, ego, other, ctx);
  if (rule.members.empty()) throw ConfigurationError("rule '" + rule.name + "' has no metrics");
  StrategyVerdict out;
  for (const auto & m : rule.members) {
    auto v = bidirectional(m, ego, other, ctx);
    out.critical = out.critical || v.critical;
    out.contributing.insert(out.contributing.end(), v.contributing.begin(), v.contributing.end());
  }
  return out;
}

std::vector<Rule> time_distance_combinations(const MetricDefaults & defaults)
{
  const MetricInstance time_metrics[] = {
    make_instance(MetricKind::kTtc, defaults, 4.0),
    make_instance(MetricKind::kTta, defaults, 1.5),
  };
  const MetricInstance distance_metrics[] = {
    make_instance(MetricKind::kLsm, defaults),
    make_instance(MetricKind::kRss, defaults, 1.0),
    make_instance(MetricKind::kSacred, defaults),
    make_instance(MetricKind::kSureVal, defaults),
  };
  std::vector<Rule> out;
  for (const auto & t : time_metrics) {
    for (const auto & d : distance_metrics) out.push_back(aggregate_rule({t, d}));
  }
  return out;
}

}  // namespace criticality::strategies
