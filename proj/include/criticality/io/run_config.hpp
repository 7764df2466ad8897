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

#ifndef CRITICALITY__IO__RUN_CONFIG_HPP_
#define CRITICALITY__IO__RUN_CONFIG_HPP_

#include "criticality/evaluation/evaluation.hpp"
#include "criticality/strategies/metric_instance.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace criticality::io
{

enum class ReportFormat { kCsv, kJson, kMarkdown };

std::string_view to_string(ReportFormat f);
ReportFormat report_format_from_string(std::string_view s);

struct MetricSelection
{
  strategies::MetricKind kind{strategies::MetricKind::kTtc};
  std::optional<double> threshold;  // kind default when unset
};

/// Everything a run needs. Every field has a default, so an empty config file
/// is valid.
///
/// JSON layout (all keys optional, unknown keys rejected):
///
///   {
///     "metrics":     [{"kind": "ttc", "threshold": 2.0}, {"kind": "lsm"}],
///     "mode":        "unidirectional" | "bidirectional",
///     "fr_mode":     "per_scenario_mean" | "pooled",
///     "sweep_grids": {"ttc": [1, 2, 3, 4]},
///     "format":      "csv" | "json" | "markdown",
///     "inputs":      ["corpus/"],
///     "output":      "report.csv",
///     "parameters":  {"time": {...}, "lsm": {...}, "rss": {...}, "sacred": {...}}
///   }
struct RunConfig
{
  std::vector<MetricSelection> metrics;
  strategies::RatingMode mode{strategies::RatingMode::kUnidirectional};
  evaluation::FrMode fr_mode{evaluation::FrMode::kPerScenarioMean};
  // Overrides of evaluation::default_grid, keyed by metric kind.
  std::map<strategies::MetricKind, std::vector<double>> sweep_grids;
  ReportFormat format{ReportFormat::kCsv};
  std::vector<std::string> inputs;
  std::optional<std::string> output;
  strategies::MetricDefaults defaults;

  std::vector<double> grid_for(strategies::MetricKind kind) const;
};

/// Throws strategies::ConfigurationError naming the offending key.
RunConfig parse_run_config(std::string_view json_text, const std::string & source = "<config>");
RunConfig load_run_config(const std::filesystem::path & file);

/// Fully defaulted JSON echo of the configuration, stable key order.
std::string run_config_to_json(const RunConfig & config, int indent = 2);

}  // namespace criticality::io

#endif  // CRITICALITY__IO__RUN_CONFIG_HPP_
