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

#ifndef CRITICALITY__IO__REPORT_HPP_
#define CRITICALITY__IO__REPORT_HPP_

#include "criticality/evaluation/evaluation.hpp"
#include "criticality/io/run_config.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace criticality::io
{

inline constexpr std::string_view kCsvHeader = "metric,threshold,SR,FR,tau_mean,tau_std,tau_min,fr_mode";

/// Metric column label; bidirectional reports carry a " [bidirectional]" suffix.
std::string report_label(const evaluation::EvaluationReport & r);

/// Renders reports as one document.
///   csv:      kCsvHeader then one row per report, ratios and tau to 3 decimals,
///             empty tau cells when no scenario was flagged
///   json:     full precision, per-scenario summaries, and `config_json` under "config"
///   markdown: "| Metric | T/μ | SR | FR | τ (mean, std, min) |" table, followed
///             by the configuration block when `config_json` is given
/// Throws std::invalid_argument on an empty report list.
std::string emit_report(
  const std::vector<evaluation::EvaluationReport> & reports, ReportFormat format,
  const std::string & config_json = {});

/// Parses the JSON document written by emit_report. Per-frame verdicts are not
/// part of the document and come back empty.
std::vector<evaluation::EvaluationReport> reports_from_json(std::string_view text);

/// Long-form CSV with one row per (report, scenario) for external plotting.
std::string emit_plot_data(const std::vector<evaluation::EvaluationReport> & reports);

}  // namespace criticality::io

#endif  // CRITICALITY__IO__REPORT_HPP_
