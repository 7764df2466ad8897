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

#include "criticality/io/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace criticality::io
{

using evaluation::EvaluationReport;
using nlohmann::json;

namespace
{

std::string fixed3(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string fixed3(const std::optional<double> & v) { return v ? fixed3(*v) : ""; }

std::string tau_triple(const EvaluationReport & r)
{
  if (!r.tau_mean) return "-";
  return "(" + fixed3(*r.tau_mean) + ", " + fixed3(*r.tau_std) + ", " + fixed3(*r.tau_min) + ")";
}

json optional_number(const std::optional<double> & v) { return v ? json(*v) : json(nullptr); }

std::optional<double> number_or_none(const json & j, const char * key)
{
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<double>();
}

std::string csv(const std::vector<EvaluationReport> & reports)
{
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto & r : reports) {
    out << report_label(r) << ',' << r.threshold_label << ',' << fixed3(r.sr) << ','
        << fixed3(r.fr) << ',' << fixed3(r.tau_mean) << ',' << fixed3(r.tau_std) << ','
        << fixed3(r.tau_min) << ',' << evaluation::to_string(r.fr_mode) << '\n';
  }
  return out.str();
}

std::string markdown(const std::vector<EvaluationReport> & reports, const std::string & config_json)
{
  std::ostringstream out;
  out << "| Metric | T/μ | SR | FR | τ (mean, std, min) |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto & r : reports) {
    out << "| " << report_label(r) << " | " << r.threshold_label << " | " << fixed3(r.sr) << " | "
        << fixed3(r.fr) << " | " << tau_triple(r) << " |\n";
  }
  out << "\nFR mode: " << evaluation::to_string(reports.front().fr_mode) << "\n";
  if (!config_json.empty()) out << "\nConfiguration:\n\n```json\n" << config_json << "\n```\n";
  return out.str();
}

std::string to_json_document(const std::vector<EvaluationReport> & reports, const std::string & config_json)
{
  json doc;
  doc["schema_version"] = "1.0";
  if (!config_json.empty()) doc["config"] = json::parse(config_json);
  json list = json::array();
  for (const auto & r : reports) {
    json j;
    j["metric"] = r.metric_name;
    j["threshold"] = r.threshold_label;
    j["mode"] = strategies::to_string(r.mode);
    j["fr_mode"] = evaluation::to_string(r.fr_mode);
    j["SR"] = r.sr;
    j["FR"] = r.fr;
    j["tau_mean"] = optional_number(r.tau_mean);
    j["tau_std"] = optional_number(r.tau_std);
    j["tau_min"] = optional_number(r.tau_min);
    json results = json::array();
    for (const auto & s : r.scenario_results) {
      results.push_back({
        {"scenario_id", s.scenario_id},
        {"frames_total", s.frames_total},
        {"frames_critical", s.frames_critical},
        {"first_critical_time", optional_number(s.first_critical_time)},
        {"tau", optional_number(s.tau)},
      });
    }
    j["scenario_results"] = std::move(results);
    json skipped = json::array();
    for (const auto & s : r.skipped) skipped.push_back({{"scenario_id", s.scenario_id}, {"reason", s.reason}});
    j["skipped"] = std::move(skipped);
    list.push_back(std::move(j));
  }
  doc["reports"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace

std::string report_label(const EvaluationReport & r)
{
  return r.mode == strategies::RatingMode::kBidirectional ? r.metric_name + " [bidirectional]"
                                                          : r.metric_name;
}

std::string emit_report(
  const std::vector<EvaluationReport> & reports, ReportFormat format, const std::string & config_json)
{
  if (reports.empty()) throw std::invalid_argument("emit_report: no reports");
  switch (format) {
    case ReportFormat::kCsv:
      return csv(reports);
    case ReportFormat::kJson:
      return to_json_document(reports, config_json);
    case ReportFormat::kMarkdown:
      return markdown(reports, config_json);
  }
  return {};
}

std::vector<EvaluationReport> reports_from_json(std::string_view text)
{
  const json doc = json::parse(text.begin(), text.end());
  std::vector<EvaluationReport> out;
  for (const auto & j : doc.at("reports")) {
    EvaluationReport r;
    r.metric_name = j.at("metric").get<std::string>();
    r.threshold_label = j.at("threshold").get<std::string>();
    r.mode = j.at("mode").get<std::string>() == "bidirectional" ? strategies::RatingMode::kBidirectional
                                                                : strategies::RatingMode::kUnidirectional;
    r.fr_mode = evaluation::fr_mode_from_string(j.at("fr_mode").get<std::string>());
    r.sr = j.at("SR").get<double>();
    r.fr = j.at("FR").get<double>();
    r.tau_mean = number_or_none(j, "tau_mean");
    r.tau_std = number_or_none(j, "tau_std");
    r.tau_min = number_or_none(j, "tau_min");
    for (const auto & s : j.at("scenario_results")) {
      evaluation::ScenarioResult res;
      res.scenario_id = s.at("scenario_id").get<std::string>();
      res.frames_total = s.at("frames_total").get<std::size_t>();
      res.frames_critical = s.at("frames_critical").get<std::size_t>();
      res.first_critical_time = number_or_none(s, "first_critical_time");
      res.tau = number_or_none(s, "tau");
      r.scenario_results.push_back(std::move(res));
    }
    for (const auto & s : j.at("skipped")) {
      r.skipped.push_back({s.at("scenario_id").get<std::string>(), s.at("reason").get<std::string>()});
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string emit_plot_data(const std::vector<EvaluationReport> & reports)
{
  std::ostringstream out;
  out << "metric,threshold,mode,scenario_id,frames_total,frames_critical,frame_ratio,"
         "first_critical_time,tau\n";
  char buf[64];
  auto full = [&](const std::optional<double> & v) -> std::string {
    if (!v) return "";
    std::snprintf(buf, sizeof(buf), "%.17g", *v);
    return buf;
  };
  for (const auto & r : reports) {
    for (const auto & s : r.scenario_results) {
      const double ratio = static_cast<double>(s.frames_critical) / static_cast<double>(s.frames_total);
      out << r.metric_name << ',' << r.threshold_label << ',' << strategies::to_string(r.mode) << ','
          << s.scenario_id << ',' << s.frames_total << ',' << s.frames_critical << ',' << full(ratio)
          << ',' << full(s.first_critical_time) << ',' << full(s.tau) << '\n';
    }
  }
  return out.str();
}

}  // namespace criticality::io
