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

#include "criticality/io/run_config.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <utility>

namespace criticality::io
{

using nlohmann::json;
using strategies::ConfigurationError;

namespace
{

template <typename T>
using Fields = std::vector<std::pair<const char *, double T::*>>;

const Fields<metrics::TimeMetricConfig> kTimeFields = {
  {"ttc_threshold", &metrics::TimeMetricConfig::ttc_threshold},
  {"mttc_threshold", &metrics::TimeMetricConfig::mttc_threshold},
  {"ttb_threshold", &metrics::TimeMetricConfig::ttb_threshold},
  {"tta_threshold", &metrics::TimeMetricConfig::tta_threshold},
  {"cif_threshold", &metrics::TimeMetricConfig::cif_threshold},
  {"ttb_brake_decel", &metrics::TimeMetricConfig::ttb_brake_decel},
};

const Fields<metrics::LsmParameters> kLsmFields = {
  {"t_delay", &metrics::LsmParameters::t_delay},
  {"a_brake", &metrics::LsmParameters::a_brake},
  {"safety_factor", &metrics::LsmParameters::safety_factor},
};

const Fields<metrics::RssParameters> kRssFields = {
  {"rho", &metrics::RssParameters::rho},
  {"a_max_accel_lon", &metrics::RssParameters::a_max_accel_lon},
  {"a_min_brake_lon", &metrics::RssParameters::a_min_brake_lon},
  {"a_max_brake_lon", &metrics::RssParameters::a_max_brake_lon},
  {"a_min_brake_correct", &metrics::RssParameters::a_min_brake_correct},
  {"a_max_accel_lat", &metrics::RssParameters::a_max_accel_lat},
  {"a_min_brake_lat", &metrics::RssParameters::a_min_brake_lat},
  {"mu", &metrics::RssParameters::mu},
};

const Fields<metrics::SacredParameters> kSacredFields = {
  {"t_react_ego", &metrics::SacredParameters::t_react_ego},
  {"t_react_other", &metrics::SacredParameters::t_react_other},
  {"a_worst_case", &metrics::SacredParameters::a_worst_case},
  {"a_brake_radial_ego", &metrics::SacredParameters::a_brake_radial_ego},
  {"a_brake_radial_other", &metrics::SacredParameters::a_brake_radial_other},
  {"a_lat_gain", &metrics::SacredParameters::a_lat_gain},
};

template <typename E>
using EnumNames = std::vector<std::pair<E, const char *>>;

const EnumNames<metrics::TtaMeanSpeedMode> kTtaModes = {
  {metrics::TtaMeanSpeedMode::kPairMean, "pair_mean"},
  {metrics::TtaMeanSpeedMode::kEgoOnly, "ego_only"},
};
const EnumNames<metrics::MttcRadicand> kRadicands = {
  {metrics::MttcRadicand::kRelativeSpeed, "relative_speed"},
  {metrics::MttcRadicand::kPrintedEgoSpeed, "printed_ego_speed"},
};
const EnumNames<metrics::TxtPrimeStoppingTerm> kStoppingTerms = {
  {metrics::TxtPrimeStoppingTerm::kStoppingDistance, "stopping_distance"},
  {metrics::TxtPrimeStoppingTerm::kPrintedSquareRoot, "printed_square_root"},
};
const EnumNames<strategies::RatingMode> kModes = {
  {strategies::RatingMode::kUnidirectional, "unidirectional"},
  {strategies::RatingMode::kBidirectional, "bidirectional"},
};

template <typename E>
const char * name_of(const EnumNames<E> & names, E value)
{
  for (const auto & [v, n] : names) {
    if (v == value) return n;
  }
  return "";
}

struct Parser
{
  std::string source;

  [[noreturn]] void fail(const std::string & key, const std::string & what) const
  {
    throw ConfigurationError(source + ": " + key + ": " + what);
  }

  void require_object(const json & j, const std::string & key) const
  {
    if (!j.is_object()) fail(key, "expected an object");
  }

  double number(const json & j, const std::string & key) const
  {
    if (!j.is_number()) fail(key, "expected a number");
    return j.get<double>();
  }

  std::string string(const json & j, const std::string & key) const
  {
    if (!j.is_string()) fail(key, "expected a string");
    return j.get<std::string>();
  }

  template <typename E>
  E enumeration(const json & j, const EnumNames<E> & names, const std::string & key) const
  {
    const std::string s = string(j, key);
    for (const auto & [v, n] : names) {
      if (s == n) return v;
    }
    fail(key, "unknown value '" + s + "'");
  }

  template <typename F>
  auto wrap(const std::string & key, F && f) const
  {
    try {
      return f();
    } catch (const ConfigurationError & e) {
      fail(key, e.what());
    } catch (const std::invalid_argument & e) {
      fail(key, e.what());
    }
  }

  // Fills the numeric fields of `target` from `j`; other keys are offered to `extra`.
  template <typename T>
  void fill(
    const json & j, T & target, const Fields<T> & fields, const std::string & section,
    const std::function<bool(const std::string &, const json &)> & extra) const
  {
    require_object(j, section);
    for (const auto & [key, value] : j.items()) {
      const std::string path = section + "." + key;
      bool matched = false;
      for (const auto & [name, member] : fields) {
        if (key == name) {
          target.*member = number(value, path);
          matched = true;
        }
      }
      if (!matched && !(extra && extra(key, value))) fail(path, "unknown key");
    }
  }
};

template <typename T>
json fields_to_json(const T & value, const Fields<T> & fields)
{
  json j = json::object();
  for (const auto & [name, member] : fields) j[name] = value.*member;
  return j;
}

}  // namespace

std::string_view to_string(ReportFormat f)
{
  switch (f) {
    case ReportFormat::kCsv:
      return "csv";
    case ReportFormat::kJson:
      return "json";
    case ReportFormat::kMarkdown:
      return "markdown";
  }
  return "";
}

ReportFormat report_format_from_string(std::string_view s)
{
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "json") return ReportFormat::kJson;
  if (s == "markdown" || s == "md") return ReportFormat::kMarkdown;
  throw ConfigurationError("unknown report format '" + std::string(s) + "'");
}

std::vector<double> RunConfig::grid_for(strategies::MetricKind kind) const
{
  const auto it = sweep_grids.find(kind);
  return it != sweep_grids.end() ? it->second : evaluation::default_grid(kind);
}

RunConfig parse_run_config(std::string_view json_text, const std::string & source)
{
  Parser p{source};
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error & e) {
    throw ConfigurationError(source + ": malformed JSON (" + e.what() + ")");
  }
  p.require_object(root, "config");

  RunConfig cfg;
  for (const auto & [key, value] : root.items()) {
    if (key == "metrics") {
      if (!value.is_array()) p.fail(key, "expected an array");
      for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string path = "metrics[" + std::to_string(i) + "]";
        const json & m = value[i];
        p.require_object(m, path);
        MetricSelection sel;
        bool has_kind = false;
        for (const auto & [mk, mv] : m.items()) {
          if (mk == "kind") {
            sel.kind = p.wrap(path + ".kind", [&] {
              return strategies::metric_kind_from_string(p.string(mv, path + ".kind"));
            });
            has_kind = true;
          } else if (mk == "threshold") {
            if (!mv.is_null()) sel.threshold = p.number(mv, path + ".threshold");
          } else {
            p.fail(path + "." + mk, "unknown key");
          }
        }
        if (!has_kind) p.fail(path + ".kind", "missing");
        if (sel.threshold && !strategies::has_threshold(sel.kind)) {
          p.fail(path + ".threshold", std::string(strategies::display_name(sel.kind)) + " takes no threshold");
        }
        cfg.metrics.push_back(sel);
      }
    } else if (key == "mode") {
      cfg.mode = p.enumeration(value, kModes, key);
    } else if (key == "fr_mode") {
      cfg.fr_mode = p.wrap(key, [&] { return evaluation::fr_mode_from_string(p.string(value, key)); });
    } else if (key == "sweep_grids") {
      p.require_object(value, key);
      for (const auto & [gk, gv] : value.items()) {
        const std::string path = key + "." + gk;
        const auto kind = p.wrap(path, [&] { return strategies::metric_kind_from_string(gk); });
        if (!strategies::has_threshold(kind)) p.fail(path, "metric has no threshold");
        if (!gv.is_array() || gv.empty()) p.fail(path, "expected a non-empty array");
        std::vector<double> grid;
        for (const auto & t : gv) grid.push_back(p.number(t, path));
        cfg.sweep_grids[kind] = std::move(grid);
      }
    } else if (key == "format") {
      cfg.format = p.wrap(key, [&] { return report_format_from_string(p.string(value, key)); });
    } else if (key == "inputs") {
      if (!value.is_array()) p.fail(key, "expected an array");
      for (const auto & in : value) cfg.inputs.push_back(p.string(in, key));
    } else if (key == "output") {
      if (!value.is_null()) cfg.output = p.string(value, key);
    } else if (key == "parameters") {
      p.require_object(value, key);
      for (const auto & [section, body] : value.items()) {
        const std::string path = key + "." + section;
        if (section == "time") {
          p.fill(body, cfg.defaults.time, kTimeFields, path, [&](const std::string & k, const json & v) {
            if (k == "tta_mean_speed_mode") {
              cfg.defaults.time.tta_mean_speed_mode = p.enumeration(v, kTtaModes, path + "." + k);
            } else if (k == "mttc_radicand") {
              cfg.defaults.time.mttc_radicand = p.enumeration(v, kRadicands, path + "." + k);
            } else {
              return false;
            }
            return true;
          });
          p.wrap(path, [&] { metrics::validate(cfg.defaults.time); return 0; });
        } else if (section == "lsm") {
          p.fill(body, cfg.defaults.lsm, kLsmFields, path, nullptr);
          p.wrap(path, [&] { metrics::validate(cfg.defaults.lsm); return 0; });
        } else if (section == "rss") {
          p.fill(body, cfg.defaults.rss, kRssFields, path, nullptr);
          p.wrap(path, [&] { metrics::validate(cfg.defaults.rss); return 0; });
        } else if (section == "sacred") {
          p.fill(body, cfg.defaults.sacred, kSacredFields, path, [&](const std::string & k, const json & v) {
            if (k == "v_desired") {
              if (v.is_null()) {
                cfg.defaults.sacred.v_desired.reset();
              } else {
                cfg.defaults.sacred.v_desired = p.number(v, path + "." + k);
              }
            } else if (k == "txt_prime_stopping_term") {
              cfg.defaults.sacred.txt_prime_stopping_term = p.enumeration(v, kStoppingTerms, path + "." + k);
            } else {
              return false;
            }
            return true;
          });
          p.wrap(path, [&] { metrics::validate(cfg.defaults.sacred); return 0; });
        } else {
          p.fail(path, "unknown section");
        }
      }
    } else {
      p.fail(key, "unknown key");
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path & file)
{
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigurationError(file.string() + ": cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str(), file.string());
}

std::string run_config_to_json(const RunConfig & c, int indent)
{
  json j;
  json metrics = json::array();
  for (const auto & m : c.metrics) {
    json e = {{"kind", strategies::identifier(m.kind)}};
    e["threshold"] = m.threshold ? json(*m.threshold) : json(nullptr);
    metrics.push_back(e);
  }
  j["metrics"] = metrics;
  j["mode"] = name_of(kModes, c.mode);
  j["fr_mode"] = evaluation::to_string(c.fr_mode);
  json grids = json::object();
  for (auto kind : strategies::kAllMetricKinds) {
    if (strategies::has_threshold(kind)) grids[std::string(strategies::identifier(kind))] = c.grid_for(kind);
  }
  j["sweep_grids"] = grids;
  j["format"] = to_string(c.format);
  j["inputs"] = c.inputs;
  j["output"] = c.output ? json(*c.output) : json(nullptr);

  json time = fields_to_json(c.defaults.time, kTimeFields);
  time["tta_mean_speed_mode"] = name_of(kTtaModes, c.defaults.time.tta_mean_speed_mode);
  time["mttc_radicand"] = name_of(kRadicands, c.defaults.time.mttc_radicand);
  json sacred = fields_to_json(c.defaults.sacred, kSacredFields);
  sacred["v_desired"] = c.defaults.sacred.v_desired ? json(*c.defaults.sacred.v_desired) : json(nullptr);
  sacred["txt_prime_stopping_term"] = name_of(kStoppingTerms, c.defaults.sacred.txt_prime_stopping_term);
  j["parameters"] = {
    {"time", time},
    {"lsm", fields_to_json(c.defaults.lsm, kLsmFields)},
    {"rss", fields_to_json(c.defaults.rss, kRssFields)},
    {"sacred", sacred},
  };
  return j.dump(indent);
}

}  // namespace criticality::io
