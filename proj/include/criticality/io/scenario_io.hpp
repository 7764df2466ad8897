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

#ifndef CRITICALITY__IO__SCENARIO_IO_HPP_
#define CRITICALITY__IO__SCENARIO_IO_HPP_

#include "criticality/core/types.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace criticality::io
{

inline constexpr std::string_view kScenarioSchemaVersion = "1.0";

/// Unreadable file, malformed record or a scenario that fails validation.
/// The message names the file, the record and the offending field.
class LoadError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Serializes one scenario as a single JSON document (no trailing newline).
/// Doubles are written with round-trip precision.
std::string scenario_to_json(const Scenario & s, bool pretty = false);

/// Parses one scenario record. Velocity and acceleration fields may be omitted
/// per object; they are then estimated by finite differences. `source` prefixes
/// error messages.
Scenario scenario_from_json(std::string_view text, const std::string & source = "<memory>");

/// Writes `<dir>/<scenario_id>.json` for every scenario; creates `dir`.
/// Returns the written paths.
std::vector<std::filesystem::path> write_scenarios(
  const std::filesystem::path & dir, const std::vector<Scenario> & scenarios);

/// Writes all scenarios to one file, one JSON record per line.
void write_scenarios_jsonl(const std::filesystem::path & file, const std::vector<Scenario> & scenarios);

/// Loads a `.json` file (one scenario), a `.jsonl` file (one scenario per line)
/// or every `.json`/`.jsonl` file of a directory in sorted path order.
std::vector<Scenario> load_scenarios(const std::filesystem::path & path);

/// Header for flat per-frame trajectory tables.
struct CsvImportOptions
{
  std::string scenario_id;
  std::string ego_id;
  std::string collider_id;
  std::optional<double> collision_time;
  double frame_period{0.1};
  std::optional<double> speed_limit;
};

/// Imports a CSV table with header row. Required columns: timestamp, id, x, y,
/// heading. Optional columns: class, vx, vy, ax, ay, length, width. Empty or
/// absent dynamics cells are estimated by finite differences.
Scenario import_csv(const std::filesystem::path & file, const CsvImportOptions & options);

}  // namespace criticality::io

#endif  // CRITICALITY__IO__SCENARIO_IO_HPP_
