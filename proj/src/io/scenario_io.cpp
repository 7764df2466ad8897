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

#include "criticality/io/scenario_io.hpp"

#include "criticality/core/dynamics.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace criticality::io
{

namespace fs = std::filesystem;
using nlohmann::json;

namespace
{

const std::set<std::string> kTopKeys = {
  "schema_version", "scenario_id", "ego_id",      "collider_id",   "collision_time",
  "frame_period",   "speed_limit", "obstacle_gaps", "metadata",    "frames"};
const std::set<std::string> kFrameKeys = {"timestamp", "objects"};
const std::set<std::string> kObjectKeys = {"id", "class", "x",  "y",      "heading", "vx",
                                           "vy", "ax",    "ay", "length", "width"};

// Carries the location prefix for error messages while walking a record.
struct Reader
{
  std::string where;

  [[noreturn]] void fail(const std::string & field, const std::string & what) const
  {
    throw LoadError(where + ": " + field + ": " + what);
  }

  void check_keys(const json & j, const std::set<std::string> & allowed, const std::string & path) const
  {
    if (!j.is_object()) fail(path.empty() ? "record" : path, "expected an object");
    for (const auto & [key, value] : j.items()) {
      if (!allowed.count(key)) fail(path.empty() ? key : path + "." + key, "unknown field");
    }
  }

  const json * optional_field(const json & j, const std::string & key) const
  {
    const auto it = j.find(key);
    if (it == j.end() || it->is_null()) return nullptr;
    return &*it;
  }

  const json & field(const json & j, const std::string & key, const std::string & path) const
  {
    const json * f = optional_field(j, key);
    if (!f) fail(path.empty() ? key : path + "." + key, "missing");
    return *f;
  }

  double number(const json & j, const std::string & path) const
  {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
  }

  std::string string(const json & j, const std::string & path) const
  {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
  }
};

json to_json(const Scenario & s)
{
  json j;
  j["schema_version"] = kScenarioSchemaVersion;
  j["scenario_id"] = s.scenario_id;
  j["ego_id"] = s.ego_id;
  j["collider_id"] = s.collider_id;
  j["collision_time"] = s.collision_time ? json(*s.collision_time) : json(nullptr);
  j["frame_period"] = s.frame_period;
  if (s.speed_limit) j["speed_limit"] = *s.speed_limit;
  if (s.obstacle_gaps) j["obstacle_gaps"] = {{"ego", s.obstacle_gaps->ego}, {"other", s.obstacle_gaps->other}};
  j["metadata"] = json::object();
  for (const auto & [k, v] : s.metadata) j["metadata"][k] = v;

  json frames = json::array();
  for (const auto & f : s.frames) {
    json objects = json::array();
    for (const auto & o : f.states) {
      objects.push_back({
        {"id", o.object_id},
        {"class", to_string(o.object_class)},
        {"x", o.position.x},
        {"y", o.position.y},
        {"heading", o.heading},
        {"vx", o.velocity.x},
        {"vy", o.velocity.y},
        {"ax", o.acceleration.x},
        {"ay", o.acceleration.y},
        {"length", o.length},
        {"width", o.width},
      });
    }
    frames.push_back({{"timestamp", f.timestamp}, {"objects", std::move(objects)}});
  }
  j["frames"] = std::move(frames);
  return j;
}

Scenario from_json(const json & j, const std::string & source)
{
  Reader r{source};
  r.check_keys(j, kTopKeys, "");

  const std::string version = r.string(r.field(j, "schema_version", ""), "schema_version");
  if (version != kScenarioSchemaVersion) {
    r.fail("schema_version", "unsupported version '" + version + "'");
  }

  Scenario s;
  s.scenario_id = r.string(r.field(j, "scenario_id", ""), "scenario_id");
  r.where = source + ": scenario '" + s.scenario_id + "'";
  s.ego_id = r.string(r.field(j, "ego_id", ""), "ego_id");
  s.collider_id = r.string(r.field(j, "collider_id", ""), "collider_id");
  if (const json * t = r.optional_field(j, "collision_time")) s.collision_time = r.number(*t, "collision_time");
  s.frame_period = r.number(r.field(j, "frame_period", ""), "frame_period");
  if (const json * v = r.optional_field(j, "speed_limit")) s.speed_limit = r.number(*v, "speed_limit");
  if (const json * g = r.optional_field(j, "obstacle_gaps")) {
    r.check_keys(*g, {"ego", "other"}, "obstacle_gaps");
    s.obstacle_gaps = StaticObstacleGaps{
      r.number(r.field(*g, "ego", "obstacle_gaps"), "obstacle_gaps.ego"),
      r.number(r.field(*g, "other", "obstacle_gaps"), "obstacle_gaps.other")};
  }
  if (const json * md = r.optional_field(j, "metadata")) {
    if (!md->is_object()) r.fail("metadata", "expected an object");
    for (const auto & [k, v] : md->items()) s.metadata[k] = r.string(v, "metadata." + k);
  }

  const json & frames = r.field(j, "frames", "");
  if (!frames.is_array()) r.fail("frames", "expected an array");

  std::set<StateKey> missing_velocity;
  std::set<StateKey> missing_acceleration;
  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    const std::string fpath = "frames[" + std::to_string(fi) + "]";
    const json & fj = frames[fi];
    r.check_keys(fj, kFrameKeys, fpath);
    ScenarioFrame frame;
    frame.timestamp = r.number(r.field(fj, "timestamp", fpath), fpath + ".timestamp");
    const json & objects = r.field(fj, "objects", fpath);
    if (!objects.is_array()) r.fail(fpath + ".objects", "expected an array");

    for (std::size_t oi = 0; oi < objects.size(); ++oi) {
      const std::string opath = fpath + ".objects[" + std::to_string(oi) + "]";
      const json & oj = objects[oi];
      r.check_keys(oj, kObjectKeys, opath);
      auto num = [&](const char * key) { return r.number(r.field(oj, key, opath), opath + "." + key); };
      auto pair = [&](const char * kx, const char * ky) -> std::optional<Vec2> {
        const json * x = r.optional_field(oj, kx);
        const json * y = r.optional_field(oj, ky);
        if (!x && !y) return std::nullopt;
        if (!x || !y) r.fail(opath + "." + (x ? ky : kx), "missing while its counterpart is present");
        return Vec2{r.number(*x, opath + "." + kx), r.number(*y, opath + "." + ky)};
      };

      ObjectState o;
      o.object_id = r.string(r.field(oj, "id", opath), opath + ".id");
      if (const json * c = r.optional_field(oj, "class")) {
        try {
          o.object_class = object_class_from_string(r.string(*c, opath + ".class"));
        } catch (const std::invalid_argument & e) {
          r.fail(opath + ".class", e.what());
        }
      }
      o.position = {num("x"), num("y")};
      o.heading = num("heading");
      if (const json * l = r.optional_field(oj, "length")) o.length = r.number(*l, opath + ".length");
      if (const json * w = r.optional_field(oj, "width")) o.width = r.number(*w, opath + ".width");
      if (auto v = pair("vx", "vy")) {
        o.velocity = *v;
      } else {
        missing_velocity.insert({fi, o.object_id});
      }
      if (auto a = pair("ax", "ay")) {
        o.acceleration = *a;
      } else {
        missing_acceleration.insert({fi, o.object_id});
      }
      frame.states.push_back(std::move(o));
    }
    s.frames.push_back(std::move(frame));
  }

  try {
    if (!missing_velocity.empty() || !missing_acceleration.empty()) {
      if (!(s.frame_period > 0.0)) r.fail("frame_period", "must be > 0 to estimate missing dynamics");
      estimate_missing_dynamics(s, missing_velocity, missing_acceleration);
    }
    validate(s);
  } catch (const ValidationError & e) {
    throw LoadError(r.where + ": " + e.what());
  }
  return s;
}

std::string read_file(const fs::path & p)
{
  std::ifstream in(p, std::ios::binary);
  if (!in) throw LoadError(p.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse(std::string_view text, const std::string & source)
{
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error & e) {
    throw LoadError(source + ": malformed JSON (" + e.what() + ")");
  }
}

void load_file(const fs::path & p, std::vector<Scenario> & out)
{
  const std::string text = read_file(p);
  if (p.extension() == ".jsonl") {
    std::istringstream lines(text);
    std::string line;
    for (std::size_t n = 1; std::getline(lines, line); ++n) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const std::string source = p.string() + ":" + std::to_string(n);
      out.push_back(from_json(parse(line, source), source));
    }
  } else {
    out.push_back(from_json(parse(text, p.string()), p.string()));
  }
}

std::vector<std::string> split_csv_line(const std::string & line)
{
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

std::string scenario_to_json(const Scenario & s, bool pretty)
{
  return to_json(s).dump(pretty ? 2 : -1);
}

Scenario scenario_from_json(std::string_view text, const std::string & source)
{
  return from_json(parse(text, source), source);
}

std::vector<fs::path> write_scenarios(const fs::path & dir, const std::vector<Scenario> & scenarios)
{
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw LoadError(dir.string() + ": cannot create directory (" + ec.message() + ")");
  std::vector<fs::path> paths;
  for (const auto & s : scenarios) {
    const fs::path p = dir / (s.scenario_id + ".json");
    std::ofstream out(p, std::ios::binary);
    if (!out) throw LoadError(p.string() + ": cannot write file");
    out << scenario_to_json(s, true) << '\n';
    paths.push_back(p);
  }
  return paths;
}

void write_scenarios_jsonl(const fs::path & file, const std::vector<Scenario> & scenarios)
{
  std::ofstream out(file, std::ios::binary);
  if (!out) throw LoadError(file.string() + ": cannot write file");
  for (const auto & s : scenarios) out << scenario_to_json(s) << '\n';
}

std::vector<Scenario> load_scenarios(const fs::path & path)
{
  std::vector<Scenario> out;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto & entry : fs::directory_iterator(path)) {
      const auto ext = entry.path().extension();
      if (entry.is_regular_file() && (ext == ".json" || ext == ".jsonl")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto & f : files) load_file(f, out);
  } else if (fs::exists(path)) {
    load_file(path, out);
  } else {
    throw LoadError(path.string() + ": no such file or directory");
  }

  std::set<std::string> ids;
  for (const auto & s : out) {
    if (!ids.insert(s.scenario_id).second) {
      throw LoadError(path.string() + ": duplicate scenario_id '" + s.scenario_id + "'");
    }
  }
  return out;
}

Scenario import_csv(const fs::path & file, const CsvImportOptions & options)
{
  const std::string text = read_file(file);
  std::istringstream lines(text);
  std::string line;
  if (!std::getline(lines, line)) throw LoadError(file.string() + ": empty file");

  std::map<std::string, std::size_t> col;
  const auto header = split_csv_line(line);
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char * required : {"timestamp", "id", "x", "y", "heading"}) {
    if (!col.count(required)) throw LoadError(file.string() + ": header: missing column '" + required + "'");
  }

  struct Row
  {
    ObjectState state;
    bool has_velocity;
    bool has_acceleration;
  };
  std::map<double, std::vector<Row>> by_time;

  for (std::size_t n = 2; std::getline(lines, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_csv_line(line);
    const std::string where = file.string() + ":" + std::to_string(n);
    auto cell = [&](const std::string & name) -> std::optional<std::string> {
      const auto it = col.find(name);
      if (it == col.end() || it->second >= cells.size() || cells[it->second].empty()) return std::nullopt;
      return cells[it->second];
    };
    auto number = [&](const std::string & name) -> std::optional<double> {
      const auto c = cell(name);
      if (!c) return std::nullopt;
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(c->data(), c->data() + c->size(), v);
      if (ec != std::errc() || ptr != c->data() + c->size()) {
        throw LoadError(where + ": column '" + name + "': not a number '" + *c + "'");
      }
      return v;
    };
    auto required = [&](const std::string & name) {
      const auto v = number(name);
      if (!v) throw LoadError(where + ": column '" + name + "': missing value");
      return *v;
    };

    Row row{};
    const auto id = cell("id");
    if (!id) throw LoadError(where + ": column 'id': missing value");
    row.state.object_id = *id;
    if (const auto c = cell("class")) {
      try {
        row.state.object_class = object_class_from_string(*c);
      } catch (const std::invalid_argument & e) {
        throw LoadError(where + ": column 'class': " + e.what());
      }
    }
    row.state.position = {required("x"), required("y")};
    row.state.heading = required("heading");
    if (const auto l = number("length")) row.state.length = *l;
    if (const auto w = number("width")) row.state.width = *w;
    const auto vx = number("vx");
    const auto vy = number("vy");
    const auto ax = number("ax");
    const auto ay = number("ay");
    row.has_velocity = vx && vy;
    row.has_acceleration = ax && ay;
    if (row.has_velocity) row.state.velocity = {*vx, *vy};
    if (row.has_acceleration) row.state.acceleration = {*ax, *ay};
    by_time[required("timestamp")].push_back(std::move(row));
  }

  Scenario s;
  s.scenario_id = options.scenario_id.empty() ? file.stem().string() : options.scenario_id;
  s.ego_id = options.ego_id;
  s.collider_id = options.collider_id;
  s.collision_time = options.collision_time;
  s.frame_period = options.frame_period;
  s.speed_limit = options.speed_limit;
  s.metadata["import.source"] = file.filename().string();

  std::set<StateKey> missing_velocity;
  std::set<StateKey> missing_acceleration;
  for (auto & [t, rows] : by_time) {
    const std::size_t fi = s.frames.size();
    ScenarioFrame frame;
    frame.timestamp = t;
    for (auto & row : rows) {
      if (!row.has_velocity) missing_velocity.insert({fi, row.state.object_id});
      if (!row.has_acceleration) missing_acceleration.insert({fi, row.state.object_id});
      frame.states.push_back(std::move(row.state));
    }
    s.frames.push_back(std::move(frame));
  }

  try {
    if (!(s.frame_period > 0.0)) throw ValidationError("frame_period must be > 0");
    estimate_missing_dynamics(s, missing_velocity, missing_acceleration);
    validate(s);
  } catch (const ValidationError & e) {
    throw LoadError(file.string() + ": scenario '" + s.scenario_id + "': " + e.what());
  }
  return s;
}

}  // namespace criticality::io
