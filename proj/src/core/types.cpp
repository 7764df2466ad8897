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

#include "criticality/core/types.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace criticality
{

std::string_view to_string(ObjectClass c)
{
  switch (c) {
    case ObjectClass::kCar:
      return "car";
    case ObjectClass::kTruck:
      return "truck";
    case ObjectClass::kPedestrian:
      return "pedestrian";
    case ObjectClass::kCyclist:
      return "cyclist";
    case ObjectClass::kOther:
      return "other";
  }
  return "other";
}

ObjectClass object_class_from_string(std::string_view name)
{
  if (name == "car") return ObjectClass::kCar;
  if (name == "truck") return ObjectClass::kTruck;
  if (name == "pedestrian") return ObjectClass::kPedestrian;
  if (name == "cyclist") return ObjectClass::kCyclist;
  if (name == "other") return ObjectClass::kOther;
  throw ValidationError("unknown object class '" + std::string(name) + "'");
}

namespace
{

bool finite(const Vec2 & v) { return std::isfinite(v.x) && std::isfinite(v.y); }

[[noreturn]] void fail(const std::string & where, const std::string & what)
{
  throw ValidationError(where + ": " + what);
}

}  // namespace

void validate(const ObjectState & state)
{
  const std::string where = "object '" + state.object_id + "'";
  if (!(state.length > 0.0) || !std::isfinite(state.length)) fail(where, "length must be > 0");
  if (!(state.width > 0.0) || !std::isfinite(state.width)) fail(where, "width must be > 0");
  if (!finite(state.position)) fail(where, "position is not finite");
  if (!std::isfinite(state.heading)) fail(where, "heading is not finite");
  if (!finite(state.velocity)) fail(where, "velocity is not finite");
  if (!finite(state.acceleration)) fail(where, "acceleration is not finite");
}

const ObjectState * ScenarioFrame::find(std::string_view object_id) const
{
  const auto it = std::find_if(
    states.begin(), states.end(), [&](const ObjectState & s) { return s.object_id == object_id; });
  return it == states.end() ? nullptr : &*it;
}

void validate(const Scenario & scenario)
{
  const std::string where = "scenario '" + scenario.scenario_id + "'";
  if (scenario.scenario_id.empty()) fail(where, "scenario_id is empty");
  if (scenario.ego_id.empty()) fail(where, "ego_id is empty");
  if (scenario.collider_id.empty()) fail(where, "collider_id is empty");
  if (scenario.ego_id == scenario.collider_id) fail(where, "ego_id equals collider_id");
  if (!(scenario.frame_period > 0.0)) fail(where, "frame_period must be > 0");
  if (scenario.frames.empty()) fail(where, "no frames");

  bool ego_seen = false;
  bool collider_seen = false;
  for (std::size_t i = 0; i < scenario.frames.size(); ++i) {
    const auto & frame = scenario.frames[i];
    std::ostringstream fw;
    fw << where << " frame " << i << " (t=" << frame.timestamp << ")";
    if (!std::isfinite(frame.timestamp)) fail(fw.str(), "timestamp is not finite");
    if (i > 0) {
      const double dt = frame.timestamp - scenario.frames[i - 1].timestamp;
      if (!(dt > 0.0)) fail(fw.str(), "timestamps not strictly increasing");
      if (std::abs(dt - scenario.frame_period) > 0.01 * scenario.frame_period) {
        fail(fw.str(), "timestamp spacing deviates from frame_period by more than 1%");
      }
    }
    std::set<std::string> ids;
    for (const auto & state : frame.states) {
      if (!ids.insert(state.object_id).second) {
        fail(fw.str(), "duplicate object_id '" + state.object_id + "'");
      }
      try {
        validate(state);
      } catch (const ValidationError & e) {
        fail(fw.str(), e.what());
      }
    }
    if (ids.count(scenario.ego_id) == 0) fail(fw.str(), "ego '" + scenario.ego_id + "' missing");
    ego_seen = true;
    collider_seen = collider_seen || ids.count(scenario.collider_id) > 0;
  }
  if (!ego_seen) fail(where, "ego never present");
  if (!collider_seen) fail(where, "collider '" + scenario.collider_id + "' never present");
  if (scenario.collision_time) {
    if (!std::isfinite(*scenario.collision_time)) fail(where, "collision_time is not finite");
    if (*scenario.collision_time < scenario.frames.front().timestamp) {
      fail(where, "collision_time precedes the first frame");
    }
  }
  if (scenario.speed_limit && !(*scenario.speed_limit > 0.0)) {
    fail(where, "speed_limit must be > 0");
  }
  if (scenario.obstacle_gaps &&
      (scenario.obstacle_gaps->ego < 0.0 || scenario.obstacle_gaps->other < 0.0)) {
    fail(where, "static obstacle distances must be >= 0");
  }
}

}  // namespace criticality
