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

#include "criticality/core/dynamics.hpp"

#include <functional>

namespace criticality
{

namespace
{

ObjectState * find_mut(ScenarioFrame & frame, const std::string & id)
{
  for (auto & s : frame.states) {
    if (s.object_id == id) return &s;
  }
  return nullptr;
}

// Finite difference of `channel` for object `id` at frame `i`.
Vec2 difference(
  Scenario & scenario, std::size_t i, const std::string & id,
  const std::function<Vec2(const ObjectState &)> & channel)
{
  auto & frames = scenario.frames;
  const ObjectState * prev = i > 0 ? find_mut(frames[i - 1], id) : nullptr;
  const ObjectState * next = i + 1 < frames.size() ? find_mut(frames[i + 1], id) : nullptr;
  const ObjectState * here = find_mut(frames[i], id);
  const double h = scenario.frame_period;
  if (prev && next) return (channel(*next) - channel(*prev)) * (1.0 / (2.0 * h));
  if (next) return (channel(*next) - channel(*here)) * (1.0 / h);
  if (prev) return (channel(*here) - channel(*prev)) * (1.0 / h);
  return {};
}

}  // namespace

void estimate_missing_dynamics(
  Scenario & scenario, const std::set<StateKey> & missing_velocity,
  const std::set<StateKey> & missing_acceleration)
{
  // Positions are never modified, so velocity estimates are order-independent.
  std::vector<std::pair<StateKey, Vec2>> velocities;
  for (const auto & key : missing_velocity) {
    if (key.first >= scenario.frames.size()) continue;
    if (!find_mut(scenario.frames[key.first], key.second)) continue;
    velocities.emplace_back(
      key, difference(scenario, key.first, key.second, [](const ObjectState & s) {
        return s.position;
      }));
  }
  for (const auto & [key, v] : velocities) {
    find_mut(scenario.frames[key.first], key.second)->velocity = v;
  }

  std::vector<std::pair<StateKey, Vec2>> accelerations;
  for (const auto & key : missing_acceleration) {
    if (key.first >= scenario.frames.size()) continue;
    if (!find_mut(scenario.frames[key.first], key.second)) continue;
    accelerations.emplace_back(
      key, difference(scenario, key.first, key.second, [](const ObjectState & s) {
        return s.velocity;
      }));
  }
  for (const auto & [key, a] : accelerations) {
    find_mut(scenario.frames[key.first], key.second)->acceleration = a;
  }
}

}  // namespace criticality
