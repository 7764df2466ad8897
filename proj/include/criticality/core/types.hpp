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

#ifndef CRITICALITY__CORE__TYPES_HPP_
#define CRITICALITY__CORE__TYPES_HPP_

#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace criticality
{

/// Planar vector in the world frame. Units depend on use (m, m/s, m/s^2).
struct Vec2
{
  double x{0.0};
  double y{0.0};

  constexpr Vec2 operator+(const Vec2 & o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2 & o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2 &) const = default;

  constexpr double dot(const Vec2 & o) const { return x * o.x + y * o.y; }
  constexpr double cross(const Vec2 & o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }

  static Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
};

inline constexpr Vec2 operator*(double s, const Vec2 & v) { return v * s; }

enum class ObjectClass { kCar, kTruck, kPedestrian, kCyclist, kOther };

std::string_view to_string(ObjectClass c);
ObjectClass object_class_from_string(std::string_view name);

/// Kinematic state of one road user at one timestamp.
struct ObjectState
{
  std::string object_id;
  Vec2 position;      // m
  double heading{0};  // rad
  Vec2 velocity;      // m/s
  Vec2 acceleration;  // m/s^2
  double length{4.5};
  double width{1.8};
  ObjectClass object_class{ObjectClass::kCar};

  double speed() const { return velocity.norm(); }
  bool operator==(const ObjectState &) const = default;
};

/// Thrown when a domain value violates its invariants.
class ValidationError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

void validate(const ObjectState & state);

struct ScenarioFrame
{
  double timestamp{0.0};
  std::vector<ObjectState> states;

  const ObjectState * find(std::string_view object_id) const;
  bool operator==(const ScenarioFrame &) const = default;
};

/// Distances of each vehicle to a static obstacle on its lane (d_1e, d_2e).
struct StaticObstacleGaps
{
  double ego{0.0};
  double other{0.0};
  bool operator==(const StaticObstacleGaps &) const = default;
};

struct Scenario
{
  std::string scenario_id;
  std::vector<ScenarioFrame> frames;
  std::string ego_id;
  std::string collider_id;
  std::optional<double> collision_time;
  double frame_period{0.1};
  std::optional<double> speed_limit;
  std::optional<StaticObstacleGaps> obstacle_gaps;
  // Free-form provenance, e.g. the generator template and resolved parameters.
  std::map<std::string, std::string> metadata;

  bool operator==(const Scenario &) const = default;
};

/// Checks every Scenario invariant; throws ValidationError naming the scenario and field.
void validate(const Scenario & scenario);

}  // namespace criticality

#endif  // CRITICALITY__CORE__TYPES_HPP_
