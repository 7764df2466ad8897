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

#ifndef CRITICALITY__SCEN_GEN__GENERATOR_HPP_
#define CRITICALITY__SCEN_GEN__GENERATOR_HPP_

#include "criticality/core/types.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace criticality::scen_gen
{

enum class TemplateKind {
  kHeadOn,
  kRearEndConstSpeed,
  kRearEndLeadBraking,
  kCrossing,
  kMerging,
  kLateralDrift,
  kNonAccidentPass,
};

std::string_view to_string(TemplateKind k);
TemplateKind template_kind_from_string(std::string_view s);

class GenerationError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Parameters of one synthetic two-vehicle scenario.
///
/// The ego starts at the origin heading along +x. What `initial_gap` means
/// depends on the kind:
///   head_on, rear_end_*, non_accident_pass: bumper-to-bumper distance along x
///   crossing:        ego center distance to the conflict point (with a
///                    stationary ego: distance from the ego side to the other's bumper)
///   merging, lateral_drift: side-to-side clearance along y
struct ScenarioTemplate
{
  TemplateKind kind{TemplateKind::kHeadOn};
  double ego_speed{10.0};    // m/s
  double other_speed{10.0};  // m/s
  double initial_gap{50.0};  // m
  double duration{10.0};     // s
  double frame_period{0.1};  // s
  std::uint64_t seed{0};

  double ego_length{4.5};
  double ego_width{1.8};
  double other_length{4.5};
  double other_width{1.8};

  // rear_end_lead_braking: deceleration of the lead until standstill, m/s^2.
  double other_decel{4.0};
  // merging and lateral_drift: lateral speed of the other toward the ego, m/s.
  double lateral_speed{1.0};
  // non_accident_pass: center-to-center lateral offset of the opposite lane, m.
  double lateral_offset{3.5};
  // rear_end_const_speed: the other drives into the back of the ego.
  bool ego_leads{false};

  std::optional<double> speed_limit;
  std::optional<StaticObstacleGaps> obstacle_gaps;
  std::string scenario_id;  // "<kind>-<seed>" when empty
};

void validate(const ScenarioTemplate & t);

/// A consistent template of the given kind with moderate urban speeds.
ScenarioTemplate default_template(TemplateKind kind);

/// Kinds whose scenarios end in a collision.
bool is_collision_kind(TemplateKind kind);

inline constexpr std::string_view kEgoId = "ego";
inline constexpr std::string_view kOtherId = "other";

/// Builds the frames at i * frame_period for i = 0 .. floor(duration / frame_period).
/// Collision kinds store the first time the footprint gap reaches zero.
Scenario generate(const ScenarioTemplate & t);

/// Time at which the footprint gap of the template's trajectories first reaches
/// zero, or nullopt if it stays positive over [0, duration].
std::optional<double> collision_time(const ScenarioTemplate & t);

/// Ego and other states of a template at time t.
std::pair<ObjectState, ObjectState> states_at(const ScenarioTemplate & t, double time);

struct Range
{
  double lo{0.0};
  double hi{0.0};
};

/// Additive uniform perturbations applied to each template draw.
struct Jitter
{
  Range ego_speed;
  Range other_speed;
  Range initial_gap;
};

/// Produces `count` scenarios cycling through `templates`. Scenario i uses a
/// seed derived from (seed, i); draws that yield an inconsistent template are
/// repeated with the next sub-seed.
std::vector<Scenario> generate_corpus(
  const std::vector<ScenarioTemplate> & templates, const Jitter & jitter, std::uint64_t seed,
  std::size_t count);

}  // namespace criticality::scen_gen

#endif  // CRITICALITY__SCEN_GEN__GENERATOR_HPP_
