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

#ifndef CRITICALITY__CORE__DYNAMICS_HPP_
#define CRITICALITY__CORE__DYNAMICS_HPP_

#include "criticality/core/types.hpp"

#include <set>
#include <string>
#include <utility>

namespace criticality
{

/// (frame index, object id) of a state whose channel is absent in the source data.
using StateKey = std::pair<std::size_t, std::string>;

/// Fills the listed velocity/acceleration channels by finite differences over each
/// object's track: central differences where both neighbouring frames carry the
/// object, one-sided at track ends, zero for single-frame tracks. The step is the
/// scenario frame_period. Velocities are filled before accelerations so that
/// accelerations may be derived from estimated velocities.
void estimate_missing_dynamics(
  Scenario & scenario, const std::set<StateKey> & missing_velocity,
  const std::set<StateKey> & missing_acceleration);

}  // namespace criticality

#endif  // CRITICALITY__CORE__DYNAMICS_HPP_
