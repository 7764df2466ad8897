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


#ifndef CRITICALITY__TESTS__SACRED_BOUNDARY_HPP_
#define CRITICALITY__TESTS__SACRED_BOUNDARY_HPP_

#include "criticality/metrics/sacred.hpp"
#include "oracles/worst_case.hpp"
#include "test_support.hpp"

#include <random>
#include <stdexcept>

namespace criticality::testing
{

enum class RadialCase { kRta, kRatMinus, kRtt, kTxt };

/// One randomised parameterisation of a SACRED boundary check.
struct BoundaryCase
{
  RadialCase which{RadialCase::kRta};
  double v1{0.0};
  double v2{0.0};
  double v_desired{0.0};  // R.AT- only
  metrics::SacredParameters params;
};

inline constexpr double kCarLength = 4.0;

/// Pair whose bumper gap along x is `g`.
inline std::pair<ObjectState, ObjectState> boundary_pair(const BoundaryCase & c, double g)
{
  const double offset = g + kCarLength;
  switch (c.which) {
    case RadialCase::kRta:
      return {car("ego", 0, 0, 0, c.v1), car("other", offset, 0, 0, c.v2)};
    case RadialCase::kRatMinus:
      return {car("ego", 0, 0, 0, c.v1), car("other", -offset, 0, 0, c.v2)};
    case RadialCase::kRtt:
      return {car("ego", 0, 0, 0, c.v1), car("other", offset, 0, kPi, c.v2)};
    case RadialCase::kTxt:
      return {car("ego", 0, 0, 0, c.v1, 0.0, kCarLength, 0.02),
              car("other", -offset, 0.03, 0, c.v2, 0.0, kCarLength, 0.02)};
  }
  throw std::logic_error("unknown case");
}

/// Library d_min at bumper gap `g`; throws if the sub-metric does not apply.
inline double library_d_min(const BoundaryCase & c, double g)
{
  const auto [ego, other] = boundary_pair(c, g);
  metrics::SacredParameters p = c.params;
  std::optional<metrics::SacredVerdict> v;
  switch (c.which) {
    case RadialCase::kRta:
      v = metrics::sacred_rta(ego, other, p);
      break;
    case RadialCase::kRatMinus:
      p.v_desired = c.v_desired;
      v = metrics::sacred_rat_minus(ego, other, p);
      break;
    case RadialCase::kRtt:
      v = metrics::sacred_rtt(ego, other, p);
      break;
    case RadialCase::kTxt:
      v = metrics::sacred_txt(ego, other, p);
      break;
  }
  if (!v) throw std::logic_error("sub-metric not applicable to the boundary pair");
  return v->d_min;
}

/// Smallest bumper gap in [0, hi] with d_min >= 0, located by bisection.
inline double library_boundary(const BoundaryCase & c, double hi = 2000.0)
{
  const auto f = [&](double g) { return library_d_min(c, g); };
  if (f(0.0) >= 0.0) return 0.0;
  return oracle::bisect(f, 0.0, hi, 80);
}

/// Zero-separation boundary of the worst-case simulation.
inline double simulated_boundary(const BoundaryCase & c)
{
  const auto & p = c.params;
  switch (c.which) {
    case RadialCase::kRta:
      return oracle::boundary_gap([&](double g) { return oracle::rta(g, c.v1, c.v2, p); });
    case RadialCase::kRatMinus:
      return oracle::boundary_gap(
        [&](double g) { return oracle::rat_minus(g, c.v1, c.v2, c.v_desired, p); });
    case RadialCase::kRtt:
      return oracle::boundary_gap([&](double g) { return oracle::rtt(g, c.v1, c.v2, p); });
    case RadialCase::kTxt:
      return oracle::boundary_gap([&](double g) { return oracle::txt(g, c.v1, c.v2, p); });
  }
  throw std::logic_error("unknown case");
}

/// Random parameterisation inside the domain where the closest approach of the
/// worst-case manoeuvres is the final resting separation.
inline BoundaryCase random_case(RadialCase which, std::mt19937_64 & rng)
{
  BoundaryCase c;
  c.which = which;
  auto & p = c.params;
  p.t_react_ego = uniform(rng, 0.3, 1.5);
  p.t_react_other = uniform(rng, 0.3, 1.5);
  p.a_worst_case = uniform(rng, 1.0, 4.0);
  switch (which) {
    case RadialCase::kRta:
      c.v2 = uniform(rng, 0.0, 30.0);
      c.v1 = c.v2 + uniform(rng, 0.0, 10.0);
      p.a_brake_radial_ego = uniform(rng, 3.0, 7.0);
      p.a_brake_radial_other = uniform(rng, p.a_brake_radial_ego, 9.0);
      break;
    case RadialCase::kRatMinus:
      c.v1 = uniform(rng, 0.0, 25.0);
      c.v_desired = c.v1 + uniform(rng, 0.0, 8.0);
      c.v2 = c.v_desired + uniform(rng, 0.1, 8.0);
      p.a_brake_radial_other = uniform(rng, 3.0, 7.0);
      p.a_brake_radial_ego = uniform(rng, p.a_brake_radial_other, 9.0);
      break;
    case RadialCase::kRtt:
      c.v1 = uniform(rng, 0.0, 25.0);
      c.v2 = uniform(rng, 1.0, 25.0);
      p.a_brake_radial_ego = uniform(rng, 3.0, 9.0);
      p.a_brake_radial_other = uniform(rng, 3.0, 9.0);
      break;
    case RadialCase::kTxt:
      c.v1 = uniform(rng, 0.0, 25.0);
      c.v2 = c.v1 + uniform(rng, 0.1, 8.0);
      p.a_brake_radial_ego = uniform(rng, 3.0, 9.0);
      p.a_lat_gain = uniform(rng, 0.5, p.a_brake_radial_ego);
      p.a_brake_radial_other = uniform(rng, 3.0, 9.0);
      break;
  }
  return c;
}

}  // namespace criticality::testing

#endif  // CRITICALITY__TESTS__SACRED_BOUNDARY_HPP_
