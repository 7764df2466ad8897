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

#include "criticality/scen_gen/generator.hpp"

#include "criticality/core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

namespace criticality::scen_gen
{

namespace
{

constexpr double kInf = std::numeric_limits<double>::infinity();
// Collision times this close past the horizon still count as inside it, s.
constexpr double kHorizonTolerance = 1e-9;

struct KindName
{
  TemplateKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
  {TemplateKind::kHeadOn, "head_on"},
  {TemplateKind::kRearEndConstSpeed, "rear_end_const_speed"},
  {TemplateKind::kRearEndLeadBraking, "rear_end_lead_braking"},
  {TemplateKind::kCrossing, "crossing"},
  {TemplateKind::kMerging, "merging"},
  {TemplateKind::kLateralDrift, "lateral_drift"},
  {TemplateKind::kNonAccidentPass, "non_accident_pass"},
};

// Constant-acceleration motion that freezes at stop_time.
struct Track
{
  Vec2 p0;
  Vec2 v0;
  Vec2 a;
  double heading{0.0};
  double stop_time{kInf};
  double length{4.5};
  double width{1.8};
  std::string id;

  ObjectState at(double t) const
  {
    ObjectState s;
    s.object_id = id;
    s.heading = heading;
    s.length = length;
    s.width = width;
    const double te = std::min(t, stop_time);
    s.position = p0 + v0 * te + a * (0.5 * te * te);
    if (t < stop_time) {
      s.velocity = v0 + a * t;
      s.acceleration = a;
    }
    return s;
  }
};

struct Tracks
{
  Track ego;
  Track other;
  std::optional<double> closed_form;  // collision time when known analytically
  bool has_closed_form{false};
};

double bumper_distance(const ScenarioTemplate & t)
{
  return 0.5 * t.ego_length + t.initial_gap + 0.5 * t.other_length;
}

Tracks build_tracks(const ScenarioTemplate & t)
{
  Tracks tr;
  tr.ego.id = std::string(kEgoId);
  tr.ego.length = t.ego_length;
  tr.ego.width = t.ego_width;
  tr.ego.v0 = {t.ego_speed, 0.0};
  tr.other.id = std::string(kOtherId);
  tr.other.length = t.other_length;
  tr.other.width = t.other_width;

  const double v1 = t.ego_speed;
  const double v2 = t.other_speed;
  const double g = t.initial_gap;

  switch (t.kind) {
    case TemplateKind::kHeadOn:
      if (v1 + v2 <= 0.0) throw GenerationError("head_on: both vehicles stationary");
      tr.other.p0 = {bumper_distance(t), 0.0};
      tr.other.heading = kPi;
      tr.other.v0 = {-v2, 0.0};
      tr.has_closed_form = true;
      tr.closed_form = g / (v1 + v2);
      break;

    case TemplateKind::kRearEndConstSpeed:
      tr.other.v0 = {v2, 0.0};
      tr.has_closed_form = true;
      if (t.ego_leads) {
        if (v2 <= v1) {
          throw GenerationError("rear_end_const_speed: follower (other) not faster than the ego");
        }
        tr.other.p0 = {-bumper_distance(t), 0.0};
        tr.closed_form = g / (v2 - v1);
      } else {
        if (v1 <= v2) {
          throw GenerationError("rear_end_const_speed: follower (ego) not faster than the lead");
        }
        tr.other.p0 = {bumper_distance(t), 0.0};
        tr.closed_form = g / (v1 - v2);
      }
      break;

    case TemplateKind::kRearEndLeadBraking: {
      const double d = t.other_decel;
      tr.other.p0 = {bumper_distance(t), 0.0};
      tr.other.v0 = {v2, 0.0};
      tr.other.a = {-d, 0.0};
      tr.other.stop_time = v2 / d;
      tr.has_closed_form = true;
      // Gap while the lead still moves: g + (v2 - v1) t - d t^2 / 2.
      const double dv = v1 - v2;
      const double t_brake = (-dv + std::sqrt(dv * dv + 2.0 * d * g)) / d;
      if (t_brake <= tr.other.stop_time) {
        tr.closed_form = t_brake;
      } else if (v1 > 0.0) {
        tr.closed_form = (g + v2 * v2 / (2.0 * d)) / v1;
      }
      break;
    }

    case TemplateKind::kCrossing:
      tr.other.heading = 0.5 * kPi;
      tr.other.v0 = {0.0, v2};
      if (v1 > 0.0) {
        tr.other.p0 = {g, -v2 * (g / v1)};
      } else {
        if (v2 <= 0.0) throw GenerationError("crossing: both vehicles stationary");
        tr.other.p0 = {0.0, -(0.5 * t.ego_width + g + 0.5 * t.other_length)};
      }
      break;

    case TemplateKind::kMerging: {
      const double vl = t.lateral_speed;
      if (v2 < vl) throw GenerationError("merging: other_speed below lateral_speed");
      const double v2x = std::sqrt(v2 * v2 - vl * vl);
      tr.other.heading = std::atan2(-vl, v2x);
      tr.other.v0 = {v2x, -vl};
      tr.other.p0 = {(v1 - v2x) * (g / vl), 0.5 * t.ego_width + g + 0.5 * t.other_width};
      break;
    }

    case TemplateKind::kLateralDrift: {
      const double vl = t.lateral_speed;
      tr.other.heading = std::atan2(-vl, v1);
      tr.other.v0 = {v1, -vl};
      tr.other.p0 = {0.0, 0.5 * t.ego_width + g + 0.5 * t.other_width};
      break;
    }

    case TemplateKind::kNonAccidentPass:
      tr.other.p0 = {bumper_distance(t), t.lateral_offset};
      tr.other.heading = kPi;
      tr.other.v0 = {-v2, 0.0};
      break;
  }
  return tr;
}

bool in_contact(const Tracks & tr, double time)
{
  return relative_geometry(tr.ego.at(time), tr.other.at(time)).gap <= 0.0;
}

std::optional<double> first_contact(const Tracks & tr, double duration, double step)
{
  if (in_contact(tr, 0.0)) return 0.0;
  double lo = 0.0;
  for (double hi = step;; hi += step) {
    hi = std::min(hi, duration);
    if (in_contact(tr, hi)) {
      for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        (in_contact(tr, mid) ? hi : lo) = mid;
      }
      return hi;
    }
    if (hi >= duration) return std::nullopt;
    lo = hi;
  }
}

std::string fmt(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(const Range & r) { return "[" + fmt(r.lo) + ", " + fmt(r.hi) + "]"; }

}  // namespace

std::string_view to_string(TemplateKind k)
{
  for (const auto & n : kKindNames) {
    if (n.kind == k) return n.name;
  }
  return "unknown";
}

TemplateKind template_kind_from_string(std::string_view s)
{
  for (const auto & n : kKindNames) {
    if (n.name == s) return n.kind;
  }
  throw GenerationError("unknown template kind '" + std::string(s) + "'");
}

bool is_collision_kind(TemplateKind kind) { return kind != TemplateKind::kNonAccidentPass; }

ScenarioTemplate default_template(TemplateKind kind)
{
  ScenarioTemplate t;
  t.kind = kind;
  switch (kind) {
    case TemplateKind::kHeadOn:
    case TemplateKind::kNonAccidentPass:
      t.ego_speed = 10.0;
      t.other_speed = 10.0;
      t.initial_gap = 60.0;
      break;
    case TemplateKind::kRearEndConstSpeed:
      t.ego_speed = 15.0;
      t.other_speed = 8.0;
      t.initial_gap = 25.0;
      break;
    case TemplateKind::kRearEndLeadBraking:
      t.ego_speed = 20.0;
      t.other_speed = 20.0;
      t.initial_gap = 30.0;
      break;
    case TemplateKind::kCrossing:
      t.ego_speed = 10.0;
      t.other_speed = 8.0;
      t.initial_gap = 40.0;
      break;
    case TemplateKind::kMerging:
      t.ego_speed = 15.0;
      t.other_speed = 15.0;
      t.initial_gap = 1.5;
      break;
    case TemplateKind::kLateralDrift:
      t.ego_speed = 15.0;
      t.other_speed = 15.0;
      t.initial_gap = 1.5;
      break;
  }
  return t;
}

void validate(const ScenarioTemplate & t)
{
  auto require = [&](bool ok, const char * what) {
    if (!ok) throw GenerationError(std::string(to_string(t.kind)) + " template: " + what);
  };
  const double values[] = {t.ego_speed,    t.other_speed,  t.initial_gap, t.duration,
                           t.frame_period, t.ego_length,   t.ego_width,   t.other_length,
                           t.other_width,  t.other_decel,  t.lateral_speed, t.lateral_offset};
  for (double v : values) require(std::isfinite(v), "non-finite parameter");
  require(t.duration > 0.0, "duration must be > 0");
  require(t.frame_period > 0.0, "frame_period must be > 0");
  require(t.ego_speed >= 0.0 && t.other_speed >= 0.0, "speeds must be >= 0");
  require(t.initial_gap >= 0.0, "initial_gap must be >= 0");
  require(
    t.ego_length > 0.0 && t.ego_width > 0.0 && t.other_length > 0.0 && t.other_width > 0.0,
    "vehicle dimensions must be > 0");
  if (t.kind == TemplateKind::kRearEndLeadBraking) require(t.other_decel > 0.0, "other_decel must be > 0");
  if (t.kind == TemplateKind::kMerging || t.kind == TemplateKind::kLateralDrift) {
    require(t.lateral_speed > 0.0, "lateral_speed must be > 0");
  }
  if (t.speed_limit) require(*t.speed_limit > 0.0, "speed_limit must be > 0");
  if (t.obstacle_gaps) {
    require(t.obstacle_gaps->ego >= 0.0 && t.obstacle_gaps->other >= 0.0, "obstacle gaps must be >= 0");
  }
}

std::pair<ObjectState, ObjectState> states_at(const ScenarioTemplate & t, double time)
{
  const auto tr = build_tracks(t);
  return {tr.ego.at(time), tr.other.at(time)};
}

std::optional<double> collision_time(const ScenarioTemplate & t)
{
  validate(t);
  const auto tr = build_tracks(t);
  if (tr.has_closed_form) {
    if (tr.closed_form && *tr.closed_form <= t.duration + kHorizonTolerance) return tr.closed_form;
    return std::nullopt;
  }
  return first_contact(tr, t.duration, t.frame_period / 20.0);
}

Scenario generate(const ScenarioTemplate & t)
{
  const auto tc = collision_time(t);
  const auto tr = build_tracks(t);
  const std::string kind(to_string(t.kind));

  if (is_collision_kind(t.kind)) {
    if (!tc) throw GenerationError(kind + " template: no collision within " + fmt(t.duration) + " s");
  } else if (tc) {
    throw GenerationError(kind + " template: footprints touch at t = " + fmt(*tc) + " s");
  }

  Scenario s;
  s.scenario_id = t.scenario_id.empty() ? kind + "-" + std::to_string(t.seed) : t.scenario_id;
  s.ego_id = std::string(kEgoId);
  s.collider_id = std::string(kOtherId);
  s.collision_time = tc;
  s.frame_period = t.frame_period;
  s.speed_limit = t.speed_limit;
  s.obstacle_gaps = t.obstacle_gaps;

  const auto n = static_cast<std::size_t>(std::floor(t.duration / t.frame_period + 1e-9));
  s.frames.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double ts = static_cast<double>(i) * t.frame_period;
    s.frames.push_back({ts, {tr.ego.at(ts), tr.other.at(ts)}});
  }

  auto & md = s.metadata;
  md["generator.kind"] = kind;
  md["generator.ego_speed"] = fmt(t.ego_speed);
  md["generator.other_speed"] = fmt(t.other_speed);
  md["generator.initial_gap"] = fmt(t.initial_gap);
  md["generator.duration"] = fmt(t.duration);
  md["generator.seed"] = std::to_string(t.seed);
  switch (t.kind) {
    case TemplateKind::kRearEndConstSpeed:
      md["generator.ego_leads"] = t.ego_leads ? "true" : "false";
      break;
    case TemplateKind::kRearEndLeadBraking:
      md["generator.other_decel"] = fmt(t.other_decel);
      break;
    case TemplateKind::kMerging:
    case TemplateKind::kLateralDrift:
      md["generator.lateral_speed"] = fmt(t.lateral_speed);
      break;
    case TemplateKind::kNonAccidentPass:
      md["generator.lateral_offset"] = fmt(t.lateral_offset);
      break;
    default:
      break;
  }
  if (tc) md["generator.collision_time"] = fmt(*tc);
  return s;
}

std::vector<Scenario> generate_corpus(
  const std::vector<ScenarioTemplate> & templates, const Jitter & jitter, std::uint64_t seed,
  std::size_t count)
{
  if (count > 0 && templates.empty()) throw GenerationError("generate_corpus: no templates");
  for (const Range * r : {&jitter.ego_speed, &jitter.other_speed, &jitter.initial_gap}) {
    if (!(r->lo <= r->hi)) throw GenerationError("generate_corpus: jitter range with lo > hi");
  }

  constexpr int kMaxAttempts = 100;
  std::vector<Scenario> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto & base = templates[i % templates.size()];
    std::string last_error;
    bool done = false;
    for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
      std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(attempt)};
      std::mt19937_64 rng(seq);
      auto draw = [&](const Range & r) { return std::uniform_real_distribution<double>(r.lo, r.hi)(rng); };

      ScenarioTemplate t = base;
      t.ego_speed += draw(jitter.ego_speed);
      t.other_speed += draw(jitter.other_speed);
      t.initial_gap += draw(jitter.initial_gap);
      t.seed = i;
      char id[64];
      std::snprintf(id, sizeof(id), "scn-%04zu-%s", i, std::string(to_string(t.kind)).c_str());
      t.scenario_id = id;
      try {
        Scenario s = generate(t);
        s.metadata["corpus.seed"] = std::to_string(seed);
        s.metadata["corpus.index"] = std::to_string(i);
        s.metadata["corpus.attempt"] = std::to_string(attempt);
        s.metadata["corpus.jitter.ego_speed"] = fmt(jitter.ego_speed);
        s.metadata["corpus.jitter.other_speed"] = fmt(jitter.other_speed);
        s.metadata["corpus.jitter.initial_gap"] = fmt(jitter.initial_gap);
        out.push_back(std::move(s));
        done = true;
      } catch (const GenerationError & e) {
        last_error = e.what();
      }
    }
    if (!done) {
      throw GenerationError(
        "generate_corpus: scenario " + std::to_string(i) + " inconsistent after " +
        std::to_string(kMaxAttempts) + " draws (" + last_error + ")");
    }
  }
  return out;
}

}  // namespace criticality::scen_gen
