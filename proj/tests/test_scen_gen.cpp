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


#include "criticality/core/geometry.hpp"
#include "criticality/scen_gen/generator.hpp"
#include "oracles/kinematic_sim.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace criticality::scen_gen
{
namespace
{

TEST(Generator, HeadOnClosedForm)
{
  ScenarioTemplate t = default_template(TemplateKind::kHeadOn);
  t.ego_speed = 10.0;
  t.other_speed = 10.0;
  t.initial_gap = 100.0;
  const Scenario s = generate(t);
  ASSERT_TRUE(s.collision_time);
  EXPECT_NEAR(*s.collision_time, 5.0, 1e-12);
}

TEST(Generator, RearEndConstantSpeed)
{
  ScenarioTemplate t = default_template(TemplateKind::kRearEndConstSpeed);
  t.ego_speed = 15.0;
  t.other_speed = 10.0;
  t.initial_gap = 20.0;
  EXPECT_NEAR(*collision_time(t), 4.0, 1e-12);
}

TEST(Generator, RearEndEgoLeads)
{
  ScenarioTemplate t = default_template(TemplateKind::kRearEndConstSpeed);
  t.ego_speed = 10.0;
  t.other_speed = 14.0;
  t.initial_gap = 20.0;
  t.ego_leads = true;
  EXPECT_NEAR(*collision_time(t), 5.0, 1e-12);
  const auto [ego, other] = states_at(t, 0.0);
  EXPECT_LT(other.position.x, ego.position.x);
}

TEST(Generator, LeadBrakingMatchesIntegration)
{
  ScenarioTemplate t = default_template(TemplateKind::kRearEndLeadBraking);
  t.ego_speed = 20.0;
  t.other_speed = 20.0;
  t.other_decel = 4.0;
  t.initial_gap = 30.0;

  oracle::Mover lead{20.0, {oracle::brake_to_stop(4.0)}};
  oracle::Mover follower{20.0, {oracle::hold(oracle::kForever)}};
  double hit = oracle::kForever;
  for (double time = 0.0; time < 20.0; time += oracle::kDt) {
    lead.step(time, oracle::kDt);
    follower.step(time, oracle::kDt);
    if (30.0 + lead.travelled - follower.travelled <= 0.0) {
      hit = time + oracle::kDt;
      break;
    }
  }
  const auto c = collision_time(t);
  ASSERT_TRUE(c);
  EXPECT_NEAR(*c, hit, 2 * oracle::kDt);
  EXPECT_NEAR(*c, std::sqrt(15.0), 1e-9);
}

TEST(Generator, RootFoundKindsTouchAtCollisionTime)
{
  for (auto kind : {TemplateKind::kCrossing, TemplateKind::kMerging, TemplateKind::kLateralDrift}) {
    const ScenarioTemplate t = default_template(kind);
    const auto c = collision_time(t);
    ASSERT_TRUE(c) << to_string(kind);
    const auto [e0, o0] = states_at(t, *c - 1e-3);
    const auto [e1, o1] = states_at(t, *c + 1e-6);
    EXPECT_GT(relative_geometry(e0, o0).gap, 0.0) << to_string(kind);
    EXPECT_NEAR(relative_geometry(e1, o1).gap, 0.0, 1e-5) << to_string(kind);
  }
}

TEST(Generator, FrameGridAndIds)
{
  const Scenario s = generate(default_template(TemplateKind::kHeadOn));
  EXPECT_EQ(s.frames.size(), 101u);
  EXPECT_DOUBLE_EQ(s.frames.back().timestamp, 10.0);
  EXPECT_EQ(s.ego_id, kEgoId);
  EXPECT_EQ(s.collider_id, kOtherId);
  EXPECT_NO_THROW(validate(s));
}

TEST(Generator, InconsistentRearEndIsRejected)
{
  ScenarioTemplate t = default_template(TemplateKind::kRearEndConstSpeed);
  t.ego_speed = 8.0;
  t.other_speed = 15.0;
  EXPECT_THROW(generate(t), GenerationError);
}

TEST(Generator, NonAccidentPassKeepsClear)
{
  const ScenarioTemplate t = default_template(TemplateKind::kNonAccidentPass);
  EXPECT_FALSE(is_collision_kind(t.kind));
  const Scenario s = generate(t);
  EXPECT_FALSE(s.collision_time);
  double min_gap = 1e9;
  for (const auto & f : s.frames) {
    min_gap = std::min(min_gap, relative_geometry(*f.find("ego"), *f.find("other")).gap);
  }
  EXPECT_GT(min_gap, 0.0);
}

TEST(Corpus, SameSeedSameCorpus)
{
  std::vector<ScenarioTemplate> templates;
  for (auto k : {TemplateKind::kHeadOn, TemplateKind::kCrossing, TemplateKind::kMerging}) {
    templates.push_back(default_template(k));
  }
  Jitter j;
  j.ego_speed = {-2, 2};
  j.initial_gap = {-5, 5};
  EXPECT_EQ(generate_corpus(templates, j, 42, 30), generate_corpus(templates, j, 42, 30));
  EXPECT_NE(generate_corpus(templates, j, 42, 30), generate_corpus(templates, j, 43, 30));
}

TEST(Corpus, RequestedSize)
{
  std::vector<ScenarioTemplate> templates;
  for (auto k : {TemplateKind::kHeadOn, TemplateKind::kRearEndConstSpeed,
                 TemplateKind::kRearEndLeadBraking, TemplateKind::kCrossing,
                 TemplateKind::kMerging, TemplateKind::kLateralDrift}) {
    templates.push_back(default_template(k));
  }
  Jitter j;
  j.ego_speed = {-3, 3};
  j.other_speed = {-3, 3};
  j.initial_gap = {-5, 5};
  const auto corpus = generate_corpus(templates, j, 7, 159);
  ASSERT_EQ(corpus.size(), 159u);
  for (const auto & s : corpus) {
    EXPECT_TRUE(s.collision_time) << s.scenario_id;
    EXPECT_NO_THROW(validate(s));
  }
}

TEST(TemplateKindNames, RoundTrip)
{
  for (auto k : {TemplateKind::kHeadOn, TemplateKind::kRearEndConstSpeed,
                 TemplateKind::kRearEndLeadBraking, TemplateKind::kCrossing, TemplateKind::kMerging,
                 TemplateKind::kLateralDrift, TemplateKind::kNonAccidentPass}) {
    EXPECT_EQ(template_kind_from_string(to_string(k)), k);
  }
}

}  // namespace
}  // namespace criticality::scen_gen
