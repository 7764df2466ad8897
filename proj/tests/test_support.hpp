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


#ifndef CRITICALITY__TESTS__TEST_SUPPORT_HPP_
#define CRITICALITY__TESTS__TEST_SUPPORT_HPP_

#include "criticality/core/types.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace criticality::testing
{

/// Vehicle moving along its heading with scalar speed and acceleration.
inline ObjectState car(
  const std::string & id, double x, double y, double heading, double speed, double accel = 0.0,
  double length = 4.0, double width = 2.0)
{
  ObjectState s;
  s.object_id = id;
  s.position = {x, y};
  s.heading = heading;
  s.velocity = Vec2::unit(heading) * speed;
  s.acceleration = Vec2::unit(heading) * accel;
  s.length = length;
  s.width = width;
  return s;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string & name)
{
  const auto dir = std::filesystem::temp_directory_path() / ("criticality_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string read_file(const std::filesystem::path & p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path & p, const std::string & text)
{
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline double uniform(std::mt19937_64 & rng, double lo, double hi)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace criticality::testing

#endif  // CRITICALITY__TESTS__TEST_SUPPORT_HPP_
