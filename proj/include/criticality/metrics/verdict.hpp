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

#ifndef CRITICALITY__METRICS__VERDICT_HPP_
#define CRITICALITY__METRICS__VERDICT_HPP_

#include <limits>
#include <string>
#include <string_view>

namespace criticality::metrics
{

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Formula that produced a verdict.
enum class SubCase {
  kNotApplicable,
  kTtcStationary,
  kTtcSameDirection,
  kTtcHeadsOn,
  kMttcQuadratic,
  kMttcLinear,
  kTtb,
  kTta,
  kCif,
  kLsm,
  kRssLongSame,
  kRssLongOpposite,
  kRssLateral,
  kRssContact,
  kSacredRta,
  kSacredRatMinus,
  kSacredRtt,
  kSacredTxt,
  kSureValStatic,
  kSureValTxtPrime,
};

std::string_view to_string(SubCase c);

/// Per-frame, per-object verdict of one metric.
///
/// For threshold-below metrics (Time-to-X) raw_value is a time and +infinity
/// is only ever paired with critical == false. For distance metrics raw_value
/// is the signed slack (measured distance minus required distance).
struct MetricVerdict
{
  bool critical{false};
  double raw_value{kInfinity};
  SubCase sub_case{SubCase::kNotApplicable};
  std::string metric_name;
};

}  // namespace criticality::metrics

#endif  // CRITICALITY__METRICS__VERDICT_HPP_
