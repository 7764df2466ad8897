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

#ifndef CRITICALITY__IO__CLI_HPP_
#define CRITICALITY__IO__CLI_HPP_

#include <ostream>

namespace criticality::io
{

/// Entry point of the `crit` tool. Subcommands: generate, evaluate, sweep,
/// combos, bidir, validate, import-csv. Returns 0 on success, 1 on a runtime
/// error and the CLI11 code on a usage error.
int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

}  // namespace criticality::io

#endif  // CRITICALITY__IO__CLI_HPP_
