// Copyright 2026 The paulisynth Authors
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

#pragma once

#include <ostream>
#include <span>
#include <string>

namespace paulisynth {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerifyFailed = 2,
  kExitOracleTooLarge = 3,
};

/// Threshold on the phase-invariant distance used by `verify`.
inline constexpr double kVerifyThreshold = 1e-8;

/// Runs one invocation; `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace paulisynth
