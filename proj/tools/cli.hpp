// Copyright 2026 The qgd Authors
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

#include <iosfwd>
#include <string>
#include <vector>

#include "qgd/error.hpp"

namespace qgd::cli {

/// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // bad flags, unreadable or malformed input, unknown gate
  kNotUnitary = 2,
  kZeroCoupling = 3,
  kNonzeroJPrime = 4,
  kNonHermitian = 5,
  kUnsupportedOp = 6,
  kStepTooCoarse = 7,
  kVerificationFailed = 8,
  kInternal = 9,
};

int exit_code_for(ErrorCode code);

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qgd::cli
