// Copyright 2026 The clickcounter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace clickcounter::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailure = 1,
  kExitArgumentError = 2,
  kExitCapabilityError = 3,
};

inline constexpr const char* kThreadsEnvVar = "CLICKCOUNTER_THREADS";

/// Entry point behind the `clickcounter` executable. `args` excludes the
/// program name. Tables go to `out` unless `--out` names a file;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clickcounter::cli
