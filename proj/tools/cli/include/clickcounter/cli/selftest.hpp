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

#include <cstdint>

#include "clickcounter/cli/evaluate.hpp"

namespace clickcounter::cli {

struct SelftestOptions {
  std::uint64_t max_n = 5;
  std::uint64_t max_m = 6;
  /// Test hook: nudges every closed-form result before comparison.
  bool inject_perturbation = false;
  unsigned threads = 1;
};

inline constexpr double kModeAgreementTolerance = 1e-10;

/// Closed form against brute force, exactly, and fast against exact mode,
/// over n in 1..max_n, m in 0..max_m, eta in {0, 1/4, 1/2, 1} and
/// p_d in {0, 1/10}. One row per grid point.
Outcome run_selftest(const SelftestOptions& options);

}  // namespace clickcounter::cli
