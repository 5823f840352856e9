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

#include "clickcounter/cli/sweep_spec.hpp"
#include "clickcounter/cli/table.hpp"

namespace clickcounter::cli {

struct Outcome {
  Table table;
  /// False when a validation check in the run failed (exit code 1).
  bool passed = true;
};

/// Evaluates every grid point of a finalized spec. Points run on
/// `spec.threads` workers; rows are assembled in grid order, so the table
/// does not depend on the thread count.
///
/// Parameters with a single value go to the metadata; parameters swept over
/// several values become leading columns.
Outcome evaluate(const SweepSpec& spec);

}  // namespace clickcounter::cli
