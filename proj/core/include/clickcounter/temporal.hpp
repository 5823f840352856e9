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
#include <span>
#include <vector>

#include "clickcounter/distribution.hpp"
#include "clickcounter/probability.hpp"

namespace clickcounter {

/// Largest coupler count for which 2^N detectors fit in 64 bits.
inline constexpr std::uint32_t kMaxCouplers = 62;

/// A temporal multiplexer: N balanced couplers fan the light out into
/// n = 2^N time bins, each coupler passing a fraction eta_c. The detectors
/// have efficiency eta and no dark counts.
struct TemporalArrayConfig {
  std::uint32_t couplers = 0;
  Probability eta_c{1.0};
  Probability eta{1.0};

  /// 2^N. Throws std::domain_error above kMaxCouplers.
  std::uint64_t detectors() const;
  DetectorArrayModel model() const;
};

/// eta_c^N * eta; exact when both inputs are.
Probability effective_efficiency(const TemporalArrayConfig& cfg);

/// Total error of the temporal array for m input photons.
double temporal_error(std::uint64_t m, const TemporalArrayConfig& cfg, EvalMode mode = EvalMode::automatic);

struct CouplerOptimum {
  std::uint32_t couplers = 0;
  double epsilon = 1.0;
  /// The optimum sits at the largest N searched, so a larger search range
  /// might do better.
  bool at_search_limit = false;
};

/// Tie tolerance for the minimum; the smallest N within it wins.
inline constexpr double kOptimumTieTolerance = 1e-12;

/// Exhaustive search over N = 0..max_couplers.
CouplerOptimum optimal_coupler_count(std::uint64_t m, const Probability& eta_c, const Probability& eta,
                                     std::uint32_t max_couplers = 24, EvalMode mode = EvalMode::automatic);

struct TemporalSweepRow {
  std::uint64_t m = 0;
  std::uint32_t couplers = 0;
  double epsilon = 0.0;
};

/// Rows ordered m-major, N-minor, whatever `threads` is.
std::vector<TemporalSweepRow> sweep_temporal(std::span<const std::uint64_t> photon_numbers, const Probability& eta_c,
                                             const Probability& eta, std::uint32_t first_couplers,
                                             std::uint32_t last_couplers, EvalMode mode = EvalMode::automatic,
                                             unsigned threads = 1);

/// Minimum per photon number over the rows of a sweep, using the same
/// tie-breaking as optimal_coupler_count. `last_couplers` sets the flag.
std::vector<std::pair<std::uint64_t, CouplerOptimum>> summarize_sweep(std::span<const TemporalSweepRow> rows,
                                                                      std::uint32_t last_couplers);

}  // namespace clickcounter
