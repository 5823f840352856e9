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
#include <vector>

#include "clickcounter/distribution.hpp"
#include "clickcounter/rng.hpp"

namespace clickcounter {

struct SimulationConfig {
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  /// Shots per RNG stream. Changing it changes the draws; changing
  /// `threads` does not.
  std::uint64_t chunk_size = 1 << 16;
  unsigned threads = 1;
};

struct EmpiricalDistribution {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  /// counts[k] for k = 0..n.
  std::vector<std::uint64_t> counts;
  std::uint64_t samples = 0;

  ClickDistribution as_distribution() const;
};

/// One detection window: each photon lands on a uniformly chosen detector
/// and is registered with probability eta; a detector with no registered
/// photon fires with probability p_d. Reuses its scratch buffer across
/// shots.
class ShotSimulator {
 public:
  ShotSimulator(std::uint64_t m, const DetectorArrayModel& model);

  /// Number of detectors that click.
  std::uint64_t operator()(Rng& rng);

 private:
  std::uint64_t m_;
  std::uint64_t n_;
  double eta_;
  double dark_count_;
  std::vector<std::uint8_t> hit_;
  std::vector<std::uint64_t> touched_;
};

std::uint64_t simulate_shot(std::uint64_t m, const DetectorArrayModel& model, Rng& rng);

/// Histogram of cfg.samples shots. Chunk c uses derive_stream_seed(seed, c).
EmpiricalDistribution empirical_distribution(std::uint64_t m, const DetectorArrayModel& model,
                                             const SimulationConfig& cfg);

struct GoodnessOfFit {
  double tv_distance = 0.0;
  double chi2_stat = 0.0;
  std::uint64_t dof = 0;
  double p_value = 1.0;
};

/// Bins with fewer than this many expected counts are pooled.
inline constexpr double kMinExpectedCount = 5.0;

/// Total variation distance plus a Pearson chi-square test of the histogram
/// against `reference`. Bins expecting fewer than kMinExpectedCount counts
/// merge into the nearest kept bin on the side of k = m (or the other side
/// when none exists there). With a single group or none, dof = 0 and
/// p_value = 1. Throws std::invalid_argument when (m, n) differ.
GoodnessOfFit goodness_of_fit(const EmpiricalDistribution& empirical, const ClickDistribution& reference);

}  // namespace clickcounter
