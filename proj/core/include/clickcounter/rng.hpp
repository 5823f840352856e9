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

#include <array>
#include <cstdint>
#include <limits>

namespace clickcounter {

/// SplitMix64 finalizer; used to seed and to derive independent streams.
std::uint64_t splitmix64_mix(std::uint64_t x);

/// Seed of sub-stream `stream` of a master seed. Chunk c of a Monte Carlo
/// run always draws from stream c, so results do not depend on how chunks
/// are scheduled.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream);

/// xoshiro256** seeded through SplitMix64. Meets UniformRandomBitGenerator,
/// but the helpers below are preferred: they are bit-identical across
/// standard libraries, which the <random> distributions are not.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform on [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace clickcounter
