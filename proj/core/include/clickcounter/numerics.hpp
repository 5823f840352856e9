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

#include "clickcounter/rational.hpp"

namespace clickcounter {

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial_coefficient(std::uint64_t n, std::int64_t k);

/// Signed Stirling number of the first kind s(k, j): the coefficient of x^j
/// in the falling factorial x(x-1)...(x-k+1). Zero outside 0 <= j <= k.
BigInt stirling_first_signed(std::uint32_t k, std::uint32_t j);

/// Stirling number of the second kind S(m, k): the number of partitions of
/// an m-set into k non-empty blocks. Zero when k > m.
BigInt stirling_second(std::uint32_t m, std::uint32_t k);

/// Falling factorial x(x-1)...(x-k+1) for integer x.
BigInt falling_factorial(const BigInt& x, std::uint32_t k);

/// Rows up to this index are memoized; larger arguments are computed on
/// demand without caching.
inline constexpr std::uint32_t kStirlingTableSize = 64;

}  // namespace clickcounter
