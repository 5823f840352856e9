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
#include <limits>
#include <span>

namespace clickcounter {

/// A real number stored as a sign in {-1, 0, +1} and the natural log of its
/// magnitude. `log_magnitude` is -inf and unused when `sign == 0`.
///
/// The log is kept in extended precision: a double log of magnitude L only
/// pins the value to a relative |L| * 2^-53, which is too coarse once
/// alternating terms cancel.
struct SignedLogValue {
  int sign = 0;
  long double log_magnitude = -std::numeric_limits<long double>::infinity();

  static SignedLogValue zero() { return {}; }
  static SignedLogValue from_double(double value);
  /// sign * exp(log_magnitude); zero when sign is zero.
  double to_double() const;

  bool is_zero() const { return sign == 0; }

  friend SignedLogValue operator*(const SignedLogValue& lhs, const SignedLogValue& rhs);
};

struct AccumulatedSum {
  double value = 0.0;
  /// |value| / max |term|; zero when every term is zero.
  double cancellation_ratio = 0.0;
  /// Set when the sum does not fit in a double. `value` is then saturated
  /// to +-max().
  bool unreliable = false;
};

/// Neumaier-compensated sum of `terms` in input order. Terms are decoded
/// directly when they fit in a double and rescaled by the largest magnitude
/// otherwise.
AccumulatedSum signed_accumulate(std::span<const SignedLogValue> terms);

}  // namespace clickcounter
