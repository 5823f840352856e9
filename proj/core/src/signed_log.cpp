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

#include "clickcounter/signed_log.hpp"

#include <algorithm>
#include <cmath>

namespace clickcounter {
namespace {

// exp() overflows just above 709.78; keep a margin for the running sum.
constexpr long double kDirectDecodeLimit = 700.0L;

struct Neumaier {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      compensation += (sum - t) + x;
    } else {
      compensation += (x - t) + sum;
    }
    sum = t;
  }

  double result() const { return sum + compensation; }
};

}  // namespace

SignedLogValue SignedLogValue::from_double(double value) {
  if (value == 0.0) return zero();
  return {value > 0 ? 1 : -1, std::log(static_cast<long double>(std::fabs(value)))};
}

double SignedLogValue::to_double() const {
  if (sign == 0) return 0.0;
  return static_cast<double>(sign * std::exp(log_magnitude));
}

SignedLogValue operator*(const SignedLogValue& lhs, const SignedLogValue& rhs) {
  if (lhs.sign == 0 || rhs.sign == 0) return SignedLogValue::zero();
  return {lhs.sign * rhs.sign, lhs.log_magnitude + rhs.log_magnitude};
}

AccumulatedSum signed_accumulate(std::span<const SignedLogValue> terms) {
  long double max_log = -std::numeric_limits<long double>::infinity();
  for (const auto& t : terms) {
    if (t.sign != 0) max_log = std::max(max_log, t.log_magnitude);
  }
  if (max_log == -std::numeric_limits<long double>::infinity()) return {};

  if (max_log <= kDirectDecodeLimit) {
    Neumaier acc;
    double max_abs = 0.0;
    for (const auto& t : terms) {
      const double x = t.to_double();
      max_abs = std::max(max_abs, std::fabs(x));
      acc.add(x);
    }
    const double value = acc.result();
    // Every term may have underflowed to zero.
    const double ratio = max_abs > 0.0 ? std::fabs(value) / max_abs : 0.0;
    return {value, ratio, false};
  }

  Neumaier acc;
  for (const auto& t : terms) {
    if (t.sign != 0) acc.add(static_cast<double>(t.sign * std::exp(t.log_magnitude - max_log)));
  }
  const double scaled = acc.result();
  AccumulatedSum out;
  out.cancellation_ratio = std::fabs(scaled);
  if (scaled == 0.0) return out;
  const long double log_value = std::log(static_cast<long double>(std::fabs(scaled))) + max_log;
  if (log_value > std::log(static_cast<long double>(std::numeric_limits<double>::max()))) {
    out.value = std::copysign(std::numeric_limits<double>::max(), scaled);
    out.unreliable = true;
  } else {
    out.value = std::copysign(static_cast<double>(std::exp(log_value)), scaled);
  }
  return out;
}

}  // namespace clickcounter
