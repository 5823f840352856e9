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

#include <optional>
#include <string>
#include <string_view>

#include "clickcounter/rational.hpp"

namespace clickcounter {

/// A probability in [0, 1]. Always has a double value; also carries the
/// exact rational it came from when constructed from one, which is what
/// exact-mode evaluation consumes.
class Probability {
 public:
  /// Throws std::domain_error outside [0, 1] or on NaN.
  Probability(double value);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error outside [0, 1].
  Probability(const ExactRational& value);  // NOLINT(google-explicit-constructor)

  /// Accepts everything ExactRational::parse does and keeps the exact value.
  static Probability parse(std::string_view text);

  double value() const { return value_; }
  bool has_exact() const { return exact_.has_value(); }
  const std::optional<ExactRational>& exact() const { return exact_; }
  /// The carried rational, or the exact binary value of the double.
  ExactRational exact_or_dyadic() const;

  bool is_zero() const { return value_ == 0.0; }
  bool is_one() const { return value_ == 1.0; }

  /// `p/q` when exact, else the double with 17 significant digits.
  std::string to_string() const;

  Probability complement() const;
  Probability times(const Probability& other) const;
  Probability pow(std::uint64_t exponent) const;

 private:
  double value_ = 0.0;
  std::optional<ExactRational> exact_;
};

}  // namespace clickcounter
