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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace clickcounter {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Arithmetic never rounds.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& value);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when `denominator` is zero.
  ExactRational(const BigInt& numerator, const BigInt& denominator);

  /// Parses `p/q`, an integer, or a decimal literal with optional exponent
  /// (`0.95`, `1e-4`, `2.5E+3`). Decimals are converted by place value, so
  /// `0.95` becomes 19/20. Throws std::invalid_argument on malformed input.
  static ExactRational parse(std::string_view text);

  /// The exact binary value of a finite double. Throws std::domain_error on
  /// NaN or infinity.
  static ExactRational from_double(double value);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  /// Nearest double (correctly rounded when numerator and denominator fit
  /// in 53 bits).
  double to_double() const;
  std::string to_string() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  ExactRational abs() const;
  ExactRational pow(std::uint64_t exponent) const;

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  /// Throws std::domain_error on division by zero.
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit ExactRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& value);

inline BigInt to_big(std::uint64_t value) {
  static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
  return BigInt(static_cast<unsigned long>(value));
}

}  // namespace clickcounter
