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

#include "clickcounter/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace clickcounter {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) {
    throw std::invalid_argument("malformed rational literal '" + std::string(whole) + "'");
  }
  BigInt value(std::string(text), 10);
  return negative ? BigInt(-value) : value;
}

BigInt power_of_ten(unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

ExactRational parse_decimal(std::string_view text, std::string_view whole) {
  auto fail = [&] {
    throw std::invalid_argument("malformed decimal literal '" + std::string(whole) + "'");
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) fail();
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) fail();
    if (!int_part.empty() && !all_digits(int_part)) fail();
    if (!frac_part.empty() && !all_digits(frac_part)) fail();
    digits.append(int_part).append(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) fail();
    digits.assign(text);
  }

  BigInt mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) {
    return ExactRational(BigInt(mantissa * power_of_ten(static_cast<unsigned long>(exponent))));
  }
  return ExactRational(mantissa, power_of_ten(static_cast<unsigned long>(-exponent)));
}

}  // namespace

ExactRational::ExactRational(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform; go through strings
  // only when long is narrower than int64.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    value_ = static_cast<long>(value);
  } else {
    value_ = mpq_class(std::to_string(value));
  }
}

ExactRational::ExactRational(const BigInt& value) : value_(value) {}

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(trim(text.substr(0, slash)), whole);
    BigInt den = parse_integer(trim(text.substr(slash + 1)), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    return ExactRational(num, den);
  }
  return parse_decimal(text, whole);
}

ExactRational ExactRational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("cannot convert non-finite double to rational");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return ExactRational(std::move(q));
}

double ExactRational::to_double() const {
  // Both parts exactly representable: IEEE division rounds correctly.
  constexpr unsigned kMantissaBits = std::numeric_limits<double>::digits;
  const mpz_class& num = value_.get_num();
  const mpz_class& den = value_.get_den();
  if (mpz_sizeinbase(num.get_mpz_t(), 2) <= kMantissaBits &&
      mpz_sizeinbase(den.get_mpz_t(), 2) <= kMantissaBits) {
    return num.get_d() / den.get_d();
  }
  return value_.get_d();
}

std::string ExactRational::to_string() const { return value_.get_str(10); }

ExactRational ExactRational::abs() const { return ExactRational(mpq_class(::abs(value_))); }

ExactRational ExactRational::pow(std::uint64_t exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  // Powers of a reduced fraction stay reduced and keep a positive denominator.
  mpq_class q;
  mpz_swap(mpq_numref(q.get_mpq_t()), num.get_mpz_t());
  mpz_swap(mpq_denref(q.get_mpq_t()), den.get_mpz_t());
  return ExactRational(std::move(q));
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
  return os << value.to_string();
}

}  // namespace clickcounter
