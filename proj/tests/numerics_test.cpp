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

#include "clickcounter/numerics.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "clickcounter/rational.hpp"
#include "clickcounter/signed_log.hpp"
#include "support/oracles.hpp"

using namespace clickcounter;

TEST(BinomialCoefficient, small_values) {
  EXPECT_EQ(binomial_coefficient(5, 2), 10);
  EXPECT_EQ(binomial_coefficient(7, 0), 1);
  EXPECT_EQ(binomial_coefficient(7, 7), 1);
  EXPECT_EQ(binomial_coefficient(7, -1), 0);
  EXPECT_EQ(binomial_coefficient(7, 8), 0);
  EXPECT_EQ(binomial_coefficient(0, 0), 1);
}

TEST(BinomialCoefficient, matches_pascal_triangle) {
  const auto pascal = oracle::pascal_triangle(100);
  EXPECT_EQ(binomial_coefficient(100, 50), pascal[100][50]);
  EXPECT_EQ(binomial_coefficient(100, 50).get_str(), "100891344545564193334812497256");
  for (std::uint32_t n = 0; n <= 60; ++n) {
    for (std::uint32_t k = 0; k <= n; ++k) {
      ASSERT_EQ(binomial_coefficient(n, k), pascal[n][k]) << n << "," << k;
    }
  }
}

TEST(BinomialCoefficient, pascal_recurrence) {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k) {
      ASSERT_EQ(binomial_coefficient(n, k), binomial_coefficient(n - 1, k - 1) + binomial_coefficient(n - 1, k));
    }
  }
}

TEST(Stirling, first_kind_examples) {
  EXPECT_EQ(stirling_first_signed(3, 2), -3);
  EXPECT_EQ(stirling_first_signed(3, 1), 2);
  EXPECT_EQ(stirling_first_signed(3, 0), 0);
  EXPECT_EQ(stirling_first_signed(0, 0), 1);
  EXPECT_EQ(stirling_first_signed(2, 5), 0);
  for (std::uint32_t k = 0; k <= 10; ++k) EXPECT_EQ(stirling_first_signed(k, k), 1);
}

TEST(Stirling, first_kind_matches_polynomial_expansion) {
  for (std::uint32_t k : {0u, 1u, 5u, 12u, 30u, 64u, 70u}) {
    const auto coeffs = oracle::falling_factorial_coefficients(k);
    for (std::uint32_t j = 0; j <= k; ++j) ASSERT_EQ(stirling_first_signed(k, j), coeffs[j]) << k << "," << j;
  }
}

TEST(Stirling, second_kind_examples) {
  EXPECT_EQ(stirling_second(3, 2), 3);
  EXPECT_EQ(stirling_second(4, 2), 7);
  EXPECT_EQ(stirling_second(2, 3), 0);
  EXPECT_EQ(stirling_second(0, 0), 1);
  for (std::uint32_t k = 0; k <= 10; ++k) EXPECT_EQ(stirling_second(k, k), 1);
}

TEST(Stirling, second_kind_matches_partition_enumeration) {
  for (std::uint32_t m = 0; m <= 9; ++m) {
    for (std::uint32_t k = 0; k <= m + 1; ++k) {
      ASSERT_EQ(stirling_second(m, k), oracle::count_set_partitions(m, k)) << m << "," << k;
    }
  }
}

TEST(Stirling, orthogonality) {
  for (std::uint32_t k = 0; k <= 12; ++k) {
    for (std::uint32_t l = 0; l <= k; ++l) {
      BigInt sum(0);
      for (std::uint32_t j = 0; j <= k; ++j) sum += stirling_first_signed(k, j) * stirling_second(j, l);
      ASSERT_EQ(sum, k == l ? 1 : 0) << k << "," << l;
    }
  }
}

TEST(Stirling, second_kind_expands_powers_in_falling_factorials) {
  for (std::uint32_t m = 0; m <= 10; ++m) {
    for (int x = 1; x <= 8; ++x) {
      BigInt sum(0);
      for (std::uint32_t k = 0; k <= m; ++k) sum += stirling_second(m, k) * falling_factorial(BigInt(x), k);
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(x), m);
      ASSERT_EQ(sum, power) << m << "," << x;
    }
  }
}

TEST(Stirling, beyond_memo_table) {
  // s(k, k-1) = -C(k, 2) and S(m, m-1) = C(m, 2) for every size.
  EXPECT_EQ(stirling_first_signed(80, 79), -binomial_coefficient(80, 2));
  EXPECT_EQ(stirling_second(80, 79), binomial_coefficient(80, 2));
}

TEST(ExactRational, parse_forms) {
  EXPECT_EQ(ExactRational::parse("9/10"), ExactRational(9, 10));
  EXPECT_EQ(ExactRational::parse("0.95"), ExactRational(19, 20));
  EXPECT_EQ(ExactRational::parse("1e-4"), ExactRational(1, 10000));
  EXPECT_EQ(ExactRational::parse("2.5E+3"), ExactRational(2500));
  EXPECT_EQ(ExactRational::parse(".5"), ExactRational(1, 2));
  EXPECT_EQ(ExactRational::parse("6/4"), ExactRational(3, 2));
  EXPECT_EQ(ExactRational::parse(" 1 "), ExactRational(1));
  EXPECT_THROW(ExactRational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(ExactRational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(ExactRational::parse("1.2.3"), std::invalid_argument);
  EXPECT_THROW(ExactRational::parse(""), std::invalid_argument);
}

TEST(ExactRational, lowest_terms_and_arithmetic) {
  const ExactRational a(BigInt(6), BigInt(-4));
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a + ExactRational(3, 2), ExactRational(0));
  EXPECT_EQ(a * a, ExactRational(9, 4));
  EXPECT_EQ(ExactRational(1) / ExactRational(3) * ExactRational(3), ExactRational(1));
  EXPECT_THROW(ExactRational(1) / ExactRational(0), std::domain_error);
  EXPECT_THROW(ExactRational(BigInt(1), BigInt(0)), std::domain_error);
  EXPECT_EQ(ExactRational(2, 3).pow(3), ExactRational(8, 27));
  EXPECT_EQ(ExactRational(2, 3).pow(0), ExactRational(1));
  EXPECT_LT(ExactRational(1, 3), ExactRational(1, 2));
}

TEST(ExactRational, double_conversions) {
  EXPECT_EQ(ExactRational::parse("0.95").to_double(), 0.95);
  EXPECT_EQ(ExactRational::parse("1e-4").to_double(), 1e-4);
  EXPECT_EQ(ExactRational::from_double(0.1).to_double(), 0.1);
  EXPECT_NE(ExactRational::from_double(0.1), ExactRational(1, 10));
  EXPECT_THROW(ExactRational::from_double(std::nan("")), std::domain_error);
}

TEST(SignedLogValue, round_trip) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> exponent(-300, 300);
  for (int i = 0; i < 10000; ++i) {
    const double x = (i % 2 ? -1 : 1) * std::pow(10.0, exponent(gen));
    const SignedLogValue v = SignedLogValue::from_double(x);
    ASSERT_LE(std::fabs(v.to_double() - x), 1e-15 * std::fabs(x)) << x;
  }
  EXPECT_TRUE(SignedLogValue::from_double(0.0).is_zero());
  EXPECT_EQ(SignedLogValue::from_double(0.0).to_double(), 0.0);
  EXPECT_EQ(SignedLogValue::from_double(-2.0).sign, -1);
}

TEST(SignedAccumulate, examples) {
  const std::vector<SignedLogValue> terms{SignedLogValue::from_double(1.0), SignedLogValue::from_double(-1.0),
                                          SignedLogValue::from_double(0.5)};
  const AccumulatedSum s = signed_accumulate(terms);
  EXPECT_EQ(s.value, 0.5);
  EXPECT_EQ(s.cancellation_ratio, 0.5);
  EXPECT_FALSE(s.unreliable);

  const AccumulatedSum empty = signed_accumulate({});
  EXPECT_EQ(empty.value, 0.0);
  EXPECT_EQ(empty.cancellation_ratio, 0.0);

  const std::vector<SignedLogValue> zeros(3, SignedLogValue::zero());
  EXPECT_EQ(signed_accumulate(zeros).cancellation_ratio, 0.0);
}

TEST(SignedAccumulate, large_magnitudes_rescale) {
  std::vector<SignedLogValue> terms{{1, 800.0L}, {-1, 800.0L}, {1, 790.0L}};
  AccumulatedSum s = signed_accumulate(terms);
  EXPECT_TRUE(s.unreliable);
  EXPECT_EQ(s.value, std::numeric_limits<double>::max());

  terms = {{1, 800.0L}, {-1, std::log(std::exp(800.0L) - 1.0L)}};
  s = signed_accumulate(terms);
  EXPECT_FALSE(s.unreliable);
  EXPECT_NEAR(s.cancellation_ratio, std::exp(-800.0), 1e-300);
}

TEST(SignedAccumulate, deterministic_for_fixed_order) {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> dist;
  std::vector<SignedLogValue> terms;
  for (int i = 0; i < 1000; ++i) terms.push_back(SignedLogValue::from_double(dist(gen)));
  const AccumulatedSum a = signed_accumulate(terms);
  const AccumulatedSum b = signed_accumulate(terms);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.cancellation_ratio, b.cancellation_ratio);
}

// Random signed terms, some arranged to cancel hard, against an exact sum of
// the same decoded terms.
TEST(SignedAccumulate, matches_exact_rational_sum) {
  std::mt19937_64 gen(20260101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<SignedLogValue> terms;
    const int pairs = 5000;
    const double offset_scale = std::pow(10.0, -static_cast<double>(trial % 8));
    for (int i = 0; i < pairs; ++i) {
      const double x = std::ldexp(unit(gen), static_cast<int>(unit(gen) * 40) - 20);
      terms.push_back(SignedLogValue::from_double(x));
      terms.push_back(SignedLogValue::from_double(-x * (1.0 + offset_scale * (unit(gen) - 0.5))));
    }
    std::shuffle(terms.begin(), terms.end(), gen);
    ExactRational exact;
    for (const auto& t : terms) exact += ExactRational::from_double(t.to_double());
    const AccumulatedSum s = signed_accumulate(terms);
    if (s.cancellation_ratio < 1e-6) continue;
    ++checked;
    const double reference = exact.to_double();
    ASSERT_LE(std::fabs(s.value - reference), 1e-12 * std::fabs(reference)) << "trial " << trial;
  }
  EXPECT_GE(checked, 20);
}
