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

#include <vector>

namespace clickcounter {
namespace {

using Table = std::vector<std::vector<BigInt>>;

// s(k+1, j) = s(k, j-1) - k s(k, j)
Table build_stirling_first(std::uint32_t rows) {
  Table t(rows + 1);
  t[0] = {BigInt(1)};
  for (std::uint32_t k = 0; k < rows; ++k) {
    t[k + 1].assign(k + 2, BigInt(0));
    for (std::uint32_t j = 1; j <= k + 1; ++j) {
      BigInt value = t[k][j - 1];
      if (j <= k) value -= BigInt(k) * t[k][j];
      t[k + 1][j] = std::move(value);
    }
  }
  return t;
}

// S(m+1, k) = k S(m, k) + S(m, k-1)
Table build_stirling_second(std::uint32_t rows) {
  Table t(rows + 1);
  t[0] = {BigInt(1)};
  for (std::uint32_t m = 0; m < rows; ++m) {
    t[m + 1].assign(m + 2, BigInt(0));
    for (std::uint32_t k = 1; k <= m + 1; ++k) {
      BigInt value = t[m][k - 1];
      if (k <= m) value += BigInt(k) * t[m][k];
      t[m + 1][k] = std::move(value);
    }
  }
  return t;
}

const Table& stirling_first_table() {
  static const Table table = build_stirling_first(kStirlingTableSize);
  return table;
}

const Table& stirling_second_table() {
  static const Table table = build_stirling_second(kStirlingTableSize);
  return table;
}

}  // namespace

BigInt binomial_coefficient(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return BigInt(0);
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
  return result;
}

BigInt stirling_first_signed(std::uint32_t k, std::uint32_t j) {
  if (j > k) return BigInt(0);
  if (k <= kStirlingTableSize) return stirling_first_table()[k][j];
  return build_stirling_first(k)[k][j];
}

BigInt stirling_second(std::uint32_t m, std::uint32_t k) {
  if (k > m) return BigInt(0);
  if (m <= kStirlingTableSize) return stirling_second_table()[m][k];
  return build_stirling_second(m)[m][k];
}

BigInt falling_factorial(const BigInt& x, std::uint32_t k) {
  BigInt result(1);
  for (std::uint32_t i = 0; i < k; ++i) result *= x - BigInt(i);
  return result;
}

}  // namespace clickcounter
