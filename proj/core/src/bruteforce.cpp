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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "clickcounter/distribution.hpp"
#include "clickcounter/exceptions.hpp"
#include "clickcounter/numerics.hpp"

namespace clickcounter {
namespace {

// Walks every x in N^n with |x|_1 = m and accumulates the click-count mass
// of each configuration. Scalar is double or ExactRational.
template <typename Scalar>
class Enumerator {
 public:
  Enumerator(std::uint64_t m, std::uint64_t n, std::vector<Scalar> dark_given_hits,
             std::vector<Scalar> click_given_hits, std::vector<Scalar> multinomial_over_nm)
      : m_(m),
        n_(n),
        dark_(std::move(dark_given_hits)),
        click_(std::move(click_given_hits)),
        weight_(std::move(multinomial_over_nm)),
        hits_(n, 0),
        mass_(n + 1, Scalar(0)) {}

  std::vector<Scalar> run() {
    place(0, m_);
    return std::move(mass_);
  }

 private:
  void place(std::uint64_t detector, std::uint64_t remaining) {
    if (detector + 1 == n_) {
      hits_[detector] = remaining;
      accumulate();
      return;
    }
    for (std::uint64_t x = 0; x <= remaining; ++x) {
      hits_[detector] = x;
      place(detector + 1, remaining - x);
    }
  }

  // m! / prod x_i! / n^m, then every click pattern of the n detectors.
  void accumulate() {
    Scalar weight = weight_[0];
    for (std::uint64_t x : hits_) weight = weight * weight_[x + 1];
    const std::uint64_t patterns = std::uint64_t{1} << n_;
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      Scalar p = weight;
      for (std::uint64_t i = 0; i < n_; ++i) {
        p = p * (((mask >> i) & 1U) ? click_[hits_[i]] : dark_[hits_[i]]);
      }
      mass_[static_cast<std::size_t>(std::popcount(mask))] += p;
    }
  }

  std::uint64_t m_;
  std::uint64_t n_;
  std::vector<Scalar> dark_;
  std::vector<Scalar> click_;
  // weight_[0] = m!/n^m, weight_[x+1] = 1/x!.
  std::vector<Scalar> weight_;
  std::vector<std::uint64_t> hits_;
  std::vector<Scalar> mass_;
};

}  // namespace

ClickDistribution click_distribution_bruteforce(std::uint64_t m, const DetectorArrayModel& model,
                                                BruteForceLimits limits) {
  const std::uint64_t n = model.n();
  if (n > limits.max_n || m > limits.max_m) {
    throw WorkBoundError("brute-force enumeration limited to n <= " + std::to_string(limits.max_n) +
                         ", m <= " + std::to_string(limits.max_m) + " (got n = " + std::to_string(n) +
                         ", m = " + std::to_string(m) + ")");
  }
  if (n >= 63) throw WorkBoundError("brute-force click patterns need n < 63");

  ClickDistribution out;
  out.m = m;
  out.n = n;
  out.kind = DistributionKind::brute_force;

  BigInt n_pow;
  mpz_pow_ui(n_pow.get_mpz_t(), to_big(n).get_mpz_t(), m);
  BigInt m_fact;
  mpz_fac_ui(m_fact.get_mpz_t(), m);

  if (model.has_exact()) {
    const ExactRational& eta = *model.eta().exact();
    const ExactRational& pd = *model.dark_count().exact();
    std::vector<ExactRational> dark;
    std::vector<ExactRational> click;
    std::vector<ExactRational> weight{ExactRational(m_fact, n_pow)};
    for (std::uint64_t x = 0; x <= m; ++x) {
      dark.push_back(single_click_prob(0, x, eta, pd));
      click.push_back(single_click_prob(1, x, eta, pd));
      BigInt x_fact;
      mpz_fac_ui(x_fact.get_mpz_t(), x);
      weight.emplace_back(BigInt(1), x_fact);
    }
    out.exact_probs = Enumerator<ExactRational>(m, n, dark, click, weight).run();
    ExactRational total;
    for (const auto& p : out.exact_probs) {
      out.probs.push_back(p.to_double());
      total += p;
    }
    out.normalization_residual = (total - ExactRational(1)).to_double();
    return out;
  }

  const double eta = model.eta().value();
  const double pd = model.dark_count().value();
  std::vector<double> dark;
  std::vector<double> click;
  std::vector<double> weight{m_fact.get_d() / n_pow.get_d()};
  for (std::uint64_t x = 0; x <= m; ++x) {
    dark.push_back(single_click_prob(0, x, eta, pd));
    click.push_back(single_click_prob(1, x, eta, pd));
    BigInt x_fact;
    mpz_fac_ui(x_fact.get_mpz_t(), x);
    weight.push_back(1.0 / x_fact.get_d());
  }
  out.probs = Enumerator<double>(m, n, dark, click, weight).run();
  double total = 0.0;
  for (double p : out.probs) total += p;
  out.normalization_residual = total - 1.0;
  return out;
}

}  // namespace clickcounter
