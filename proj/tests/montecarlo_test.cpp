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

#include "clickcounter/montecarlo.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "clickcounter/distribution.hpp"

using namespace clickcounter;

namespace {

// Draws `samples` click counts straight from a reference distribution.
EmpiricalDistribution sample_from(const ClickDistribution& ref, std::uint64_t samples, std::uint64_t seed) {
  Rng rng(seed);
  EmpiricalDistribution out;
  out.m = ref.m;
  out.n = ref.n;
  out.samples = samples;
  out.counts.assign(ref.n + 1, 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    double u = rng.uniform01();
    std::uint64_t k = 0;
    while (k + 1 < ref.probs.size() && u >= ref.probs[k]) u -= ref.probs[k++];
    ++out.counts[k];
  }
  return out;
}

}  // namespace

TEST(Rng, reproducible_and_bounded) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
  Rng c(7);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_LT(c.uniform_below(13), 13u);
    const double u = c.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(derive_stream_seed(1, 0), derive_stream_seed(1, 1));
  EXPECT_NE(derive_stream_seed(1, 0), derive_stream_seed(2, 0));
}

TEST(SimulateShot, examples) {
  Rng rng(1);
  const DetectorArrayModel dark_free(5, 0.7, 0.0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(simulate_shot(0, dark_free, rng), 0u);
  const DetectorArrayModel single(1, 1.0, 0.0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(simulate_shot(5, single, rng), 1u);
}

TEST(SimulateShot, two_photon_collisions) {
  const DetectorArrayModel model(2, 1.0, 0.0);
  SimulationConfig cfg;
  cfg.samples = 100000;
  cfg.seed = 11;
  const auto emp = empirical_distribution(2, model, cfg);
  const double p2 = static_cast<double>(emp.counts[2]) / static_cast<double>(cfg.samples);
  const double sigma = std::sqrt(0.25 / static_cast<double>(cfg.samples));
  EXPECT_NEAR(p2, 0.5, 3 * sigma);
  EXPECT_EQ(emp.counts[0], 0u);
}

TEST(SimulateShot, per_detector_marginal_matches_click_model) {
  // Detector 0 clicks iff the single-detector array of its own photons does.
  const std::uint64_t m = 3;
  const std::uint64_t n = 4;
  const double eta = 0.6;
  const double pd = 0.05;
  double expected = 0.0;
  for (std::uint64_t x = 0; x <= m; ++x) {
    const double weight = std::tgamma(m + 1.0) / (std::tgamma(x + 1.0) * std::tgamma(m - x + 1.0)) *
                          std::pow(1.0 / n, static_cast<double>(x)) *
                          std::pow(1.0 - 1.0 / n, static_cast<double>(m - x));
    expected += weight * single_click_prob(1, x, eta, pd);
  }
  // Mean clicks over n detectors is n times the marginal.
  SimulationConfig cfg;
  cfg.samples = 200000;
  cfg.seed = 5;
  const auto emp = empirical_distribution(m, DetectorArrayModel(n, eta, pd), cfg);
  double mean = 0.0;
  for (std::size_t k = 0; k < emp.counts.size(); ++k) mean += static_cast<double>(k * emp.counts[k]);
  mean /= static_cast<double>(cfg.samples);
  const double sigma = std::sqrt(static_cast<double>(n) * static_cast<double>(n) / 4.0 / static_cast<double>(cfg.samples));
  EXPECT_NEAR(mean / static_cast<double>(n), expected, 3 * sigma / static_cast<double>(n));
}

TEST(EmpiricalDistribution, single_sample) {
  SimulationConfig cfg;
  cfg.samples = 1;
  const auto emp = empirical_distribution(3, DetectorArrayModel(4, 0.5, 0.1), cfg);
  std::uint64_t total = 0;
  for (auto c : emp.counts) total += c;
  EXPECT_EQ(total, 1u);
}

TEST(EmpiricalDistribution, deterministic_across_threads) {
  const DetectorArrayModel model(8, 0.7, 0.01);
  SimulationConfig cfg;
  cfg.samples = 50000;
  cfg.seed = 42;
  cfg.chunk_size = 4096;
  const auto a = empirical_distribution(4, model, cfg);
  cfg.threads = 4;
  const auto b = empirical_distribution(4, model, cfg);
  const auto c = empirical_distribution(4, model, cfg);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(b.counts, c.counts);
  cfg.seed = 43;
  EXPECT_NE(empirical_distribution(4, model, cfg).counts, a.counts);
}

TEST(EmpiricalDistribution, rejects_bad_config) {
  SimulationConfig cfg;
  cfg.samples = 0;
  EXPECT_THROW(empirical_distribution(1, DetectorArrayModel(2, 0.5, 0.0), cfg), std::invalid_argument);
  cfg.samples = 1;
  cfg.chunk_size = 0;
  EXPECT_THROW(empirical_distribution(1, DetectorArrayModel(2, 0.5, 0.0), cfg), std::invalid_argument);
}

TEST(EmpiricalDistribution, total_variation_shrinks_with_samples) {
  const DetectorArrayModel model(8, 0.7, 0.01);
  const auto ref = click_distribution_closed(4, model, EvalMode::fast);
  std::vector<double> log_samples;
  std::vector<double> log_tv;
  for (std::uint64_t samples : {10000, 100000, 1000000}) {
    // Average a few seeds so one lucky run does not flatten the slope.
    double tv = 0.0;
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
      SimulationConfig cfg;
      cfg.samples = samples;
      cfg.seed = 1000 + seed;
      tv += goodness_of_fit(empirical_distribution(4, model, cfg), ref).tv_distance;
    }
    log_samples.push_back(std::log(static_cast<double>(samples)));
    log_tv.push_back(std::log(tv / 16));
  }
  const double slope = (log_tv.back() - log_tv.front()) / (log_samples.back() - log_samples.front());
  EXPECT_NEAR(slope, -0.5, 0.15);
}

TEST(GoodnessOfFit, exact_multiples_have_zero_statistic) {
  ClickDistribution ref;
  ref.m = 2;
  ref.n = 3;
  ref.probs = {0.125, 0.25, 0.5, 0.125};
  EmpiricalDistribution emp{2, 3, {100, 200, 400, 100}, 800};
  const GoodnessOfFit fit = goodness_of_fit(emp, ref);
  EXPECT_EQ(fit.chi2_stat, 0.0);
  EXPECT_EQ(fit.tv_distance, 0.0);
  EXPECT_EQ(fit.dof, 3u);
  EXPECT_EQ(fit.p_value, 1.0);
}

TEST(GoodnessOfFit, pools_sparse_bins_toward_m) {
  ClickDistribution ref;
  ref.m = 2;
  ref.n = 4;
  ref.probs = {0.001, 0.299, 0.5, 0.199, 0.001};
  // Expected at 1000 samples: 1, 299, 500, 199, 1. Bins 0 and 4 are pooled
  // into 1 and 3 respectively.
  EmpiricalDistribution emp{2, 4, {3, 297, 500, 197, 3}, 1000};
  const GoodnessOfFit fit = goodness_of_fit(emp, ref);
  EXPECT_EQ(fit.dof, 2u);
  EXPECT_NEAR(fit.chi2_stat, 0.0, 1e-12);
}

TEST(GoodnessOfFit, degenerate_all_pooled) {
  SimulationConfig cfg;
  const DetectorArrayModel model(3, 0.5, 0.1);
  const auto emp = empirical_distribution(2, model, cfg);
  const GoodnessOfFit fit = goodness_of_fit(emp, click_distribution_closed(2, model));
  EXPECT_EQ(fit.dof, 0u);
  EXPECT_EQ(fit.p_value, 1.0);
}

TEST(GoodnessOfFit, mismatched_shapes_throw) {
  ClickDistribution ref;
  ref.m = 2;
  ref.n = 3;
  EmpiricalDistribution emp{2, 4, {0, 0, 0, 0, 1}, 1};
  EXPECT_THROW(goodness_of_fit(emp, ref), std::invalid_argument);
}

TEST(GoodnessOfFit, calibrated_under_the_null) {
  const auto ref = click_distribution_closed(4, DetectorArrayModel(8, 0.7, 0.01), EvalMode::fast);
  int accepted = 0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    if (goodness_of_fit(sample_from(ref, 20000, 900 + trial), ref).p_value > 1e-3) ++accepted;
  }
  EXPECT_GE(accepted, 99);
}

TEST(GoodnessOfFit, detects_wrong_efficiency) {
  const DetectorArrayModel truth(8, 0.7, 0.01);
  SimulationConfig cfg;
  cfg.samples = 1000000;
  cfg.seed = 42;
  const auto emp = empirical_distribution(6, truth, cfg);
  const auto wrong = click_distribution_closed(6, DetectorArrayModel(8, 0.5, 0.01), EvalMode::fast);
  EXPECT_LT(goodness_of_fit(emp, wrong).p_value, 1e-6);
  const auto right = click_distribution_closed(6, truth, EvalMode::fast);
  EXPECT_GE(goodness_of_fit(emp, right).p_value, 1e-3);
}
