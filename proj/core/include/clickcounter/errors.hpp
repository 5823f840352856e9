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
#include <span>

#include "clickcounter/distribution.hpp"
#include "clickcounter/probability.hpp"
#include "clickcounter/rational.hpp"

namespace clickcounter {

/// Half the L1 distance between two vectors indexed by k, zero-padding the
/// shorter one. Equals the total variation distance for distributions.
double l1_half_distance(std::span<const double> p, std::span<const double> q);
ExactRational l1_half_distance(std::span<const ExactRational> p, std::span<const ExactRational> q);

/// Uses exact arithmetic when both sides carry exact probabilities.
double l1_half_distance(const ClickDistribution& p, const ClickDistribution& q);

/// The point mass at k = m: the output of an ideal number-resolving
/// detector.
ClickDistribution ideal_distribution(std::uint64_t m);

/// Distance between the array's click distribution and the ideal point mass.
/// Cross-checked against 1 - Pr(m | m); throws std::logic_error when the two
/// disagree beyond 1e-12 plus the normalization residual.
double total_error(std::uint64_t m, const DetectorArrayModel& model, EvalMode mode = EvalMode::automatic);
ExactRational total_error_exact(std::uint64_t m, const DetectorArrayModel& model);

/// 1 - (1 - p_d)^n: the dark-count error of an unilluminated array.
double dark_count_error_unilluminated(const DetectorArrayModel& model);
ExactRational dark_count_error_unilluminated_exact(const DetectorArrayModel& model);

/// Distance between the distributions with and without dark counts.
double dark_count_error_numeric(std::uint64_t m, const DetectorArrayModel& model,
                                EvalMode mode = EvalMode::automatic);

/// 1 - eta^m, cross-checked against the distance from the binomial limit to
/// the ideal point mass (throws std::logic_error beyond 1e-12).
double quantum_efficiency_error(std::uint64_t m, const Probability& eta);
ExactRational quantum_efficiency_error_exact(std::uint64_t m, const ExactRational& eta);

/// Distance between the dark-count-free n-detector distribution and its
/// binomial n -> infinity limit. In automatic mode a rational eta is
/// evaluated exactly, which costs O(m^2) thanks to the k <= m support.
double finite_size_error(std::uint64_t m, const Probability& eta, std::uint64_t n,
                         EvalMode mode = EvalMode::automatic);
ExactRational finite_size_error_exact(std::uint64_t m, const ExactRational& eta, std::uint64_t n);

enum class SeriesTruncation { leading, full };

/// The eta = 1 finite-size error as a Stirling series in 1/n:
///   full:    1/2 sum_k | sum_{l=max(1,m-k)}^{m} n^-l s(k, m-l) S(m, k) |
///   leading: C(m, 2) / n
ExactRational finite_size_error_eta1_series(std::uint64_t m, std::uint64_t n, SeriesTruncation truncation);

struct ErrorBudget {
  std::uint64_t m = 0;
  double epsilon_total = 0.0;
  double eps_d = 0.0;
  double eps_n = 0.0;
  double eps_eta = 0.0;
  /// eps_d + eps_n + eps_eta - epsilon_total; the triangle bound says >= 0.
  double triangle_slack = 0.0;

  bool triangle_holds(double tolerance = 1e-10) const { return triangle_slack >= -tolerance; }
};

ErrorBudget error_budget(std::uint64_t m, const DetectorArrayModel& model, EvalMode mode = EvalMode::automatic);

}  // namespace clickcounter
