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
#include <string_view>
#include <vector>

#include "clickcounter/probability.hpp"
#include "clickcounter/rational.hpp"

namespace clickcounter {

/// An array of `n` identical single-photon detectors with quantum
/// efficiency `eta` and per-window dark-count probability `dark_count`,
/// illuminated uniformly.
class DetectorArrayModel {
 public:
  /// Throws std::domain_error when n == 0.
  DetectorArrayModel(std::uint64_t n, Probability eta, Probability dark_count);

  std::uint64_t n() const { return n_; }
  const Probability& eta() const { return eta_; }
  const Probability& dark_count() const { return dark_count_; }

  /// True when both probabilities carry exact rationals.
  bool has_exact() const { return eta_.has_exact() && dark_count_.has_exact(); }

  DetectorArrayModel without_dark_counts() const;

 private:
  std::uint64_t n_;
  Probability eta_;
  Probability dark_count_;
};

enum class EvalMode { fast, exact, automatic };

enum class DistributionKind { fast, exact, brute_force, binomial_limit, empirical };

std::string_view to_string(EvalMode mode);
std::string_view to_string(DistributionKind kind);
/// Accepts "fast", "exact" and "auto". Throws std::invalid_argument.
EvalMode parse_eval_mode(std::string_view text);

/// `n` value used by distributions of the n -> infinity limit.
inline constexpr std::uint64_t kUnboundedArray = 0;

/// Relative cancellation below which a double-precision entry is re-derived
/// exactly.
inline constexpr double kCancellationThreshold = 1e-6;
/// Negative entries down to this are rounding noise and clamp to zero.
inline constexpr double kNegativeClampTolerance = 1e-10;

/// Click-count distribution Pr(k | m) for k = 0..n. Storage is truncated to
/// the support: entries past `probs.size()` are exactly zero.
struct ClickDistribution {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  DistributionKind kind = DistributionKind::fast;
  std::vector<double> probs;
  /// Same indexing as `probs`; filled only for exact evaluations.
  std::vector<ExactRational> exact_probs;
  /// Sum of `probs` minus one, before any renormalization (none is done).
  double normalization_residual = 0.0;
  /// Fast mode: the k whose double-precision value was replaced by the
  /// exact one.
  std::vector<std::uint64_t> repaired;
  /// Smallest cancellation ratio seen across evaluated k (fast path only).
  double min_cancellation_ratio = 1.0;

  double prob(std::uint64_t k) const { return k < probs.size() ? probs[k] : 0.0; }
  ExactRational exact_prob(std::uint64_t k) const;
  bool is_exact() const { return !exact_probs.empty(); }
  /// Zero-padded copy of length n + 1 (support length when n is unbounded).
  std::vector<double> dense() const;
};

/// Click probability of one detector hit by m photons: k = 1 clicks, k = 0
/// stays dark. Throws std::domain_error unless k is 0 or 1.
double single_click_prob(int k, std::uint64_t m, double eta, double dark_count);
ExactRational single_click_prob(int k, std::uint64_t m, const ExactRational& eta,
                                const ExactRational& dark_count);

struct BruteForceLimits {
  std::uint64_t max_n = 6;
  std::uint64_t max_m = 8;
};

/// Reference distribution by direct enumeration: every composition of the m
/// photons over the n detectors, weighted multinomially, times every click
/// pattern. Exact when the model carries rationals, double otherwise.
/// Throws WorkBoundError when n or m exceeds `limits`.
ClickDistribution click_distribution_bruteforce(std::uint64_t m, const DetectorArrayModel& model,
                                                BruteForceLimits limits = {});

/// Closed-form click distribution, an alternating sum of O(k) terms per k.
///
/// fast: each term is a SignedLogValue with the 1/n^m folded in as
///   ((n - j eta)/n)^m, summed by signed_accumulate. An entry whose sum
///   overflows, cancels below kCancellationThreshold, or comes out below
///   -kNegativeClampTolerance is recomputed exactly.
/// exact: rational arithmetic throughout. Throws ConfigurationError when
///   the model has no rational parameters.
/// automatic: the fast path, escalating to a full exact evaluation when
///   any entry would need repair.
///
/// With zero dark counts only k <= min(n, m) are evaluated.
ClickDistribution click_distribution_closed(std::uint64_t m, const DetectorArrayModel& model,
                                            EvalMode mode = EvalMode::automatic);

/// Binomial(m, eta): the n -> infinity limit without dark counts. Exact when
/// `eta` is.
ClickDistribution binomial_limit_distribution(std::uint64_t m, const Probability& eta);

struct ModeReport {
  double max_abs_diff = 0.0;
  std::uint64_t worst_k = 0;
  std::size_t repaired_entries = 0;
};

/// Fast versus exact evaluation of the same model.
ModeReport validate_modes(std::uint64_t m, const DetectorArrayModel& model);

}  // namespace clickcounter
