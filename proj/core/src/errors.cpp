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

#include "clickcounter/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "clickcounter/numerics.hpp"

namespace clickcounter {
namespace {

constexpr double kCrossCheckTolerance = 1e-12;

// With no dark counts the support stops at k = m, so exact evaluation of a
// rational model is cheap at any n.
EvalMode resolve_mode(EvalMode mode, const DetectorArrayModel& model) {
  if (mode == EvalMode::automatic && model.has_exact() && model.dark_count().is_zero()) {
    return EvalMode::exact;
  }
  return mode;
}

double neumaier_sum(std::span<const double> values) {
  double sum = 0.0;
  double c = 0.0;
  for (double x : values) {
    const double t = sum + x;
    c += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + c;
}

}  // namespace

double l1_half_distance(std::span<const double> p, std::span<const double> q) {
  const std::size_t len = std::max(p.size(), q.size());
  std::vector<double> diffs(len);
  for (std::size_t k = 0; k < len; ++k) {
    const double a = k < p.size() ? p[k] : 0.0;
    const double b = k < q.size() ? q[k] : 0.0;
    diffs[k] = std::fabs(a - b);
  }
  return 0.5 * neumaier_sum(diffs);
}

ExactRational l1_half_distance(std::span<const ExactRational> p, std::span<const ExactRational> q) {
  const std::size_t len = std::max(p.size(), q.size());
  ExactRational total;
  for (std::size_t k = 0; k < len; ++k) {
    const ExactRational a = k < p.size() ? p[k] : ExactRational(0);
    const ExactRational b = k < q.size() ? q[k] : ExactRational(0);
    total += (a - b).abs();
  }
  return total / ExactRational(2);
}

double l1_half_distance(const ClickDistribution& p, const ClickDistribution& q) {
  if (p.is_exact() && q.is_exact()) return l1_half_distance(p.exact_probs, q.exact_probs).to_double();
  return l1_half_distance(p.probs, q.probs);
}

ClickDistribution ideal_distribution(std::uint64_t m) {
  ClickDistribution out;
  out.m = m;
  out.n = kUnboundedArray;
  out.kind = DistributionKind::exact;
  out.probs.assign(m + 1, 0.0);
  out.probs[m] = 1.0;
  out.exact_probs.assign(m + 1, ExactRational(0));
  out.exact_probs[m] = ExactRational(1);
  return out;
}

double total_error(std::uint64_t m, const DetectorArrayModel& model, EvalMode mode) {
  const ClickDistribution dist = click_distribution_closed(m, model, resolve_mode(mode, model));
  const double distance = l1_half_distance(dist, ideal_distribution(m));
  const double miss = dist.is_exact() ? (ExactRational(1) - dist.exact_prob(m)).to_double()
                                      : 1.0 - dist.prob(m);
  const double tolerance = kCrossCheckTolerance + 0.5 * std::fabs(dist.normalization_residual);
  if (std::fabs(distance - miss) > tolerance) {
    throw std::logic_error("total error cross-check failed: L1 route " + std::to_string(distance) +
                           " vs 1 - Pr(m|m) route " + std::to_string(miss));
  }
  return distance;
}

ExactRational total_error_exact(std::uint64_t m, const DetectorArrayModel& model) {
  const ClickDistribution dist = click_distribution_closed(m, model, EvalMode::exact);
  return l1_half_distance(dist.exact_probs, ideal_distribution(m).exact_probs);
}

double dark_count_error_unilluminated(const DetectorArrayModel& model) {
  const double pd = model.dark_count().value();
  if (pd == 1.0) return 1.0;
  return -std::expm1(static_cast<double>(model.n()) * std::log1p(-pd));
}

ExactRational dark_count_error_unilluminated_exact(const DetectorArrayModel& model) {
  const ExactRational keep = ExactRational(1) - model.dark_count().exact_or_dyadic();
  return ExactRational(1) - keep.pow(model.n());
}

double dark_count_error_numeric(std::uint64_t m, const DetectorArrayModel& model, EvalMode mode) {
  if (model.dark_count().is_zero()) return 0.0;
  const DetectorArrayModel clean = model.without_dark_counts();
  const ClickDistribution noisy = click_distribution_closed(m, model, mode);
  const ClickDistribution quiet = click_distribution_closed(m, clean, resolve_mode(mode, clean));
  return l1_half_distance(noisy, quiet);
}

double quantum_efficiency_error(std::uint64_t m, const Probability& eta) {
  double value = 0.0;
  if (eta.has_exact()) {
    value = quantum_efficiency_error_exact(m, *eta.exact()).to_double();
  } else if (m == 0) {
    value = 0.0;
  } else if (eta.is_zero()) {
    value = 1.0;
  } else {
    value = -std::expm1(static_cast<double>(m) * std::log(eta.value()));
  }
  const double via_limit = l1_half_distance(binomial_limit_distribution(m, eta), ideal_distribution(m));
  if (std::fabs(value - via_limit) > kCrossCheckTolerance) {
    throw std::logic_error("efficiency error cross-check failed: " + std::to_string(value) + " vs " +
                           std::to_string(via_limit));
  }
  return value;
}

ExactRational quantum_efficiency_error_exact(std::uint64_t m, const ExactRational& eta) {
  return ExactRational(1) - eta.pow(m);
}

double finite_size_error(std::uint64_t m, const Probability& eta, std::uint64_t n, EvalMode mode) {
  const DetectorArrayModel model(n, eta, Probability(ExactRational(0)));
  const EvalMode resolved = resolve_mode(mode, model);
  if (resolved == EvalMode::exact) return finite_size_error_exact(m, eta.exact_or_dyadic(), n).to_double();
  const ClickDistribution finite = click_distribution_closed(m, model, resolved);
  return l1_half_distance(finite, binomial_limit_distribution(m, eta));
}

ExactRational finite_size_error_exact(std::uint64_t m, const ExactRational& eta, std::uint64_t n) {
  const Probability p(eta);
  const DetectorArrayModel model(n, p, Probability(ExactRational(0)));
  const ClickDistribution finite = click_distribution_closed(m, model, EvalMode::exact);
  const ClickDistribution limit = binomial_limit_distribution(m, p);
  return l1_half_distance(finite.exact_probs, limit.exact_probs);
}

ExactRational finite_size_error_eta1_series(std::uint64_t m, std::uint64_t n, SeriesTruncation truncation) {
  if (n == 0) throw std::domain_error("array size must be positive");
  if (truncation == SeriesTruncation::leading) {
    return ExactRational(binomial_coefficient(m, 2), to_big(n));
  }
  const auto mm = static_cast<std::uint32_t>(m);
  const ExactRational inv_n(BigInt(1), to_big(n));
  ExactRational total;
  for (std::uint32_t k = 0; k <= mm; ++k) {
    const BigInt second = stirling_second(mm, k);
    if (second == 0) continue;
    ExactRational inner;
    for (std::uint32_t l = std::max<std::uint32_t>(1, mm - k); l <= mm; ++l) {
      inner += ExactRational(BigInt(stirling_first_signed(k, mm - l) * second)) * inv_n.pow(l);
    }
    total += inner.abs();
  }
  return total / ExactRational(2);
}

ErrorBudget error_budget(std::uint64_t m, const DetectorArrayModel& model, EvalMode mode) {
  ErrorBudget b;
  b.m = m;
  b.epsilon_total = total_error(m, model, mode);
  b.eps_d = dark_count_error_numeric(m, model, mode);
  b.eps_n = finite_size_error(m, model.eta(), model.n(), mode);
  b.eps_eta = quantum_efficiency_error(m, model.eta());
  b.triangle_slack = b.eps_d + b.eps_n + b.eps_eta - b.epsilon_total;
  return b;
}

}  // namespace clickcounter
