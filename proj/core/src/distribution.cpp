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

#include "clickcounter/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "clickcounter/exceptions.hpp"
#include "clickcounter/numerics.hpp"
#include "clickcounter/signed_log.hpp"

namespace clickcounter {
namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

std::uint64_t support_end(std::uint64_t m, const DetectorArrayModel& model) {
  return model.dark_count().is_zero() ? std::min(model.n(), m) : model.n();
}

// Shared exact factors W_j = (1 - p_d)^j (n - j eta)^m for j in [first_j, n],
// held as integers over the common denominator b^n d^m n^m, where
// 1 - p_d = a/b and eta = c/d.
class ExactTable {
 public:
  ExactTable(std::uint64_t m, const DetectorArrayModel& model, std::uint64_t first_j)
      : n_(model.n()), first_j_(first_j) {
    const ExactRational eta = model.eta().exact_or_dyadic();
    const ExactRational keep = ExactRational(1) - model.dark_count().exact_or_dyadic();
    const BigInt a = keep.numerator();
    const BigInt b = keep.denominator();
    const BigInt c = eta.numerator();
    const BigInt d = eta.denominator();
    const BigInt nd = to_big(n_) * d;

    // a^j b^(n-j), stepped upward in j.
    BigInt keep_pow;
    BigInt b_pow;
    mpz_pow_ui(keep_pow.get_mpz_t(), a.get_mpz_t(), first_j_);
    mpz_pow_ui(b_pow.get_mpz_t(), b.get_mpz_t(), n_ - first_j_);
    keep_pow *= b_pow;

    weights_.reserve(n_ - first_j_ + 1);
    BigInt base_pow;
    for (std::uint64_t j = first_j_; j <= n_; ++j) {
      const BigInt base = nd - to_big(j) * c;
      mpz_pow_ui(base_pow.get_mpz_t(), base.get_mpz_t(), m);
      weights_.push_back(keep_pow * base_pow);
      if (j < n_) {
        keep_pow *= a;
        mpz_divexact(keep_pow.get_mpz_t(), keep_pow.get_mpz_t(), b.get_mpz_t());
      }
    }

    BigInt d_pow;
    BigInt n_pow;
    mpz_pow_ui(b_pow.get_mpz_t(), b.get_mpz_t(), n_);
    mpz_pow_ui(d_pow.get_mpz_t(), d.get_mpz_t(), m);
    mpz_pow_ui(n_pow.get_mpz_t(), to_big(n_).get_mpz_t(), m);
    denominator_ = b_pow * d_pow * n_pow;
  }

  /// Pr(k) times denominator().
  BigInt numerator(std::uint64_t k) const {
    BigInt sum;
    BigInt choose_kl(1);
    for (std::uint64_t l = 0; l <= k; ++l) {
      const BigInt& w = weights_[n_ - k + l - first_j_];
      if (l % 2 == 0) {
        mpz_addmul(sum.get_mpz_t(), choose_kl.get_mpz_t(), w.get_mpz_t());
      } else {
        mpz_submul(sum.get_mpz_t(), choose_kl.get_mpz_t(), w.get_mpz_t());
      }
      choose_kl *= to_big(k - l);
      mpz_divexact(choose_kl.get_mpz_t(), choose_kl.get_mpz_t(), to_big(l + 1).get_mpz_t());
    }
    return sum * binomial_coefficient(n_, static_cast<std::int64_t>(k));
  }

  const BigInt& denominator() const { return denominator_; }

  ExactRational entry(std::uint64_t k) const { return ExactRational(numerator(k), denominator_); }

  /// Pr(k) as a double, skipping the reduction to lowest terms.
  double value(std::uint64_t k) const {
    mpq_class q;
    mpz_swap(mpq_numref(q.get_mpq_t()), numerator(k).get_mpz_t());
    mpz_set(mpq_denref(q.get_mpq_t()), denominator_.get_mpz_t());
    return q.get_d();
  }

 private:
  std::uint64_t n_;
  std::uint64_t first_j_;
  std::vector<BigInt> weights_;
  BigInt denominator_;
};

ClickDistribution evaluate_exact(std::uint64_t m, const DetectorArrayModel& model) {
  const std::uint64_t k_end = support_end(m, model);
  const ExactTable table(m, model, model.n() - k_end);
  ClickDistribution out;
  out.m = m;
  out.n = model.n();
  out.kind = DistributionKind::exact;
  out.exact_probs.reserve(k_end + 1);
  out.probs.reserve(k_end + 1);
  BigInt total;
  for (std::uint64_t k = 0; k <= k_end; ++k) {
    BigInt numerator = table.numerator(k);
    total += numerator;
    out.exact_probs.emplace_back(numerator, table.denominator());
    out.probs.push_back(out.exact_probs.back().to_double());
  }
  out.normalization_residual = ExactRational(total - table.denominator(), table.denominator()).to_double();
  return out;
}

// log((n - j eta) / n), -inf when the base vanishes.
long double log_base_ratio(std::uint64_t j, long double eta, long double n) {
  const auto jd = static_cast<long double>(j);
  const long double x = jd * eta;
  if (x <= 0.5L * n) return std::log1p(-x / n);
  const long double base = std::fma(-jd, eta, n);
  if (base <= 0.0L) return kNegInf;
  return std::log(base / n);
}

struct FastEntry {
  double value = 0.0;
  double ratio = 1.0;
  bool needs_repair = false;
};

class FastEvaluator {
 public:
  FastEvaluator(std::uint64_t m, const DetectorArrayModel& model, std::uint64_t k_end)
      : n_(model.n()), k_end_(k_end), first_j_(model.n() - k_end) {
    const long double eta = model.eta().value();
    const long double pd = model.dark_count().value();
    const long double log_keep = std::log1p(-pd);
    const auto nd = static_cast<long double>(n_);
    log_weights_.reserve(k_end_ + 1);
    for (std::uint64_t j = first_j_; j <= n_; ++j) {
      long double lw = 0.0L;
      if (j > 0) lw += static_cast<long double>(j) * log_keep;
      if (m > 0) lw += static_cast<long double>(m) * log_base_ratio(j, eta, nd);
      if (std::isnan(lw)) lw = kNegInf;
      log_weights_.push_back(lw);
    }
    log_choose_n_.reserve(k_end_ + 1);
    log_choose_n_.push_back(0.0L);
    for (std::uint64_t k = 0; k < k_end_; ++k) {
      log_choose_n_.push_back(log_choose_n_.back() + std::log(static_cast<long double>(n_ - k) /
                                                              static_cast<long double>(k + 1)));
    }
  }

  FastEntry entry(std::uint64_t k, std::vector<SignedLogValue>& terms) const {
    terms.clear();
    long double log_choose_kl = 0.0L;
    bool any_nonzero = false;
    for (std::uint64_t l = 0; l <= k; ++l) {
      const long double lw = log_weights_[n_ - k + l - first_j_];
      if (lw == kNegInf) {
        terms.push_back(SignedLogValue::zero());
      } else {
        terms.push_back({l % 2 == 0 ? 1 : -1, log_choose_n_[k] + log_choose_kl + lw});
        any_nonzero = true;
      }
      if (l < k) {
        log_choose_kl += std::log(static_cast<long double>(k - l) / static_cast<long double>(l + 1));
      }
    }
    FastEntry e;
    if (!any_nonzero) return e;
    const AccumulatedSum sum = signed_accumulate(terms);
    e.value = sum.value;
    e.ratio = sum.cancellation_ratio;
    e.needs_repair = sum.unreliable || sum.value < -kNegativeClampTolerance ||
                     sum.cancellation_ratio < kCancellationThreshold;
    if (!e.needs_repair && e.value < 0.0) e.value = 0.0;
    return e;
  }

  std::uint64_t k_end() const { return k_end_; }

 private:
  std::uint64_t n_;
  std::uint64_t k_end_;
  std::uint64_t first_j_;
  std::vector<long double> log_weights_;
  std::vector<long double> log_choose_n_;
};

}  // namespace

DetectorArrayModel::DetectorArrayModel(std::uint64_t n, Probability eta, Probability dark_count)
    : n_(n), eta_(std::move(eta)), dark_count_(std::move(dark_count)) {
  if (n_ == 0) throw std::domain_error("detector array needs at least one detector");
}

DetectorArrayModel DetectorArrayModel::without_dark_counts() const {
  return DetectorArrayModel(n_, eta_, Probability(ExactRational(0)));
}

std::string_view to_string(EvalMode mode) {
  switch (mode) {
    case EvalMode::fast: return "fast";
    case EvalMode::exact: return "exact";
    case EvalMode::automatic: return "auto";
  }
  return "?";
}

std::string_view to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::fast: return "fast";
    case DistributionKind::exact: return "exact";
    case DistributionKind::brute_force: return "brute_force";
    case DistributionKind::binomial_limit: return "binomial_limit";
    case DistributionKind::empirical: return "empirical";
  }
  return "?";
}

EvalMode parse_eval_mode(std::string_view text) {
  if (text == "fast") return EvalMode::fast;
  if (text == "exact") return EvalMode::exact;
  if (text == "auto") return EvalMode::automatic;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected fast, exact or auto)");
}

ExactRational ClickDistribution::exact_prob(std::uint64_t k) const {
  if (k < exact_probs.size()) return exact_probs[k];
  if (k < probs.size()) return ExactRational::from_double(probs[k]);
  return ExactRational(0);
}

std::vector<double> ClickDistribution::dense() const {
  std::vector<double> out(probs);
  if (n != kUnboundedArray && n + 1 > out.size()) out.resize(n + 1, 0.0);
  return out;
}

double single_click_prob(int k, std::uint64_t m, double eta, double dark_count) {
  if (k != 0 && k != 1) throw std::domain_error("click outcome must be 0 or 1");
  const double dark = std::pow(1.0 - eta, static_cast<double>(m)) * (1.0 - dark_count);
  return k == 0 ? dark : 1.0 - dark;
}

ExactRational single_click_prob(int k, std::uint64_t m, const ExactRational& eta,
                                const ExactRational& dark_count) {
  if (k != 0 && k != 1) throw std::domain_error("click outcome must be 0 or 1");
  const ExactRational dark = (ExactRational(1) - eta).pow(m) * (ExactRational(1) - dark_count);
  return k == 0 ? dark : ExactRational(1) - dark;
}

ClickDistribution click_distribution_closed(std::uint64_t m, const DetectorArrayModel& model,
                                            EvalMode mode) {
  if (mode == EvalMode::exact) {
    if (!model.has_exact()) {
      throw ConfigurationError("exact mode needs eta and p_d given as rationals");
    }
    return evaluate_exact(m, model);
  }

  const std::uint64_t k_end = support_end(m, model);
  const FastEvaluator fast(m, model, k_end);
  ClickDistribution out;
  out.m = m;
  out.n = model.n();
  out.kind = DistributionKind::fast;
  out.probs.resize(k_end + 1, 0.0);

  std::vector<SignedLogValue> terms;
  std::vector<std::uint64_t> bad;
  for (std::uint64_t k = 0; k <= k_end; ++k) {
    const FastEntry e = fast.entry(k, terms);
    out.probs[k] = e.value;
    out.min_cancellation_ratio = std::min(out.min_cancellation_ratio, e.ratio);
    if (e.needs_repair) bad.push_back(k);
  }

  if (!bad.empty()) {
    if (mode == EvalMode::automatic) return evaluate_exact(m, model);
    const ExactTable table(m, model, model.n() - k_end);
    for (std::uint64_t k : bad) out.probs[k] = table.value(k);
    out.repaired = std::move(bad);
  }

  double total = 0.0;
  double compensation = 0.0;
  for (double p : out.probs) {
    const double t = total + p;
    compensation += std::fabs(total) >= std::fabs(p) ? (total - t) + p : (p - t) + total;
    total = t;
  }
  out.normalization_residual = (total - 1.0) + compensation;
  return out;
}

ClickDistribution binomial_limit_distribution(std::uint64_t m, const Probability& eta) {
  ClickDistribution out;
  out.m = m;
  out.n = kUnboundedArray;
  out.kind = DistributionKind::binomial_limit;
  out.probs.reserve(m + 1);
  if (eta.has_exact()) {
    const ExactRational& e = *eta.exact();
    const ExactRational miss = ExactRational(1) - e;
    out.exact_probs.reserve(m + 1);
    for (std::uint64_t k = 0; k <= m; ++k) {
      out.exact_probs.push_back(ExactRational(binomial_coefficient(m, static_cast<std::int64_t>(k))) *
                                e.pow(k) * miss.pow(m - k));
      out.probs.push_back(out.exact_probs.back().to_double());
    }
    return out;
  }
  const double e = eta.value();
  double total = 0.0;
  for (std::uint64_t k = 0; k <= m; ++k) {
    const double choose = binomial_coefficient(m, static_cast<std::int64_t>(k)).get_d();
    out.probs.push_back(choose * std::pow(e, static_cast<double>(k)) *
                        std::pow(1.0 - e, static_cast<double>(m - k)));
    total += out.probs.back();
  }
  out.normalization_residual = total - 1.0;
  return out;
}

ModeReport validate_modes(std::uint64_t m, const DetectorArrayModel& model) {
  if (!model.has_exact()) throw ConfigurationError("mode validation needs rational parameters");
  const ClickDistribution fast = click_distribution_closed(m, model, EvalMode::fast);
  const ClickDistribution exact = click_distribution_closed(m, model, EvalMode::exact);
  ModeReport report;
  report.repaired_entries = fast.repaired.size();
  const std::size_t len = std::max(fast.probs.size(), exact.probs.size());
  for (std::size_t k = 0; k < len; ++k) {
    const double diff = std::fabs(fast.prob(k) - exact.prob(k));
    if (diff > report.max_abs_diff) {
      report.max_abs_diff = diff;
      report.worst_k = k;
    }
  }
  return report;
}

}  // namespace clickcounter
