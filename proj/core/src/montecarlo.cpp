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

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "clickcounter/parallel.hpp"

namespace clickcounter {

ClickDistribution EmpiricalDistribution::as_distribution() const {
  ClickDistribution out;
  out.m = m;
  out.n = n;
  out.kind = DistributionKind::empirical;
  out.probs.reserve(counts.size());
  for (std::uint64_t c : counts) {
    out.probs.push_back(samples == 0 ? 0.0 : static_cast<double>(c) / static_cast<double>(samples));
  }
  double total = 0.0;
  for (double p : out.probs) total += p;
  out.normalization_residual = samples == 0 ? -1.0 : total - 1.0;
  return out;
}

ShotSimulator::ShotSimulator(std::uint64_t m, const DetectorArrayModel& model)
    : m_(m),
      n_(model.n()),
      eta_(model.eta().value()),
      dark_count_(model.dark_count().value()),
      hit_(model.n(), 0) {
  touched_.reserve(m);
}

std::uint64_t ShotSimulator::operator()(Rng& rng) {
  std::uint64_t clicks = 0;
  for (std::uint64_t photon = 0; photon < m_; ++photon) {
    const std::uint64_t detector = rng.uniform_below(n_);
    if (rng.bernoulli(eta_) && !hit_[detector]) {
      hit_[detector] = 1;
      touched_.push_back(detector);
      ++clicks;
    }
  }
  if (dark_count_ > 0.0) {
    for (std::uint64_t d = 0; d < n_; ++d) {
      if (!hit_[d] && rng.bernoulli(dark_count_)) ++clicks;
    }
  }
  for (std::uint64_t d : touched_) hit_[d] = 0;
  touched_.clear();
  return clicks;
}

std::uint64_t simulate_shot(std::uint64_t m, const DetectorArrayModel& model, Rng& rng) {
  ShotSimulator sim(m, model);
  return sim(rng);
}

EmpiricalDistribution empirical_distribution(std::uint64_t m, const DetectorArrayModel& model,
                                             const SimulationConfig& cfg) {
  if (cfg.samples == 0) throw std::invalid_argument("need at least one sample");
  if (cfg.chunk_size == 0) throw std::invalid_argument("chunk size must be positive");

  const std::uint64_t chunks = (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<std::vector<std::uint64_t>> partial(chunks);
  parallel_for(chunks, cfg.threads, [&](std::size_t c) {
    Rng rng(derive_stream_seed(cfg.seed, c));
    ShotSimulator sim(m, model);
    std::vector<std::uint64_t> counts(model.n() + 1, 0);
    const std::uint64_t first = c * cfg.chunk_size;
    const std::uint64_t shots = std::min(cfg.chunk_size, cfg.samples - first);
    for (std::uint64_t s = 0; s < shots; ++s) ++counts[sim(rng)];
    partial[c] = std::move(counts);
  });

  EmpiricalDistribution out;
  out.m = m;
  out.n = model.n();
  out.samples = cfg.samples;
  out.counts.assign(model.n() + 1, 0);
  for (const auto& counts : partial) {
    for (std::size_t k = 0; k < counts.size(); ++k) out.counts[k] += counts[k];
  }
  return out;
}

GoodnessOfFit goodness_of_fit(const EmpiricalDistribution& empirical, const ClickDistribution& reference) {
  if (empirical.m != reference.m || empirical.n != reference.n) {
    throw std::invalid_argument("empirical and reference distributions describe different (m, n)");
  }
  const std::size_t bins = empirical.counts.size();
  const auto total = static_cast<double>(empirical.samples);

  GoodnessOfFit fit;
  for (std::size_t k = 0; k < std::max<std::size_t>(bins, reference.probs.size()); ++k) {
    const double observed = k < bins ? static_cast<double>(empirical.counts[k]) / total : 0.0;
    fit.tv_distance += std::fabs(observed - reference.prob(k));
  }
  fit.tv_distance *= 0.5;

  std::vector<double> expected(bins);
  std::vector<bool> kept(bins);
  bool any_kept = false;
  for (std::size_t k = 0; k < bins; ++k) {
    expected[k] = total * reference.prob(k);
    kept[k] = expected[k] >= kMinExpectedCount;
    any_kept = any_kept || kept[k];
  }
  if (!any_kept) return fit;

  auto find_kept = [&](std::size_t k, bool upward) -> std::optional<std::size_t> {
    if (upward) {
      for (std::size_t j = k + 1; j < bins; ++j) {
        if (kept[j]) return j;
      }
    } else {
      for (std::size_t j = k; j-- > 0;) {
        if (kept[j]) return j;
      }
    }
    return std::nullopt;
  };

  std::vector<double> group_observed(bins, 0.0);
  std::vector<double> group_expected(bins, 0.0);
  for (std::size_t k = 0; k < bins; ++k) {
    std::size_t target = k;
    if (!kept[k]) {
      const bool upward = k < empirical.m;
      auto primary = find_kept(k, upward);
      target = primary ? *primary : *find_kept(k, !upward);
    }
    group_observed[target] += static_cast<double>(empirical.counts[k]);
    group_expected[target] += expected[k];
  }

  std::uint64_t groups = 0;
  for (std::size_t k = 0; k < bins; ++k) {
    if (!kept[k]) continue;
    ++groups;
    const double diff = group_observed[k] - group_expected[k];
    fit.chi2_stat += diff * diff / group_expected[k];
  }
  fit.dof = groups - 1;
  fit.p_value = fit.dof == 0 ? 1.0 : boost::math::gamma_q(0.5 * static_cast<double>(fit.dof), 0.5 * fit.chi2_stat);
  return fit;
}

}  // namespace clickcounter
