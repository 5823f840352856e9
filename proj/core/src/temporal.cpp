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

#include "clickcounter/temporal.hpp"

#include <stdexcept>
#include <string>

#include "clickcounter/errors.hpp"
#include "clickcounter/parallel.hpp"

namespace clickcounter {

std::uint64_t TemporalArrayConfig::detectors() const {
  if (couplers > kMaxCouplers) {
    throw std::domain_error("coupler count " + std::to_string(couplers) + " exceeds " +
                            std::to_string(kMaxCouplers));
  }
  return std::uint64_t{1} << couplers;
}

DetectorArrayModel TemporalArrayConfig::model() const {
  return DetectorArrayModel(detectors(), effective_efficiency(*this), Probability(ExactRational(0)));
}

Probability effective_efficiency(const TemporalArrayConfig& cfg) {
  return cfg.eta_c.pow(cfg.couplers).times(cfg.eta);
}

double temporal_error(std::uint64_t m, const TemporalArrayConfig& cfg, EvalMode mode) {
  return total_error(m, cfg.model(), mode);
}

CouplerOptimum optimal_coupler_count(std::uint64_t m, const Probability& eta_c, const Probability& eta,
                                     std::uint32_t max_couplers, EvalMode mode) {
  const auto rows = sweep_temporal(std::span<const std::uint64_t>(&m, 1), eta_c, eta, 0, max_couplers, mode);
  return summarize_sweep(rows, max_couplers).front().second;
}

std::vector<TemporalSweepRow> sweep_temporal(std::span<const std::uint64_t> photon_numbers, const Probability& eta_c,
                                             const Probability& eta, std::uint32_t first_couplers,
                                             std::uint32_t last_couplers, EvalMode mode, unsigned threads) {
  if (first_couplers > last_couplers) throw std::invalid_argument("empty coupler range");
  if (last_couplers > kMaxCouplers) {
    throw std::domain_error("coupler count " + std::to_string(last_couplers) + " exceeds " +
                            std::to_string(kMaxCouplers));
  }
  const std::size_t per_m = last_couplers - first_couplers + 1;
  std::vector<TemporalSweepRow> rows(photon_numbers.size() * per_m);
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    const std::uint64_t m = photon_numbers[i / per_m];
    const auto couplers = static_cast<std::uint32_t>(first_couplers + i % per_m);
    const TemporalArrayConfig cfg{couplers, eta_c, eta};
    rows[i] = {m, couplers, temporal_error(m, cfg, mode)};
  });
  return rows;
}

std::vector<std::pair<std::uint64_t, CouplerOptimum>> summarize_sweep(std::span<const TemporalSweepRow> rows,
                                                                      std::uint32_t last_couplers) {
  std::vector<std::pair<std::uint64_t, CouplerOptimum>> out;
  std::size_t begin = 0;
  while (begin < rows.size()) {
    std::size_t end = begin;
    while (end < rows.size() && rows[end].m == rows[begin].m) ++end;
    double best = rows[begin].epsilon;
    for (std::size_t i = begin; i < end; ++i) best = std::min(best, rows[i].epsilon);
    CouplerOptimum opt;
    for (std::size_t i = begin; i < end; ++i) {
      if (rows[i].epsilon <= best + kOptimumTieTolerance) {
        opt.couplers = rows[i].couplers;
        opt.epsilon = rows[i].epsilon;
        break;
      }
    }
    opt.at_search_limit = opt.couplers == last_couplers;
    out.emplace_back(rows[begin].m, opt);
    begin = end;
  }
  return out;
}

}  // namespace clickcounter
