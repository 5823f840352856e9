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

#include "clickcounter/cli/selftest.hpp"

#include <array>
#include <string>
#include <vector>

#include "clickcounter/exceptions.hpp"
#include "clickcounter/parallel.hpp"

namespace clickcounter::cli {

namespace {

struct GridPoint {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  ExactRational eta;
  ExactRational dark_count;
};

struct Verdict {
  bool oracle = false;
  double mode_diff = 0.0;
};

}  // namespace

Outcome run_selftest(const SelftestOptions& options) {
  if (options.max_n == 0) throw ArgumentError("--max-n must be at least 1");
  const BruteForceLimits limits;
  if (options.max_n > limits.max_n || options.max_m > limits.max_m) {
    throw WorkBoundError("brute force is limited to n <= " + std::to_string(limits.max_n) +
                         " and m <= " + std::to_string(limits.max_m));
  }

  const std::array etas{ExactRational(0), ExactRational(1, 4), ExactRational(1, 2), ExactRational(1)};
  const std::array dark_counts{ExactRational(0), ExactRational(1, 10)};
  std::vector<GridPoint> grid;
  for (std::uint64_t n = 1; n <= options.max_n; ++n) {
    for (std::uint64_t m = 0; m <= options.max_m; ++m) {
      for (const auto& eta : etas) {
        for (const auto& pd : dark_counts) grid.push_back({n, m, eta, pd});
      }
    }
  }

  std::vector<Verdict> verdicts(grid.size());
  parallel_for(grid.size(), options.threads, [&](std::size_t i) {
    const GridPoint& g = grid[i];
    const DetectorArrayModel model(g.n, g.eta, g.dark_count);
    ClickDistribution closed = click_distribution_closed(g.m, model, EvalMode::exact);
    if (options.inject_perturbation) closed.exact_probs.front() += ExactRational(BigInt(1), BigInt(BigInt(1) << 60));
    const ClickDistribution brute = click_distribution_bruteforce(g.m, model, limits);
    bool same = true;
    for (std::uint64_t k = 0; same && k <= g.n; ++k) same = closed.exact_prob(k) == brute.exact_prob(k);
    verdicts[i] = {same, validate_modes(g.m, model).max_abs_diff};
  });

  Outcome outcome;
  Table& table = outcome.table;
  table.add_meta("selftest", std::string("closed form vs brute force; fast vs exact"));
  table.add_meta("max_n", options.max_n);
  table.add_meta("max_m", options.max_m);
  table.add_meta("mode_tolerance", kModeAgreementTolerance);
  table.add_meta("perturbed", options.inject_perturbation);
  table.columns = {"n", "m", "eta", "pd", "oracle", "max_mode_diff", "modes"};
  std::uint64_t failures = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const GridPoint& g = grid[i];
    const Verdict& v = verdicts[i];
    const bool modes_ok = v.mode_diff <= kModeAgreementTolerance;
    failures += (v.oracle ? 0 : 1) + (modes_ok ? 0 : 1);
    table.add_row({g.n, g.m, g.eta.to_string(), g.dark_count.to_string(), std::string(v.oracle ? "pass" : "FAIL"),
                   v.mode_diff, std::string(modes_ok ? "pass" : "FAIL")});
  }
  table.add_meta("checks", static_cast<std::uint64_t>(2 * grid.size()));
  table.add_meta("failures", failures);
  outcome.passed = failures == 0;
  return outcome;
}

}  // namespace clickcounter::cli
