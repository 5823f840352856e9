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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clickcounter/distribution.hpp"
#include "clickcounter/probability.hpp"

namespace clickcounter::cli {

/// Malformed or inconsistent user input; maps to exit code 2.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Quantity { dist, total_error, finite_size, dark_count, qe_error, temporal, mc };
enum class OutputFormat { csv, json };
enum class DistMethod { closed, brute_force, binomial_limit };

std::string_view to_string(Quantity quantity);
std::string_view to_string(OutputFormat format);
std::string_view to_string(DistMethod method);
Quantity parse_quantity(std::string_view text);
OutputFormat parse_output_format(std::string_view text);
DistMethod parse_dist_method(std::string_view text);
EvalMode parse_mode_argument(std::string_view text);

/// Non-negative integer; accepts exponent forms such as "1e6".
std::uint64_t parse_count(std::string_view text, std::string_view name);
/// Comma-separated items, each an integer or an inclusive range "a..b".
std::vector<std::uint64_t> parse_count_grid(std::string_view text, std::string_view name);
/// Comma-separated probabilities, each decimal or p/q, kept exact.
std::vector<Probability> parse_probability_grid(std::string_view text, std::string_view name);

inline constexpr std::size_t kMaxGridSize = 10'000'000;

struct SweepSpec {
  Quantity quantity = Quantity::dist;
  std::vector<std::uint64_t> m;
  std::vector<std::uint64_t> n;
  std::vector<Probability> eta{Probability(ExactRational(1))};
  std::vector<Probability> dark_count{Probability(ExactRational(0))};
  std::vector<Probability> eta_c{Probability(ExactRational(1))};
  std::vector<std::uint64_t> couplers;
  EvalMode mode = EvalMode::automatic;
  DistMethod method = DistMethod::closed;
  OutputFormat format = OutputFormat::csv;
  /// Empty means the caller's output stream.
  std::string out;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1'000'000;
  std::uint64_t chunk_size = 1 << 16;
  std::optional<Probability> assume_eta;
  std::optional<Probability> assume_dark_count;
  double threshold = 1e-3;

  /// Fills quantity-specific defaults and checks grid shapes. Throws
  /// ArgumentError.
  void finalize();
};

/// Reads a JSON object whose keys mirror the SweepSpec fields (`quantity`,
/// `m`, `n`, `eta`, `pd`, `eta_c`, `N`, `mode`, `method`, `format`, `out`,
/// `threads`, `seed`, `samples`, `chunk_size`, `assume_eta`, `assume_pd`,
/// `threshold`). Grids may be strings in the flag syntax, numbers, or
/// arrays of either. Keys absent from the file keep their value in `base`.
SweepSpec sweep_spec_from_json(std::string_view text, SweepSpec base);

}  // namespace clickcounter::cli
