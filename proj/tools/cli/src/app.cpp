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

#include "clickcounter/cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "clickcounter/cli/evaluate.hpp"
#include "clickcounter/cli/selftest.hpp"
#include "clickcounter/cli/sweep_spec.hpp"
#include "clickcounter/exceptions.hpp"

namespace clickcounter::cli {

namespace {

constexpr unsigned kMaxThreads = 1024;

struct GlobalFlags {
  std::string mode = "auto";
  std::string format = "csv";
  std::string out;
  std::string threads;
  std::string seed = "0";
};

struct GridFlags {
  std::string n;
  std::string m;
  std::string eta = "1";
  std::string pd = "0";
  std::string eta_c;
  std::string couplers = "0..24";
  std::string method = "closed";
  std::string samples = "1e6";
  std::string chunk_size = "65536";
  std::string assume_eta;
  std::string assume_pd;
  std::string threshold = "1e-3";
};

unsigned resolve_threads(const std::string& flag) {
  std::string text = flag;
  if (text.empty()) {
    if (const char* env = std::getenv(kThreadsEnvVar); env != nullptr) text = env;
  }
  if (text.empty()) return 1;
  const std::uint64_t threads = parse_count(text, "threads");
  if (threads == 0 || threads > kMaxThreads) {
    throw ArgumentError("threads must lie in 1.." + std::to_string(kMaxThreads));
  }
  return static_cast<unsigned>(threads);
}

SweepSpec base_spec(const GlobalFlags& g) {
  SweepSpec spec;
  spec.mode = parse_mode_argument(g.mode);
  spec.format = parse_output_format(g.format);
  spec.out = g.out;
  spec.threads = resolve_threads(g.threads);
  spec.seed = parse_count(g.seed, "--seed");
  return spec;
}

SweepSpec grid_spec(Quantity quantity, const GlobalFlags& g, const GridFlags& f) {
  SweepSpec spec = base_spec(g);
  spec.quantity = quantity;
  if (!f.n.empty()) spec.n = parse_count_grid(f.n, "--n");
  if (!f.m.empty()) spec.m = parse_count_grid(f.m, "--m");
  spec.eta = parse_probability_grid(f.eta, "--eta");
  spec.dark_count = parse_probability_grid(f.pd, "--pd");
  if (!f.eta_c.empty()) spec.eta_c = parse_probability_grid(f.eta_c, "--eta-c");
  spec.couplers = parse_count_grid(f.couplers, "--N");
  spec.method = parse_dist_method(f.method);
  spec.samples = parse_count(f.samples, "--samples");
  spec.chunk_size = parse_count(f.chunk_size, "--chunk-size");
  if (!f.assume_eta.empty()) spec.assume_eta = Probability::parse(f.assume_eta);
  if (!f.assume_pd.empty()) spec.assume_dark_count = Probability::parse(f.assume_pd);
  spec.threshold = Probability::parse(f.threshold).value();
  spec.finalize();
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ArgumentError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

int emit(const Outcome& outcome, OutputFormat format, const std::string& path, std::ostream& out) {
  std::ostringstream buffer;
  if (format == OutputFormat::csv) {
    write_csv(outcome.table, buffer);
  } else {
    write_json(outcome.table, buffer);
  }
  if (path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw ArgumentError("cannot write '" + path + "'");
    file << buffer.str();
    if (!file.flush()) throw ArgumentError("failed writing '" + path + "'");
  }
  return outcome.passed ? kExitOk : kExitValidationFailure;
}

void add_model_options(CLI::App* cmd, GridFlags& f, bool grids) {
  const char* suffix = grids ? " (list or a..b range)" : "";
  cmd->add_option("--n", f.n, std::string("Number of detectors") + suffix)->required();
  cmd->add_option("--m", f.m, std::string("Number of incident photons") + suffix)->required();
  cmd->add_option("--eta", f.eta, "Quantum efficiency, decimal or p/q")->capture_default_str();
  cmd->add_option("--pd", f.pd, "Dark-count probability, decimal or p/q")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GlobalFlags g;
  GridFlags f;
  std::string config_path;
  SelftestOptions selftest_opts;

  CLI::App app{"Click statistics of multiplexed single-photon detector arrays.", "clickcounter"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 1 validation failure, 2 argument error, 3 capability error.\n"
             "Threads default to $" + std::string(kThreadsEnvVar) + " when --threads is absent.");
  app.add_option("--mode", g.mode, "Evaluation mode: fast, exact or auto")->capture_default_str();
  app.add_option("--format", g.format, "Output format: csv or json")->capture_default_str();
  app.add_option("--out", g.out, "Write the table to this file instead of stdout");
  app.add_option("--threads", g.threads, "Worker threads");
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();

  auto* dist = app.add_subcommand("dist", "Click-count distribution Pr(k|m) for k = 0..n")->fallthrough();
  add_model_options(dist, f, true);
  dist->add_option("--method", f.method, "closed, brute-force or binomial-limit")->capture_default_str();

  auto* error = app.add_subcommand("error", "Total error and its dark-count, finite-size and efficiency parts")
                    ->fallthrough();
  add_model_options(error, f, true);

  auto* finite = app.add_subcommand("finite-size-sweep", "Finite-size error against its leading order C(m,2)/n")
                     ->fallthrough();
  finite->add_option("--n", f.n, "Number of detectors (list or a..b range)")->required();
  finite->add_option("--m", f.m, "Photon numbers (list or a..b range)")->required();
  finite->add_option("--eta", f.eta, "Quantum efficiencies (list)")->capture_default_str();

  auto* temporal = app.add_subcommand("temporal", "Temporal array error over coupler counts N")->fallthrough();
  temporal->add_option("--eta-c", f.eta_c, "Coupler transmission (list)")->required();
  temporal->add_option("--eta", f.eta, "Detector efficiency (list)")->capture_default_str();
  temporal->add_option("--m", f.m, "Photon numbers (list or a..b range)")->required();
  temporal->add_option("--N", f.couplers, "Coupler counts, a contiguous range a..b")->capture_default_str();

  auto* mc = app.add_subcommand("mc-validate", "Monte Carlo shots checked against the closed form")->fallthrough();
  add_model_options(mc, f, false);
  mc->add_option("--samples", f.samples, "Number of shots")->capture_default_str();
  mc->add_option("--chunk-size", f.chunk_size, "Shots per random stream")->capture_default_str();
  mc->add_option("--assume-eta", f.assume_eta, "Efficiency of the reference distribution");
  mc->add_option("--assume-pd", f.assume_pd, "Dark-count probability of the reference distribution");
  mc->add_option("--threshold", f.threshold, "Reject the fit below this p-value")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Closed form versus brute force and fast versus exact")
                       ->fallthrough();
  selftest->add_option("--max-n", selftest_opts.max_n, "Largest array size")->capture_default_str();
  selftest->add_option("--max-m", selftest_opts.max_m, "Largest photon number")->capture_default_str();
  selftest->add_flag("--inject-perturbation", selftest_opts.inject_perturbation,
                     "Perturb the closed form (harness check; expect exit 1)");

  auto* batch = app.add_subcommand("batch", "Run a JSON sweep specification")->fallthrough();
  batch->add_option("config", config_path, "Path to the sweep-spec JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitArgumentError;
  }

  try {
    if (selftest->parsed()) {
      const SweepSpec spec = base_spec(g);
      selftest_opts.threads = spec.threads;
      return emit(run_selftest(selftest_opts), spec.format, spec.out, out);
    }
    SweepSpec spec;
    if (batch->parsed()) {
      spec = sweep_spec_from_json(read_file(config_path), base_spec(g));
    } else if (dist->parsed()) {
      spec = grid_spec(Quantity::dist, g, f);
    } else if (error->parsed()) {
      spec = grid_spec(Quantity::total_error, g, f);
    } else if (finite->parsed()) {
      spec = grid_spec(Quantity::finite_size, g, f);
    } else if (temporal->parsed()) {
      spec = grid_spec(Quantity::temporal, g, f);
    } else {
      spec = grid_spec(Quantity::mc, g, f);
    }
    return emit(evaluate(spec), spec.format, spec.out, out);
  } catch (const ConfigurationError& e) {
    err << "clickcounter: " << e.what() << '\n';
    return kExitCapabilityError;
  } catch (const WorkBoundError& e) {
    err << "clickcounter: " << e.what() << '\n';
    return kExitCapabilityError;
  } catch (const std::invalid_argument& e) {
    err << "clickcounter: " << e.what() << '\n';
    return kExitArgumentError;
  } catch (const std::domain_error& e) {
    err << "clickcounter: " << e.what() << '\n';
    return kExitArgumentError;
  } catch (const std::out_of_range& e) {
    err << "clickcounter: " << e.what() << '\n';
    return kExitArgumentError;
  } catch (const std::exception& e) {
    err << "clickcounter: " << e.what() << '\n';
    return kExitValidationFailure;
  }
}

}  // namespace clickcounter::cli
