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

#include "clickcounter/cli/evaluate.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "clickcounter/errors.hpp"
#include "clickcounter/montecarlo.hpp"
#include "clickcounter/numerics.hpp"
#include "clickcounter/parallel.hpp"
#include "clickcounter/temporal.hpp"

namespace clickcounter::cli {

namespace {

struct Point {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  Probability eta{1.0};
  Probability dark_count{0.0};
};

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn fn) {
  std::vector<T> out(count);
  parallel_for(count, threads, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

Table start_table(const SweepSpec& spec) {
  Table table;
  table.add_meta("quantity", std::string(to_string(spec.quantity)));
  table.add_meta("mode", std::string(to_string(spec.mode)));
  return table;
}

// Singleton grids become metadata; the names of swept ones are returned so
// rows can lead with them.
class Axes {
 public:
  explicit Axes(Table& table) : table_(table) {}

  void counts(const std::string& name, const std::vector<std::uint64_t>& grid, bool always_column = false) {
    if (grid.size() == 1 && !always_column) {
      table_.add_meta(name, grid.front());
    } else {
      varying_.push_back(name);
    }
  }

  void probabilities(const std::string& name, const std::vector<Probability>& grid, bool always_column = false) {
    if (grid.size() == 1 && !always_column) {
      table_.add_meta(name, grid.front().to_string());
    } else {
      varying_.push_back(name);
    }
  }

  bool varies(const std::string& name) const {
    for (const auto& v : varying_) {
      if (v == name) return true;
    }
    return false;
  }

  const std::vector<std::string>& names() const { return varying_; }

 private:
  Table& table_;
  std::vector<std::string> varying_;
};

std::vector<Cell> leading_cells(const Axes& axes, const Point& p, const Probability* eta_c = nullptr) {
  std::vector<Cell> cells;
  for (const auto& name : axes.names()) {
    if (name == "n") cells.emplace_back(p.n);
    else if (name == "m") cells.emplace_back(p.m);
    else if (name == "eta") cells.emplace_back(p.eta.value());
    else if (name == "pd") cells.emplace_back(p.dark_count.value());
    else if (name == "eta_c" && eta_c != nullptr) cells.emplace_back(eta_c->value());
  }
  return cells;
}

std::vector<std::string> with_columns(std::vector<std::string> lead, std::initializer_list<const char*> rest) {
  for (const char* c : rest) lead.emplace_back(c);
  return lead;
}

std::vector<Point> grid_points(const std::vector<std::uint64_t>& ns, const std::vector<std::uint64_t>& ms,
                               const std::vector<Probability>& etas, const std::vector<Probability>& pds) {
  std::vector<Point> points;
  for (auto n : ns) {
    for (const auto& eta : etas) {
      for (const auto& pd : pds) {
        for (auto m : ms) points.push_back({n, m, eta, pd});
      }
    }
  }
  return points;
}

Outcome evaluate_dist(const SweepSpec& spec) {
  Outcome outcome{start_table(spec)};
  Table& table = outcome.table;
  table.add_meta("method", std::string(to_string(spec.method)));
  Axes axes(table);
  axes.counts("n", spec.n);
  axes.probabilities("eta", spec.eta);
  axes.probabilities("pd", spec.dark_count);
  axes.counts("m", spec.m);

  if (spec.method == DistMethod::binomial_limit) {
    for (const auto& pd : spec.dark_count) {
      if (!pd.is_zero()) throw ArgumentError("the binomial limit is defined without dark counts");
    }
  }

  const auto points = grid_points(spec.n, spec.m, spec.eta, spec.dark_count);
  const auto dists = parallel_map<ClickDistribution>(points.size(), spec.threads, [&](std::size_t i) {
    const Point& p = points[i];
    const DetectorArrayModel model(p.n, p.eta, p.dark_count);
    switch (spec.method) {
      case DistMethod::brute_force:
        return click_distribution_bruteforce(p.m, model);
      case DistMethod::binomial_limit:
        return binomial_limit_distribution(p.m, p.eta);
      case DistMethod::closed:
        break;
    }
    return click_distribution_closed(p.m, model, spec.mode);
  });

  if (dists.size() == 1) {
    const ClickDistribution& d = dists.front();
    table.add_meta("evaluation", std::string(to_string(d.kind)));
    table.add_meta("normalization_residual", d.normalization_residual);
    table.add_meta("repaired_entries", static_cast<std::uint64_t>(d.repaired.size()));
  } else {
    double worst = 0.0;
    for (const auto& d : dists) worst = std::max(worst, std::fabs(d.normalization_residual));
    table.add_meta("max_abs_normalization_residual", worst);
  }

  const bool exact_column = spec.mode == EvalMode::exact;
  table.columns = exact_column ? with_columns(axes.names(), {"k", "probability", "exact"})
                               : with_columns(axes.names(), {"k", "probability"});
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ClickDistribution& d = dists[i];
    const std::uint64_t last = spec.method == DistMethod::binomial_limit ? d.m : d.n;
    for (std::uint64_t k = 0; k <= last; ++k) {
      auto row = leading_cells(axes, points[i]);
      row.emplace_back(k);
      row.emplace_back(d.prob(k));
      if (exact_column) row.emplace_back(d.is_exact() ? d.exact_prob(k).to_string() : std::string());
      table.add_row(std::move(row));
    }
  }
  return outcome;
}

Outcome evaluate_total_error(const SweepSpec& spec) {
  Outcome outcome{start_table(spec)};
  Table& table = outcome.table;
  Axes axes(table);
  axes.counts("n", spec.n);
  axes.probabilities("eta", spec.eta);
  axes.probabilities("pd", spec.dark_count);
  axes.counts("m", spec.m, true);

  const auto points = grid_points(spec.n, spec.m, spec.eta, spec.dark_count);
  const auto budgets = parallel_map<ErrorBudget>(points.size(), spec.threads, [&](std::size_t i) {
    const Point& p = points[i];
    return error_budget(p.m, DetectorArrayModel(p.n, p.eta, p.dark_count), spec.mode);
  });

  table.columns = with_columns(axes.names(),
                               {"epsilon_total", "eps_d", "eps_n", "eps_eta", "triangle_slack", "triangle_holds"});
  std::uint64_t violations = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ErrorBudget& b = budgets[i];
    auto row = leading_cells(axes, points[i]);
    row.insert(row.end(), {b.epsilon_total, b.eps_d, b.eps_n, b.eps_eta, b.triangle_slack, b.triangle_holds()});
    table.add_row(std::move(row));
    if (!b.triangle_holds()) ++violations;
  }
  table.add_meta("triangle_violations", violations);
  outcome.passed = violations == 0;
  return outcome;
}

Outcome evaluate_dark_count(const SweepSpec& spec) {
  Outcome outcome{start_table(spec)};
  Table& table = outcome.table;
  Axes axes(table);
  axes.counts("n", spec.n);
  axes.probabilities("eta", spec.eta);
  axes.probabilities("pd", spec.dark_count);
  axes.counts("m", spec.m);

  const auto points = grid_points(spec.n, spec.m, spec.eta, spec.dark_count);
  struct Result {
    double formula = 0.0;
    double numeric = 0.0;
    std::string exact;
  };
  const bool exact_column = spec.mode == EvalMode::exact;
  const auto results = parallel_map<Result>(points.size(), spec.threads, [&](std::size_t i) {
    const Point& p = points[i];
    const DetectorArrayModel model(p.n, p.eta, p.dark_count);
    Result r;
    r.formula = dark_count_error_unilluminated(model);
    r.numeric = dark_count_error_numeric(p.m, model, spec.mode);
    if (exact_column && model.has_exact()) r.exact = dark_count_error_unilluminated_exact(model).to_string();
    return r;
  });

  table.columns = exact_column ? with_columns(axes.names(), {"eps_d", "eps_d_numeric", "eps_d_exact"})
                               : with_columns(axes.names(), {"eps_d", "eps_d_numeric"});
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto row = leading_cells(axes, points[i]);
    row.emplace_back(results[i].formula);
    row.emplace_back(results[i].numeric);
    if (exact_column) row.emplace_back(results[i].exact);
    table.add_row(std::move(row));
  }
  return outcome;
}

Outcome evaluate_qe_error(const SweepSpec& spec) {
  Outcome outcome{start_table(spec)};
  Table& table = outcome.table;
  Axes axes(table);
  axes.probabilities("eta", spec.eta);
  axes.counts("m", spec.m, true);

  const auto points = grid_points({0}, spec.m, spec.eta, {Probability(0.0)});
  const bool exact_column = spec.mode == EvalMode::exact;
  table.columns = exact_column ? with_columns(axes.names(), {"eps_eta", "eps_eta_exact"})
                               : with_columns(axes.names(), {"eps_eta"});
  for (const Point& p : points) {
    auto row = leading_cells(axes, p);
    row.emplace_back(quantum_efficiency_error(p.m, p.eta));
    if (exact_column) {
      row.emplace_back(p.eta.has_exact() ? quantum_efficiency_error_exact(p.m, *p.eta.exact()).to_string()
                                         : std::string());
    }
    table.add_row(std::move(row));
  }
  return outcome;
}

Outcome evaluate_finite_size(const SweepSpec& spec) {
  Outcome outcome{start_table(spec)};
  Table& table = outcome.table;
  table.add_meta("eta_below_one_evaluation", std::string("exact"));
  Axes axes(table);
  axes.probabilities("eta", spec.eta, true);
  axes.counts("n", spec.n, true);
  axes.counts("m", spec.m, true);

  std::vector<Point> points;
  for (const auto& eta : spec.eta) {
    for (auto n : spec.n) {
      for (auto m : spec.m) points.push_back({n, m, eta, Probability(0.0)});
    }
  }
  const auto eps = parallel_map<double>(points.size(), spec.threads, [&](std::size_t i) {
    const Point& p = points[i];
    const EvalMode mode = p.eta.value() < 1.0 && p.eta.has_exact() ? EvalMode::exact : spec.mode;
    return finite_size_error(p.m, p.eta, p.n, mode);
  });

  table.columns = with_columns(axes.names(), {"eps_n", "eps_n_leading"});
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    auto row = leading_cells(axes, p);
    row.emplace_back(eps[i]);
    row.emplace_back(binomial_coefficient(p.m, 2).get_d() / static_cast<double>(p.n));
    table.add_row(std::move(row));
  }
  return outcome;
}

Outcome evaluate_temporal(const SweepSpec& spec) {
  Outcome outcome{start_table(spec)};
  Table& table = outcome.table;
  Axes axes(table);
  axes.probabilities("eta_c", spec.eta_c);
  axes.probabilities("eta", spec.eta);
  const auto first = static_cast<std::uint32_t>(spec.couplers.front());
  const auto last = static_cast<std::uint32_t>(spec.couplers.back());
  table.add_meta("N", std::to_string(first) + ".." + std::to_string(last));

  table.columns = with_columns(axes.names(), {"m", "N", "epsilon"});
  for (const auto& eta_c : spec.eta_c) {
    for (const auto& eta : spec.eta) {
      const Point base{0, 0, eta, Probability(0.0)};
      const auto rows = sweep_temporal(spec.m, eta_c, eta, first, last, spec.mode, spec.threads);
      for (const auto& r : rows) {
        auto row = leading_cells(axes, base, &eta_c);
        row.insert(row.end(), {Cell(r.m), Cell(static_cast<std::uint64_t>(r.couplers)), Cell(r.epsilon)});
        table.add_row(std::move(row));
      }

      auto lead = [&] {
        Record record;
        if (axes.varies("eta_c")) record.emplace_back("eta_c", eta_c.to_string());
        if (axes.varies("eta")) record.emplace_back("eta", eta.to_string());
        return record;
      };
      std::optional<std::uint64_t> max_below_half;
      for (const auto& [m, opt] : summarize_sweep(rows, last)) {
        Record record = lead();
        record.emplace_back("m", m);
        record.emplace_back("N_star", static_cast<std::uint64_t>(opt.couplers));
        record.emplace_back("eps_star", opt.epsilon);
        record.emplace_back("at_search_limit", opt.at_search_limit);
        table.summary.push_back(std::move(record));
        if (opt.epsilon < 0.5 && (!max_below_half || m > *max_below_half)) max_below_half = m;
      }
      Record record = lead();
      record.emplace_back("max_m_with_eps_star_below_half",
                          max_below_half ? Cell(*max_below_half) : Cell(std::string("none")));
      table.summary.push_back(std::move(record));
    }
  }
  return outcome;
}

Outcome evaluate_mc(const SweepSpec& spec) {
  Outcome outcome{start_table(spec)};
  Table& table = outcome.table;
  const std::uint64_t m = spec.m.front();
  const std::uint64_t n = spec.n.front();
  const Probability& eta = spec.eta.front();
  const Probability& pd = spec.dark_count.front();
  const Probability ref_eta = spec.assume_eta.value_or(eta);
  const Probability ref_pd = spec.assume_dark_count.value_or(pd);

  SimulationConfig cfg;
  cfg.samples = spec.samples;
  cfg.seed = spec.seed;
  cfg.chunk_size = spec.chunk_size;
  cfg.threads = spec.threads;
  const EmpiricalDistribution emp = empirical_distribution(m, DetectorArrayModel(n, eta, pd), cfg);
  const ClickDistribution ref = click_distribution_closed(m, DetectorArrayModel(n, ref_eta, ref_pd), spec.mode);
  const GoodnessOfFit fit = goodness_of_fit(emp, ref);
  outcome.passed = fit.p_value >= spec.threshold;

  table.add_meta("m", m);
  table.add_meta("n", n);
  table.add_meta("eta", eta.to_string());
  table.add_meta("pd", pd.to_string());
  table.add_meta("reference_eta", ref_eta.to_string());
  table.add_meta("reference_pd", ref_pd.to_string());
  table.add_meta("samples", spec.samples);
  table.add_meta("seed", spec.seed);
  table.add_meta("chunk_size", spec.chunk_size);
  table.add_meta("tv_distance", fit.tv_distance);
  table.add_meta("chi2_stat", fit.chi2_stat);
  table.add_meta("dof", fit.dof);
  table.add_meta("p_value", fit.p_value);
  table.add_meta("threshold", spec.threshold);
  table.add_meta("verdict", std::string(outcome.passed ? "accept" : "reject"));

  table.columns = {"k", "observed", "empirical_prob", "reference_prob"};
  for (std::uint64_t k = 0; k <= n; ++k) {
    table.add_row({k, emp.counts[k], static_cast<double>(emp.counts[k]) / static_cast<double>(emp.samples),
                   ref.prob(k)});
  }
  return outcome;
}

}  // namespace

Outcome evaluate(const SweepSpec& spec) {
  switch (spec.quantity) {
    case Quantity::dist:
      return evaluate_dist(spec);
    case Quantity::total_error:
      return evaluate_total_error(spec);
    case Quantity::finite_size:
      return evaluate_finite_size(spec);
    case Quantity::dark_count:
      return evaluate_dark_count(spec);
    case Quantity::qe_error:
      return evaluate_qe_error(spec);
    case Quantity::temporal:
      return evaluate_temporal(spec);
    case Quantity::mc:
      return evaluate_mc(spec);
  }
  throw std::logic_error("unhandled quantity");
}

}  // namespace clickcounter::cli
