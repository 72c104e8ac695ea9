/*
  torusgauss, exact and high-precision verification of quadratic
  Gauss-sum identities via finite quantum mechanics on the torus

  This library is licensed under the Apache License, Version 2.0 (the "License");
  you may not use this library except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include <CLI11.hpp>
#include <complex>
#include <iostream>

#include "torusgauss/cli.hpp"
#include "torusgauss/errors.hpp"

namespace {

using torusgauss::cli::OutputFormat;
using torusgauss::cli::RunSummary;
using torusgauss::cli::SweepConfig;

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw CLI::ValidationError("--format", "expected json, csv or text");
}

int emit(const RunSummary& summary, OutputFormat format, long precision_bits) {
  torusgauss::cli::write_reports(std::cout, summary, format, precision_bits);
  std::cerr << torusgauss::cli::summary_line(summary) << '\n';
  return torusgauss::cli::exit_code(summary);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification harness for quadratic Gauss-sum and theta-function identities"};
  app.require_subcommand(1);
  app.fallthrough();

  SweepConfig cfg;
  std::string format_name = "text";
  app.add_option("--precision", cfg.precision_bits, "working precision in bits")
      ->envname("TORUSGAUSS_PRECISION");
  app.add_option("--tolerance", cfg.tolerance_override, "override the per-operation tolerance")
      ->envname("TORUSGAUSS_TOLERANCE");
  app.add_option("--format", format_name, "output format: json, csv or text")
      ->envname("TORUSGAUSS_FORMAT");
  app.add_option("--jobs", cfg.jobs, "worker threads for sweeps")->envname("TORUSGAUSS_JOBS");
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps")->envname("TORUSGAUSS_SEED");
  app.add_option("--budget", cfg.path_budget, "maximum number of enumerated paths")
      ->envname("TORUSGAUSS_BUDGET");

  auto* ls = app.add_subcommand("verify-ls", "Landsberg-Schaar sweep over a (p, q) grid");
  ls->add_option("--p-min", cfg.p_min);
  ls->add_option("--p-max", cfg.p_max);
  ls->add_option("--q-min", cfg.q_min);
  ls->add_option("--q-max", cfg.q_max);

  long long q = 1, p = 1, r_idx = 0, s_idx = 0, r_max = 50, bound = 100;
  int random_count = 0;
  std::vector<double> eps_list;
  std::vector<double> tau_list;

  auto* tc = app.add_subcommand("trace-compare", "evolution-operator trace, all methods");
  tc->add_option("--q", q)->required();
  tc->add_option("--p", p)->required();

  auto* ax = app.add_subcommand("appendix", "closed-form shifted Gauss sums sweep");
  ax->add_option("--r-max", r_max);

  auto* rc = app.add_subcommand("reciprocity", "quadratic reciprocity over odd prime pairs");
  rc->add_option("--bound", bound);

  auto* jc = app.add_subcommand("jacobi", "theta transformation checks");
  jc->add_option("--tau", tau_list, "real tau grid points (default grid if omitted)");
  jc->add_option("--random", random_count, "number of seeded random complex tau");

  auto* lm = app.add_subcommand("limit", "regularized approach to the identity");
  lm->add_option("--q", q)->required();
  lm->add_option("--p", p)->required();
  lm->add_option("--eps", eps_list, "strictly decreasing positive eps values")->required();

  auto* po = app.add_subcommand("path-oracle", "brute-force path sum vs. kernel matrix entry");
  po->add_option("--q", q)->required();
  po->add_option("--p", p)->required();
  po->add_option("--r", r_idx)->required();
  po->add_option("--s", s_idx)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    const OutputFormat format = parse_format(format_name);
    RunSummary summary;
    if (*ls) {
      cfg.format = format;
      summary = torusgauss::cli::cmd_verify_ls(cfg);
    } else if (*tc) {
      summary = torusgauss::cli::cmd_trace_compare(q, p, cfg.precision_bits, cfg.path_budget);
    } else if (*ax) {
      summary = torusgauss::cli::cmd_appendix(r_max, cfg.precision_bits);
    } else if (*rc) {
      summary = torusgauss::cli::cmd_reciprocity(bound);
    } else if (*jc) {
      std::vector<std::complex<double>> grid;
      if (tau_list.empty())
        grid = {{0.25, 0}, {0.5, 0}, {1, 0}, {1.5, 0}, {2, 0}, {4, 0}};
      for (double t : tau_list) grid.emplace_back(t, 0.0);
      summary = torusgauss::cli::cmd_jacobi(grid, random_count, cfg.seed, cfg.precision_bits);
    } else if (*lm) {
      summary = torusgauss::cli::cmd_limit(q, p, eps_list, cfg.precision_bits);
    } else if (*po) {
      summary = torusgauss::cli::cmd_path_oracle(q, p, r_idx, s_idx, cfg.precision_bits, cfg.path_budget);
    }
    return emit(summary, format, cfg.precision_bits);
  } catch (const torusgauss::EnumerationBudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
