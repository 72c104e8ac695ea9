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

#ifndef TORUSGAUSS_CLI_HPP
#define TORUSGAUSS_CLI_HPP

#include <chrono>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "torusgauss/report.hpp"

namespace torusgauss::cli {

enum class OutputFormat { json, csv, text };

struct SweepConfig {
  long long p_min = 1, p_max = 1;
  long long q_min = 1, q_max = 1;
  long precision_bits = kDefaultPrecisionBits;
  double tolerance_override = 0.0;  // <= 0 means per-operation default
  OutputFormat format = OutputFormat::text;
  int jobs = 1;
  std::uint64_t seed = 1;
  unsigned long long path_budget = 10'000'000ULL;
};

struct RunSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  double worst_abs_diff = 0.0;
  std::chrono::milliseconds elapsed{0};
  std::vector<VerificationReport> reports;
  // column names of the params that lead each output row, in order
  std::vector<std::string> lead_columns;
};

RunSummary cmd_verify_ls(const SweepConfig& cfg);
RunSummary cmd_trace_compare(long long q, long long p, long precision_bits,
                             unsigned long long path_budget);
RunSummary cmd_appendix(long long r_max, long precision_bits);
RunSummary cmd_reciprocity(long long bound);
RunSummary cmd_jacobi(const std::vector<std::complex<double>>& fixed_grid, int random_count,
                      std::uint64_t seed, long precision_bits);
RunSummary cmd_limit(long long q, long long p, const std::vector<double>& eps_list,
                     long precision_bits);
RunSummary cmd_path_oracle(long long q, long long p, long long r, long long s, long precision_bits,
                           unsigned long long path_budget);

/// Serialize the per-case reports.  Data is deterministic for a fixed
/// config: the elapsed time never appears here (it goes to the summary
/// line on stderr).
void write_reports(std::ostream& os, const RunSummary& summary, OutputFormat format,
                   long precision_bits);

/// One human-readable line: totals, worst gap, elapsed.
std::string summary_line(const RunSummary& summary);

/// 0 if nothing failed, 1 otherwise (usage errors are the caller's 2).
int exit_code(const RunSummary& summary);

std::uint64_t splitmix64(std::uint64_t& state);
/// uniform double in [0,1) from a 64-bit state, reproducible across platforms
double uniform01(std::uint64_t& state);

}  // namespace torusgauss::cli

#endif  // TORUSGAUSS_CLI_HPP
