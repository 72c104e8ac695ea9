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

#include "torusgauss/cli.hpp"

#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "torusgauss/cylinder.hpp"
#include "torusgauss/errors.hpp"
#include "torusgauss/gauss.hpp"
#include "torusgauss/torus.hpp"

namespace torusgauss::cli {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void finalize(RunSummary& s) {
  s.total = s.reports.size();
  s.passed = 0;
  s.failed = 0;
  s.worst_abs_diff = 0.0;
  for (const auto& r : s.reports) {
    (r.pass ? s.passed : s.failed) += 1;
    if (r.abs_diff > s.worst_abs_diff) s.worst_abs_diff = r.abs_diff;
  }
}

void run_indexed(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      work(i);
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min<int>(jobs, static_cast<int>(count));
  pool.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

RunSummary cmd_verify_ls(const SweepConfig& cfg) {
  if (cfg.p_min < 1 || cfg.q_min < 1 || cfg.p_max < cfg.p_min || cfg.q_max < cfg.q_min)
    throw std::invalid_argument("verify-ls: empty or invalid (p, q) ranges");
  if (cfg.precision_bits < 64)
    throw std::invalid_argument("verify-ls: sweeps require precision >= 64 bits");
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<std::pair<long long, long long>> cases;  // (p, q)
  for (long long p = cfg.p_min; p <= cfg.p_max; ++p)
    for (long long q = cfg.q_min; q <= cfg.q_max; ++q) cases.emplace_back(p, q);

  RunSummary s;
  s.lead_columns = {"p", "q"};
  s.reports.resize(cases.size());
  run_indexed(cases.size(), cfg.jobs, [&](std::size_t i) {
    s.reports[i] = gauss::verify_landsberg_schaar(cases[i].second, cases[i].first, cfg.precision_bits,
                                                  cfg.tolerance_override);
  });
  finalize(s);
  s.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return s;
}

RunSummary cmd_trace_compare(long long q, long long p, long precision_bits,
                             unsigned long long path_budget) {
  const auto t0 = std::chrono::steady_clock::now();
  torus::TorusSystem sys(q, p);
  RunSummary s;
  s.lead_columns = {"q", "p", "pair"};

  const ComplexHP m1 = torus::trace_method1(sys).evaluate(precision_bits);
  const ComplexHP m2 = torus::trace_method2(sys, precision_bits);
  const ComplexHP mp = torus::evolve_by_power(sys, precision_bits).trace();

  auto pair_report = [&](const char* name, const ComplexHP& a, const ComplexHP& b) {
    const double tol =
        4.0 * (a.err_bound() + b.err_bound()) + std::ldexp(1.0, static_cast<int>(16 - precision_bits));
    return make_report({{"q", std::to_string(q)}, {"p", std::to_string(p)}, {"pair", name}}, a, b, tol);
  };
  s.reports.push_back(pair_report("method1_vs_method2", m1, m2));
  s.reports.push_back(pair_report("method1_vs_matrix_power", m1, mp));
  // brute-force trace: sum of diagonal path sums, N^p paths in total
  unsigned long long need = 1;
  bool over = false;
  for (long long i = 0; i < sys.p; ++i) {
    if (need > ~0ULL / static_cast<unsigned long long>(sys.dim())) {
      over = true;
      break;
    }
    need *= static_cast<unsigned long long>(sys.dim());
  }
  if (over || need > path_budget) {
    s.skipped += 1;
  } else {
    ComplexHP brute = torus::brute_force_path_sum(sys, 0, 0, precision_bits, path_budget);
    for (long long r = 1; r < sys.dim(); ++r)
      brute += torus::brute_force_path_sum(sys, r, r, precision_bits, path_budget);
    s.reports.push_back(pair_report("method1_vs_path_enumeration", m1, brute));
  }
  finalize(s);
  s.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return s;
}

RunSummary cmd_appendix(long long r_max, long precision_bits) {
  if (r_max < 1) throw std::invalid_argument("appendix: r_max must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  RunSummary s;
  s.lead_columns = {"r", "shift", "sign"};
  for (long long r = 1; r <= r_max; ++r) {
    const BigFloat sqrt_2r = sqrt(BigFloat::of_int(2 * r, precision_bits + kGuardBits));
    const ComplexHP plus_expected =
        ComplexHP::unit_phase(PhaseRational(1, 8), precision_bits).scaled_real(sqrt_2r);
    const ComplexHP minus_expected =
        ComplexHP::unit_phase(PhaseRational(7, 8), precision_bits).scaled_real(sqrt_2r);
    const long long shifts[] = {-3 * r, -r - 1, 0, 1, 2, r, 3 * r};
    for (long long shift : shifts) {
      const ComplexHP plus = gauss::appendix_sum_plus(r, shift).evaluate(precision_bits);
      const ComplexHP minus = gauss::appendix_sum_minus(r, shift).evaluate(precision_bits);
      const double tol = 4.0 * (plus.err_bound() + plus_expected.err_bound()) +
                         std::ldexp(1.0, static_cast<int>(16 - precision_bits));
      s.reports.push_back(make_report({{"r", std::to_string(r)},
                                       {"shift", std::to_string(shift)},
                                       {"sign", "+"}},
                                      plus, plus_expected, tol));
      s.reports.push_back(make_report({{"r", std::to_string(r)},
                                       {"shift", std::to_string(shift)},
                                       {"sign", "-"}},
                                      minus, minus_expected, tol));
    }
  }
  finalize(s);
  s.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return s;
}

RunSummary cmd_reciprocity(long long bound) {
  if (bound < 5) throw std::invalid_argument("reciprocity: bound must be >= 5");
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<long long> primes;
  for (long long n = 3; n < bound; n += 2)
    if (gauss::is_prime(static_cast<unsigned long long>(n))) primes.push_back(n);
  RunSummary s;
  s.lead_columns = {"p", "q"};
  for (long long p : primes)
    for (long long q : primes)
      if (p != q) s.reports.push_back(gauss::verify_reciprocity(p, q));
  finalize(s);
  s.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return s;
}

RunSummary cmd_jacobi(const std::vector<std::complex<double>>& fixed_grid, int random_count,
                      std::uint64_t seed, long precision_bits) {
  const auto t0 = std::chrono::steady_clock::now();
  RunSummary s;
  s.lead_columns = {"tau_re", "tau_im"};
  for (const auto& tau : fixed_grid)
    s.reports.push_back(
        cylinder::verify_jacobi(ComplexHP::from_double(tau.real(), tau.imag(), precision_bits), precision_bits));
  std::uint64_t state = seed;
  for (int i = 0; i < random_count; ++i) {
    const double re = 0.1 + 9.9 * uniform01(state);
    const double im = re * (uniform01(state) - 0.5);  // |Im| <= Re/2
    s.reports.push_back(
        cylinder::verify_jacobi(ComplexHP::from_double(re, im, precision_bits), precision_bits));
  }
  finalize(s);
  s.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return s;
}

RunSummary cmd_limit(long long q, long long p, const std::vector<double>& eps_list, long precision_bits) {
  const auto t0 = std::chrono::steady_clock::now();
  RunSummary s;
  s.lead_columns = {"q", "p", "eps"};
  s.reports = cylinder::regularized_ls_limit(q, p, eps_list, precision_bits);
  finalize(s);
  s.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return s;
}

RunSummary cmd_path_oracle(long long q, long long p, long long r, long long s_idx, long precision_bits,
                           unsigned long long path_budget) {
  const auto t0 = std::chrono::steady_clock::now();
  torus::TorusSystem sys(q, p);
  const ComplexHP brute = torus::brute_force_path_sum(sys, r, s_idx, precision_bits, path_budget);
  const ComplexHP matrix = torus::evolve_by_power(sys, precision_bits).at(r, s_idx);
  const double tol = 4.0 * (brute.err_bound() + matrix.err_bound()) +
                     std::ldexp(1.0, static_cast<int>(16 - precision_bits));
  RunSummary s;
  s.lead_columns = {"q", "p", "r", "s"};
  s.reports.push_back(make_report({{"q", std::to_string(q)},
                                   {"p", std::to_string(p)},
                                   {"r", std::to_string(r)},
                                   {"s", std::to_string(s_idx)}},
                                  brute, matrix, tol));
  finalize(s);
  s.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  return s;
}

namespace {

std::vector<std::string> row_columns(const RunSummary& s) {
  std::vector<std::string> cols = s.lead_columns;
  // params not already leading, in map (alphabetical) order
  if (!s.reports.empty()) {
    for (const auto& [k, v] : s.reports.front().params) {
      bool seen = false;
      for (const auto& c : cols) seen = seen || c == k;
      if (!seen) cols.push_back(k);
    }
  }
  cols.insert(cols.end(), {"lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_diff", "tolerance", "pass"});
  return cols;
}

std::string cell(const VerificationReport& r, const std::string& col, int digits) {
  if (col == "lhs_re") return r.lhs.re().to_string(digits);
  if (col == "lhs_im") return r.lhs.im().to_string(digits);
  if (col == "rhs_re") return r.rhs.re().to_string(digits);
  if (col == "rhs_im") return r.rhs.im().to_string(digits);
  if (col == "abs_diff") return fmt_double(r.abs_diff);
  if (col == "tolerance") return fmt_double(r.tolerance);
  if (col == "pass") return r.pass ? "true" : "false";
  auto it = r.params.find(col);
  return it == r.params.end() ? "" : it->second;
}

bool integer_column(const std::string& col) {
  return col == "p" || col == "q" || col == "r" || col == "s" || col == "shift" || col == "m_lhs" ||
         col == "m_rhs";
}

}  // namespace

void write_reports(std::ostream& os, const RunSummary& summary, OutputFormat format,
                   long precision_bits) {
  const int digits = decimal_digits_for_bits(precision_bits);
  const std::vector<std::string> cols = row_columns(summary);
  switch (format) {
    case OutputFormat::json: {
      os << "[\n";
      for (std::size_t i = 0; i < summary.reports.size(); ++i) {
        const auto& r = summary.reports[i];
        os << "  {";
        for (std::size_t c = 0; c < cols.size(); ++c) {
          if (c) os << ", ";
          os << '"' << cols[c] << "\": ";
          const std::string v = cell(r, cols[c], digits);
          if (cols[c] == "pass")
            os << v;
          else if (integer_column(cols[c]))
            os << (v.empty() ? "null" : v);
          else
            os << '"' << v << '"';
        }
        os << '}' << (i + 1 < summary.reports.size() ? "," : "") << '\n';
      }
      os << "]\n";
      break;
    }
    case OutputFormat::csv: {
      for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
      os << '\n';
      for (const auto& r : summary.reports) {
        for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cell(r, cols[c], digits);
        os << '\n';
      }
      break;
    }
    case OutputFormat::text: {
      for (const auto& r : summary.reports) {
        os << (r.pass ? "PASS" : "FAIL");
        for (const auto& c : summary.lead_columns) os << ' ' << c << '=' << cell(r, c, digits);
        os << " abs_diff=" << fmt_double(r.abs_diff) << " tolerance=" << fmt_double(r.tolerance)
           << '\n';
      }
      break;
    }
  }
}

std::string summary_line(const RunSummary& s) {
  std::string line = "total=" + std::to_string(s.total) + " passed=" + std::to_string(s.passed) +
                     " failed=" + std::to_string(s.failed);
  if (s.skipped) line += " skipped=" + std::to_string(s.skipped);
  line += " worst_abs_diff=" + fmt_double(s.worst_abs_diff) +
          " elapsed_ms=" + std::to_string(s.elapsed.count());
  return line;
}

int exit_code(const RunSummary& s) { return s.failed == 0 ? 0 : 1; }

}  // namespace torusgauss::cli
