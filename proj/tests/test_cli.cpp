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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "torusgauss/cli.hpp"

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string base = "/tmp/torusgauss_cli_" + std::to_string(++counter);
  const std::string out = base + ".out", err = base + ".err";
  const std::string cmd = env + " " + std::string(TORUSGAUSS_CLI_BIN) + " " + args + " > " + out +
                          " 2> " + err;
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("verify-ls: full grid passes with valid JSON output") {
  const CliRun r = run_cli("--format json verify-ls --p-min 1 --p-max 10 --q-min 1 --q-max 10");
  CHECK(r.exit_code == 0);
  const nlohmann::json data = nlohmann::json::parse(r.out);
  REQUIRE(data.is_array());
  REQUIRE(data.size() == 100);
  for (const auto& row : data) {
    CHECK(row.at("pass").get<bool>());
    CHECK(row.at("p").is_number_integer());
    CHECK(row.at("q").is_number_integer());
    // precision-preserving decimal strings, not floats
    CHECK(row.at("lhs_re").is_string());
    CHECK(std::stod(row.at("abs_diff").get<std::string>()) <
          std::stod(row.at("tolerance").get<std::string>()) + 1e-30);
  }
  CHECK(r.err.find("passed=100") != std::string::npos);
}

TEST_CASE("verify-ls: byte-identical output across runs and job counts") {
  const std::string args = "--format json verify-ls --p-min 1 --p-max 8 --q-min 1 --q-max 8";
  const CliRun a = run_cli(args + " --jobs 1");
  const CliRun b = run_cli(args + " --jobs 1");
  const CliRun c = run_cli(args + " --jobs 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  const std::string csv_args = "--format csv verify-ls --p-min 1 --p-max 6 --q-min 1 --q-max 6";
  const CliRun d = run_cli(csv_args);
  const CliRun e = run_cli(csv_args);
  CHECK(d.out == e.out);
}

TEST_CASE("verify-ls: csv carries the documented header") {
  const CliRun r = run_cli("--format csv verify-ls --p-min 2 --p-max 2 --q-min 1 --q-max 1");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "p,q,lhs_re,lhs_im,rhs_re,rhs_im,abs_diff,tolerance,pass");
  CHECK(row.substr(0, 4) == "2,1,");
  CHECK(row.find("true") != std::string::npos);
}

TEST_CASE("verify-ls: usage errors exit with 2") {
  CHECK(run_cli("verify-ls --p-min 5 --p-max 2").exit_code == 2);
  CHECK(run_cli("verify-ls --precision 32").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("--format yaml verify-ls").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // subcommand required
}

TEST_CASE("trace-compare: all methods agree, oracle skipped over budget") {
  const CliRun r = run_cli("--format text trace-compare --q 1 --p 3");
  CHECK(r.exit_code == 0);
  CHECK(count_occurrences(r.out, "PASS") == 3);
  CHECK(r.out.find("method1_vs_method2") != std::string::npos);
  CHECK(r.out.find("method1_vs_matrix_power") != std::string::npos);
  CHECK(r.out.find("method1_vs_path_enumeration") != std::string::npos);

  const CliRun s = run_cli("--format text --budget 100 trace-compare --q 3 --p 5");
  CHECK(s.exit_code == 0);
  CHECK(count_occurrences(s.out, "PASS") == 2);
  CHECK(s.out.find("path_enumeration") == std::string::npos);
  CHECK(s.err.find("skipped=1") != std::string::npos);
}

TEST_CASE("appendix and reciprocity sweeps pass") {
  const CliRun a = run_cli("--format csv appendix --r-max 12");
  CHECK(a.exit_code == 0);
  CHECK(count_occurrences(a.out, "false") == 0);
  const CliRun b = run_cli("reciprocity --bound 40");
  CHECK(b.exit_code == 0);
  CHECK(b.err.find("failed=0") != std::string::npos);
}

TEST_CASE("jacobi: seeded runs are reproducible, seeds differ") {
  const CliRun a = run_cli("--format json --seed 42 jacobi --random 5");
  const CliRun b = run_cli("--format json --seed 42 jacobi --random 5");
  const CliRun c = run_cli("--format json --seed 43 jacobi --random 5");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  const nlohmann::json data = nlohmann::json::parse(a.out);
  CHECK(data.size() == 11);  // default grid of 6 plus 5 random
}

TEST_CASE("limit: decreasing gaps, data on stdout only") {
  const CliRun r = run_cli("--format json limit --q 1 --p 3 --eps 0.1 0.01");
  CHECK(r.exit_code == 0);
  const nlohmann::json data = nlohmann::json::parse(r.out);
  REQUIRE(data.size() == 2);
  CHECK(std::stod(data[1].at("abs_diff").get<std::string>()) <
        std::stod(data[0].at("abs_diff").get<std::string>()));
  CHECK(run_cli("limit --q 1 --p 3 --eps 0.1 0.5").exit_code == 2);
}

TEST_CASE("path-oracle: matches the kernel entry; refusal names the count") {
  const CliRun ok = run_cli("--format text path-oracle --q 1 --p 2 --r 0 --s 1");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);

  const CliRun refuse = run_cli("--budget 1 path-oracle --q 1 --p 3 --r 0 --s 0");
  CHECK(refuse.exit_code == 2);
  CHECK(refuse.err.find("4 paths") != std::string::npos);
  CHECK(refuse.err.find("budget of 1") != std::string::npos);
}

TEST_CASE("environment variables override defaults with the project prefix") {
  const CliRun r = run_cli("verify-ls --p-min 1 --p-max 2 --q-min 1 --q-max 2",
                           "TORUSGAUSS_FORMAT=json");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out).is_array());
}

TEST_CASE("library-level sweep: parallel equals serial") {
  torusgauss::cli::SweepConfig cfg;
  cfg.p_min = 1;
  cfg.p_max = 9;
  cfg.q_min = 1;
  cfg.q_max = 9;
  cfg.jobs = 1;
  const auto serial = torusgauss::cli::cmd_verify_ls(cfg);
  cfg.jobs = 4;
  const auto parallel = torusgauss::cli::cmd_verify_ls(cfg);
  REQUIRE(serial.reports.size() == parallel.reports.size());
  CHECK(serial.worst_abs_diff == parallel.worst_abs_diff);
  CHECK(serial.passed == parallel.passed);
  for (std::size_t i = 0; i < serial.reports.size(); ++i) {
    CHECK(serial.reports[i].pass == parallel.reports[i].pass);
    CHECK(serial.reports[i].abs_diff == parallel.reports[i].abs_diff);
  }
}
