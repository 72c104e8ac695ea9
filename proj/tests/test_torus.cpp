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

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "testing_util.hpp"
#include "torusgauss/errors.hpp"
#include "torusgauss/torus.hpp"

using namespace torusgauss;
using namespace torusgauss::torus;
using tgtest::close_to;

TEST_CASE("TorusSystem: dimensions and evolution time") {
  TorusSystem sys(3, 5);
  CHECK(sys.dim() == 6);
  CHECK(sys.time() == doctest::Approx(2.0 * std::numbers::pi * 5.0 / 6.0));
  CHECK_THROWS_AS(TorusSystem(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(TorusSystem(1, 0), std::invalid_argument);
}

TEST_CASE("allowed_times: examples and parity guard") {
  const auto t42 = allowed_times(4, 1.0, 2);
  REQUIRE(t42.size() == 2);
  CHECK(t42[1] == doctest::Approx(std::numbers::pi));
  CHECK(allowed_times(2, 1.0, 1)[0] == doctest::Approx(std::numbers::pi));
  CHECK(allowed_times(6, 3.0, 1)[0] == doctest::Approx(std::numbers::pi));
  // the m-th allowed time equals the system time at p = m
  CHECK(allowed_times(6, 1.0, 4)[3] == doctest::Approx(TorusSystem(3, 4).time()));
  CHECK_THROWS_AS(allowed_times(5, 1.0, 1), std::domain_error);
  CHECK_THROWS_AS(allowed_times(4, -1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(allowed_times(4, 1.0, 0), std::invalid_argument);
}

TEST_CASE("bases: orthonormality and the grid overlap") {
  for (long long n : {2LL, 3LL, 4LL, 6LL}) {
    const auto fk = momentum_basis(n, 192);
    const auto br = position_basis(n, 192);
    for (long long a = 0; a < n; ++a) {
      for (long long b = 0; b < n; ++b) {
        const double expected = a == b ? 1.0 : 0.0;
        CHECK(close_to(inner_product(fk[a], fk[b]), expected, 0.0, 1e-50));
        CHECK(close_to(inner_product(br[a], br[b]), expected, 0.0, 1e-50));
        // <r|k> = exp(2 pi i k r/N)/sqrt(N)
        const ComplexHP overlap = inner_product(br[a], fk[b]);
        const ComplexHP expected_overlap =
            ComplexHP::unit_phase(PhaseRational(a * b, n), 192)
                .scaled_real(BigFloat::of_int(1, 224) / sqrt(BigFloat::of_int(n, 224)));
        CHECK(tgtest::gap(overlap, expected_overlap) < 1e-50);
      }
    }
  }
}

TEST_CASE("position basis vectors are grid indicators") {
  const auto br = position_basis(2, 128);
  CHECK(close_to(br[0].coeff[0], 1.0, 0.0, 0.0));
  CHECK(close_to(br[0].coeff[1], 0.0, 0.0, 0.0));
  CHECK(close_to(br[1].coeff[1], 1.0, 0.0, 0.0));
}

TEST_CASE("StateVector::at reduces indices mod N") {
  const auto fk = momentum_basis(4, 128);
  CHECK(distance(fk[1].at(7), fk[1].at(3)).to_double() == 0.0);
  CHECK(distance(fk[1].at(-1), fk[1].at(3)).to_double() == 0.0);
}

TEST_CASE("position_op_apply: eigenvalue relation and linearity") {
  const auto b4 = position_basis(4, 192);
  const StateVector xb1 = position_op_apply(b4[1]);
  CHECK(close_to(xb1.coeff[1], 0.0, 1.0, 1e-50));  // eigenvalue i at N=4, r=1

  const auto b2 = position_basis(2, 192);
  const StateVector xb0 = position_op_apply(b2[0]);
  CHECK(close_to(xb0.coeff[0], 1.0, 0.0, 1e-50));  // eigenvalue 1

  // N=3: apply to b_0 + b_1
  const auto b3 = position_basis(3, 192);
  StateVector v;
  v.basis = Basis::position;
  for (long long j = 0; j < 3; ++j) v.coeff.push_back(b3[0].coeff[j] + b3[1].coeff[j]);
  const StateVector xv = position_op_apply(v);
  CHECK(close_to(xv.coeff[0], 1.0, 0.0, 1e-50));
  CHECK(close_to(xv.coeff[1], -0.5, std::sqrt(3.0) / 2, 1e-15));

  StateVector bad = v;
  bad.basis = Basis::momentum;
  CHECK_THROWS_AS(position_op_apply(bad), std::domain_error);
}

TEST_CASE("trace_method1: pinned examples") {
  CHECK(close_to(trace_method1(TorusSystem(1, 1)).evaluate(256), 1.0, -1.0, 1e-70));
  CHECK(close_to(trace_method1(TorusSystem(1, 3)).evaluate(256), 1.0, 1.0, 1e-70));
  CHECK(close_to(trace_method1(TorusSystem(1, 4)).evaluate(256), 2.0, 0.0, 1e-70));
}

TEST_CASE("single_step_kernel: pinned entries, modulus, parity guard") {
  const KernelMatrix u2 = step_kernel_matrix(2, 256);
  CHECK(close_to(u2.at(0, 0), 0.5, -0.5, 1e-70));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (long long r = 0; r < 2; ++r)
    for (long long s = 0; s < 2; ++s)
      CHECK(u2.at(r, s).abs().to_double() == doctest::Approx(inv_sqrt2).epsilon(1e-14));

  const KernelMatrix u4 = step_kernel_matrix(4, 256);
  const double c = 0.5 * inv_sqrt2;  // |1/sqrt(4i)| components
  CHECK(close_to(u4.at(0, 2), -c, c, 1e-15));

  CHECK_THROWS_AS(step_kernel_matrix(3, 128), std::domain_error);
  CHECK_THROWS_AS(step_kernel_matrix(5, 128), std::domain_error);
}

TEST_CASE("single_step_kernel: agrees with its spectral assembly") {
  for (long long q : {1LL, 2LL, 3LL, 4LL}) {
    const TorusSystem sys(q, 1);
    const KernelMatrix closed = single_step_kernel(sys, 192);
    const KernelMatrix spectral = spectral_kernel_matrix(sys, 192);
    for (long long r = 0; r < sys.dim(); ++r)
      for (long long s = 0; s < sys.dim(); ++s)
        CHECK(tgtest::gap(closed.at(r, s), spectral.at(r, s)) < 1e-50);
  }
}

TEST_CASE("circulant structure is exact at the CycloSum level") {
  for (long long n : {2LL, 4LL, 6LL, 8LL}) {
    for (long long p : {1LL, 2LL, 3LL}) {
      for (long long r = 0; r < n; ++r) {
        for (long long s = 0; s < n; ++s) {
          const long long d = ((r - s) % n + n) % n;
          CHECK(spectral_power_sum(n, p, r - s) == spectral_power_sum(n, p, d));
        }
      }
    }
  }
}

TEST_CASE("unitarity and constant modulus up to N = 16") {
  for (long long n = 2; n <= 16; n += 2) {
    const KernelMatrix u = step_kernel_matrix(n, 192);
    KernelMatrix udag = u;
    for (long long r = 0; r < n; ++r)
      for (long long s = 0; s < n; ++s) udag.at(r, s) = u.at(s, r).conj();
    const KernelMatrix prod = multiply(u, udag);
    for (long long r = 0; r < n; ++r) {
      for (long long s = 0; s < n; ++s) {
        const double expected = r == s ? 1.0 : 0.0;
        CHECK(close_to(prod.at(r, s), expected, 0.0, 16.0 * prod.at(r, s).err_bound() + 1e-52));
        // N |entry|^2 = 1, compared in working precision
        const BigFloat mag = u.at(r, s).abs();
        CHECK(std::fabs(mul_int(mag * mag, n).to_double() - 1.0) < 1e-52);
      }
    }
  }
}

TEST_CASE("evolve_by_power: trace examples and translation invariance") {
  CHECK(close_to(evolve_by_power(TorusSystem(1, 1)).trace(), 1.0, -1.0, 1e-70));
  CHECK(close_to(evolve_by_power(TorusSystem(1, 2)).trace(), 0.0, 0.0, 1e-70));
  CHECK(tgtest::gap(evolve_by_power(TorusSystem(2, 1)).trace(),
                    trace_method1(TorusSystem(2, 1)).evaluate(256)) < 1e-70);

  for (long long q : {1LL, 2LL, 3LL}) {
    for (long long p : {1LL, 2LL, 3LL}) {
      const TorusSystem sys(q, p);
      const KernelMatrix k = evolve_by_power(sys, 192);
      CHECK(k.steps == p);
      for (long long r = 0; r < sys.dim(); ++r)
        for (long long s = 0; s < sys.dim(); ++s)
          CHECK(tgtest::gap(k.at(r, s), k.at(((r - s) % sys.dim() + sys.dim()) % sys.dim(), 0)) < 1e-45);
    }
  }
}

TEST_CASE("brute_force_path_sum: oracle values and three-way agreement") {
  CHECK(close_to(brute_force_path_sum(TorusSystem(1, 1), 0, 0), 0.5, -0.5, 1e-70));

  const TorusSystem s12(1, 2);
  CHECK(tgtest::gap(brute_force_path_sum(s12, 0, 0), evolve_by_power(s12).at(0, 0)) < 1e-70);

  const TorusSystem s23(2, 3);
  CHECK(tgtest::gap(brute_force_path_sum(s23, 1, 3), evolve_by_power(s23).at(1, 3)) < 1e-70);

  for (long long q : {1LL, 2LL}) {
    for (long long p : {1LL, 2LL, 3LL}) {
      const TorusSystem sys(q, p);
      const KernelMatrix power = evolve_by_power(sys, 192);
      const KernelMatrix spectral = spectral_kernel_matrix(sys, 192);
      for (long long r = 0; r < sys.dim(); ++r) {
        for (long long s = 0; s < sys.dim(); ++s) {
          const ComplexHP brute = brute_force_path_sum(sys, r, s, 192);
          CHECK(tgtest::gap(brute, power.at(r, s)) < 1e-45);
          CHECK(tgtest::gap(spectral.at(r, s), power.at(r, s)) < 1e-45);
        }
      }
    }
  }
}

TEST_CASE("brute_force_path_sum: budget refusal and index validation") {
  const TorusSystem sys(2, 30);  // 4^29 paths
  try {
    brute_force_path_cyclosum(sys, 0, 0, 1000);
    FAIL("expected EnumerationBudgetError");
  } catch (const EnumerationBudgetError& e) {
    CHECK(e.required > 1000ULL);
    CHECK(std::string(e.what()).find("1000") != std::string::npos);
  }
  CHECK_THROWS_AS(brute_force_path_cyclosum(TorusSystem(1, 1), 2, 0, 100), std::invalid_argument);
}

TEST_CASE("winding_sum: pinned examples and closed forms") {
  CHECK(close_to(winding_sum(2, 1).evaluate(256), 1.0, 1.0, 1e-70));
  const double s6 = std::sqrt(6.0) / std::sqrt(2.0);
  CHECK(close_to(winding_sum(2, 3).evaluate(256), s6, s6, 1e-15));
  CHECK(close_to(winding_sum(2, 2).evaluate(256), 0.0, 0.0, 1e-70));

  // odd p coprime to N: sqrt(iNp)
  for (long long n = 2; n <= 12; n += 2) {
    for (long long p = 1; p <= 9; p += 2) {
      if (std::gcd(p, n) != 1) continue;
      CHECK(tgtest::gap(winding_sum(n, p).evaluate(192), winding_closed_form(n, p, 192)) < 1e-50);
    }
  }
  // even p = 2r, gcd(p, N/2) = 1: zero for odd r, 2 sqrt(iNp) for even r
  for (long long n = 2; n <= 12; n += 2) {
    for (long long p = 2; p <= 12; p += 2) {
      if (std::gcd(p, n / 2) != 1) continue;
      CHECK(tgtest::gap(winding_sum(n, p).evaluate(192), winding_closed_form_corrected(n, p, 192)) <
            1e-50);
    }
  }
  // for p = 2r with r even the corrected value is sqrt(2) times the older
  // printed form; (N=2, p=4) pins the discrepancy
  CHECK(close_to(winding_sum(2, 4).evaluate(256), 4.0, 4.0, 1e-70));
  CHECK(close_to(winding_closed_form(2, 4, 256), 2.0 * std::sqrt(2.0), 2.0 * std::sqrt(2.0), 1e-14));
  CHECK_THROWS_AS(winding_sum(3, 1), std::domain_error);
}

TEST_CASE("trace_method2: pinned examples") {
  CHECK(close_to(trace_method2(TorusSystem(1, 3)), 1.0, 1.0, 1e-70));
  CHECK(close_to(trace_method2(TorusSystem(1, 1)), 1.0, -1.0, 1e-70));
  CHECK(close_to(trace_method2(TorusSystem(1, 2)), 0.0, 0.0, 1e-70));
}

TEST_CASE("trace equality: methods 1 and 2 agree, composite pairs reduced") {
  for (long long q = 1; q <= 8; ++q) {
    for (long long p = 1; p <= 8; ++p) {
      const TorusSystem sys(q, p);
      CHECK(tgtest::gap(trace_method1(sys).evaluate(256), trace_method2(sys, 256)) < 1e-60);
    }
  }
  // the even/odd trivial case: p = 2r with r odd vanishes on both sides
  for (long long q : {1LL, 3LL, 5LL}) {
    for (long long p : {2LL, 6LL, 10LL}) {
      if (std::gcd(p, q) != 1) continue;
      const TorusSystem sys(q, p);
      CHECK(trace_method1(sys).evaluate(256).abs().to_double() < 1e-70);
      CHECK(trace_method2(sys, 256).abs().to_double() < 1e-70);
    }
  }
  // composite reduction path exercises m = gcd(p, q) > 1
  const TorusSystem c(4, 6);
  CHECK(tgtest::gap(trace_method1(c).evaluate(256), trace_method2(c, 256)) < 1e-60);
  CHECK(close_to(trace_method2(c, 256), -2.0 * std::sqrt(2.0), -2.0 * std::sqrt(2.0), 1e-14));
}

TEST_CASE("matrix power trace matches both methods at moderate size") {
  for (long long q : {1LL, 2LL, 3LL, 5LL}) {
    for (long long p : {1LL, 2LL, 3LL, 4LL, 5LL}) {
      const TorusSystem sys(q, p);
      const ComplexHP mt = evolve_by_power(sys, 192).trace();
      CHECK(tgtest::gap(mt, trace_method1(sys).evaluate(192)) < 1e-40);
    }
  }
}
