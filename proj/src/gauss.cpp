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

#include "torusgauss/gauss.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace torusgauss::gauss {

CycloSum expand(const GaussSumSpec& spec) {
  if (spec.modulus < 1) throw std::invalid_argument("GaussSumSpec: modulus must be >= 1");
  if (spec.count < 1) throw std::invalid_argument("GaussSumSpec: count must be >= 1");
  if (spec.sign != 1 && spec.sign != -1) throw std::invalid_argument("GaussSumSpec: sign must be +/-1");
  // All exponents share the denominator `modulus`; bucket by residue.
  std::vector<long long> bucket(static_cast<std::size_t>(spec.modulus), 0);
  for (long long n = 0; n < spec.count; ++n) {
    const __int128 d = static_cast<__int128>(n) - spec.shift;
    __int128 e = spec.sign * spec.coeff % spec.modulus * (d % spec.modulus) % spec.modulus *
                 (d % spec.modulus) % spec.modulus;
    e %= spec.modulus;
    if (e < 0) e += spec.modulus;
    ++bucket[static_cast<std::size_t>(e)];
  }
  CycloSum out;
  for (long long e = 0; e < spec.modulus; ++e)
    if (bucket[static_cast<std::size_t>(e)] != 0)
      out.add_term(PhaseRational(e, spec.modulus), bucket[static_cast<std::size_t>(e)]);
  return out;
}

CycloSum quad_gauss_sum(long long q, long long p) {
  if (p < 1 || q < 1) throw std::invalid_argument("quad_gauss_sum: p, q must be positive");
  return expand({.coeff = q, .modulus = p, .shift = 0, .sign = +1, .count = p});
}

CycloSum dual_gauss_sum(long long q, long long p) {
  if (p < 1 || q < 1) throw std::invalid_argument("dual_gauss_sum: p, q must be positive");
  // exponent -n^2 p/(4q) of 2*pi, over n = 0..2q-1
  return expand({.coeff = p, .modulus = 4 * q, .shift = 0, .sign = -1, .count = 2 * q});
}

VerificationReport verify_landsberg_schaar(long long q, long long p, long precision_bits,
                                           double tolerance_override) {
  CycloSum lhs_sum = quad_gauss_sum(q, p);
  CycloSum rhs_sum = dual_gauss_sum(q, p);

  const BigFloat sqrt_p = sqrt(BigFloat::of_int(p, precision_bits + kGuardBits));
  const BigFloat sqrt_2q = sqrt(BigFloat::of_int(2 * q, precision_bits + kGuardBits));
  ComplexHP lhs = lhs_sum.evaluate(precision_bits) / ComplexHP::from_rounded_real(sqrt_p);
  ComplexHP rhs = (ComplexHP::unit_phase(PhaseRational(1, 8), precision_bits) *
                   rhs_sum.evaluate(precision_bits)) /
                  ComplexHP::from_rounded_real(sqrt_2q);

  const double tol = tolerance_override > 0.0
                         ? tolerance_override
                         : std::ldexp(static_cast<double>(p + 2 * q), static_cast<int>(8 - precision_bits));
  VerificationReport rep = make_report({{"p", std::to_string(p)}, {"q", std::to_string(q)}},
                                       std::move(lhs), std::move(rhs), tol);
  rep.exact_lhs = std::move(lhs_sum);
  rep.exact_rhs = std::move(rhs_sum);
  return rep;
}

CycloSum appendix_sum_plus(long long r, long long s) {
  if (r < 1) throw std::invalid_argument("appendix_sum_plus: r must be positive");
  return expand({.coeff = 1, .modulus = 4 * r, .shift = s, .sign = +1, .count = 2 * r});
}

CycloSum appendix_sum_minus(long long r, long long s) {
  if (r < 1) throw std::invalid_argument("appendix_sum_minus: r must be positive");
  return expand({.coeff = 1, .modulus = 4 * r, .shift = s, .sign = -1, .count = 2 * r});
}

namespace {

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long m) {
  return static_cast<unsigned long long>(static_cast<unsigned __int128>(a) * b % m);
}

unsigned long long powmod(unsigned long long base, unsigned long long e, unsigned long long m) {
  unsigned long long r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(unsigned long long n, unsigned long long a) {
  unsigned long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  unsigned long long x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  const unsigned long long trial_limit = 1000000;
  for (unsigned long long d = 11; d <= trial_limit && d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  if (n <= trial_limit * trial_limit) return true;
  for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % a == 0) return n == a;
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

int legendre_symbol(long long a, long long p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<unsigned long long>(p)))
    throw std::domain_error("legendre_symbol: p must be an odd prime");
  long long r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  const unsigned long long e = powmod(static_cast<unsigned long long>(r),
                                      static_cast<unsigned long long>((p - 1) / 2),
                                      static_cast<unsigned long long>(p));
  if (e == 1) return 1;
  if (e == static_cast<unsigned long long>(p - 1)) return -1;
  throw std::logic_error("legendre_symbol: Euler criterion produced a non-root");
}

VerificationReport verify_reciprocity(long long p, long long q) {
  if (p == q) throw std::domain_error("verify_reciprocity: p and q must be distinct");
  const int pq = legendre_symbol(p, q);  // validates q
  const int qp = legendre_symbol(q, p);  // validates p
  const int lhs = pq * qp;
  const int rhs = (((p - 1) / 2) % 2 != 0 && ((q - 1) / 2) % 2 != 0) ? -1 : 1;

  VerificationReport rep;
  rep.params = {{"p", std::to_string(p)},
                {"q", std::to_string(q)},
                {"legendre_pq", std::to_string(pq)},
                {"legendre_qp", std::to_string(qp)}};
  rep.lhs = ComplexHP::from_double(lhs, 0.0, 64);
  rep.rhs = ComplexHP::from_double(rhs, 0.0, 64);
  rep.abs_diff = std::abs(lhs - rhs);  // exact: 0 or 2
  rep.tolerance = 0.5;                 // integer-exact check
  rep.pass = rep.abs_diff <= rep.tolerance;
  return rep;
}

}  // namespace torusgauss::gauss
