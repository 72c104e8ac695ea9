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

#ifndef TORUSGAUSS_GAUSS_HPP
#define TORUSGAUSS_GAUSS_HPP

#include "torusgauss/cyclosum.hpp"
#include "torusgauss/report.hpp"

namespace torusgauss::gauss {

/// Summand data of a quadratic exponential sum
///   sum_{n=0}^{count-1} exp(2*pi*i * sign * coeff * (n-shift)^2 / modulus).
/// No gcd reduction is ever applied to coeff/modulus: the reduced sum is a
/// different sum, and reductions happen only where an explicit factorization
/// argument licenses them (see verify_landsberg_schaar / trace_method2).
struct GaussSumSpec {
  long long coeff = 1;
  long long modulus = 1;  // >= 1
  long long shift = 0;
  int sign = +1;  // +1 or -1
  long long count = 1;  // >= 1
};

/// Expand the described sum into an exact CycloSum.
CycloSum expand(const GaussSumSpec& spec);

/// sum_{n=0}^{p-1} exp(2*pi*i n^2 q / p)
CycloSum quad_gauss_sum(long long q, long long p);

/// sum_{n=0}^{2q-1} exp(-pi*i n^2 p / (2q))
CycloSum dual_gauss_sum(long long q, long long p);

/// Landsberg-Schaar:
///   (1/sqrt p) sum_{n<p} e^{2 pi i n^2 q/p}
///     = (e^{i pi/4}/sqrt(2q)) sum_{n<2q} e^{-pi i n^2 p/(2q)}.
/// Default tolerance 2^(8-precision) * (p + 2q); tolerance_override > 0
/// replaces it.
VerificationReport verify_landsberg_schaar(long long q, long long p,
                                           long precision_bits = kDefaultPrecisionBits,
                                           double tolerance_override = 0.0);

/// sum_{n=0}^{2r-1} exp(+2*pi*i (n-s)^2/(4r)); evaluates to sqrt(2r) e^{i pi/4}.
CycloSum appendix_sum_plus(long long r, long long s);

/// sum_{k=0}^{2r-1} exp(-2*pi*i (k-s)^2/(4r)); evaluates to sqrt(2r) e^{-i pi/4}.
CycloSum appendix_sum_minus(long long r, long long s);

/// Deterministic primality: trial division to 10^6, then Miller-Rabin with a
/// fixed witness set valid far beyond 64-bit inputs.
bool is_prime(unsigned long long n);

/// Legendre symbol (a|p) for odd prime p via Euler's criterion
/// a^((p-1)/2) mod p.  Throws std::domain_error if p is not an odd prime.
int legendre_symbol(long long a, long long p);

/// Quadratic reciprocity (p|q)(q|p) = (-1)^(((p-1)/2)((q-1)/2)), checked in
/// exact integer arithmetic for distinct odd primes.
VerificationReport verify_reciprocity(long long p, long long q);

}  // namespace torusgauss::gauss

#endif  // TORUSGAUSS_GAUSS_HPP
