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

#include "torusgauss/torus.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "torusgauss/errors.hpp"
#include "torusgauss/gauss.hpp"

namespace torusgauss::torus {

TorusSystem::TorusSystem(long long q_in, long long p_in) : q(q_in), p(p_in) {
  if (q < 1 || p < 1) throw std::invalid_argument("TorusSystem: q and p must be positive");
}

double TorusSystem::time() const {
  return 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(dim());
}

const ComplexHP& StateVector::at(long long k) const {
  const long long n = dim();
  long long r = k % n;
  if (r < 0) r += n;
  return coeff[static_cast<std::size_t>(r)];
}

ComplexHP KernelMatrix::trace() const {
  ComplexHP t = ComplexHP::zero(entries.empty() ? kDefaultPrecisionBits : entries.front().precision());
  for (long long r = 0; r < dim; ++r) t += at(r, r);
  return t;
}

KernelMatrix multiply(const KernelMatrix& a, const KernelMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("KernelMatrix multiply: dimension mismatch");
  if (a.basis != b.basis) throw std::invalid_argument("KernelMatrix multiply: basis mismatch");
  KernelMatrix out;
  out.dim = a.dim;
  out.basis = a.basis;
  out.steps = a.steps + b.steps;
  out.entries.reserve(static_cast<std::size_t>(a.dim * a.dim));
  for (long long r = 0; r < a.dim; ++r) {
    for (long long s = 0; s < a.dim; ++s) {
      ComplexHP acc = a.at(r, 0) * b.at(0, s);
      for (long long t = 1; t < a.dim; ++t) acc += a.at(r, t) * b.at(t, s);
      out.entries.push_back(std::move(acc));
    }
  }
  return out;
}

std::vector<double> allowed_times(long long n_dim, double inertia, long long m_max) {
  if (n_dim < 2 || n_dim % 2 != 0)
    throw std::domain_error("allowed_times: N must be even (momentum periodicity quantizes time only then)");
  if (inertia <= 0) throw std::invalid_argument("allowed_times: inertia must be positive");
  if (m_max < 1) throw std::invalid_argument("allowed_times: m_max must be >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m_max));
  for (long long m = 1; m <= m_max; ++m)
    out.push_back(2.0 * std::numbers::pi * static_cast<double>(m) * inertia / static_cast<double>(n_dim));
  return out;
}

std::vector<StateVector> momentum_basis(long long n_dim, long precision_bits) {
  if (n_dim < 1) throw std::invalid_argument("momentum_basis: N must be >= 1");
  const BigFloat inv_sqrt_n =
      BigFloat::of_int(1, precision_bits + kGuardBits) / sqrt(BigFloat::of_int(n_dim, precision_bits + kGuardBits));
  std::vector<StateVector> out;
  out.reserve(static_cast<std::size_t>(n_dim));
  for (long long k = 0; k < n_dim; ++k) {
    StateVector v;
    v.basis = Basis::position;
    v.coeff.reserve(static_cast<std::size_t>(n_dim));
    for (long long j = 0; j < n_dim; ++j)
      v.coeff.push_back(
          ComplexHP::unit_phase(PhaseRational(k * j, n_dim), precision_bits).scaled_real(inv_sqrt_n));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<StateVector> position_basis(long long n_dim, long precision_bits) {
  if (n_dim < 1) throw std::invalid_argument("position_basis: N must be >= 1");
  // b_r(theta) = (1/N) sum_k exp(2 pi i (theta - r) k/N) collapses to the
  // grid indicator delta_{r,theta} on integer theta.
  std::vector<StateVector> out;
  out.reserve(static_cast<std::size_t>(n_dim));
  for (long long r = 0; r < n_dim; ++r) {
    StateVector v;
    v.basis = Basis::position;
    for (long long j = 0; j < n_dim; ++j)
      v.coeff.push_back(ComplexHP::from_double(j == r ? 1.0 : 0.0, 0.0, precision_bits));
    out.push_back(std::move(v));
  }
  return out;
}

ComplexHP inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  if (a.basis != b.basis) throw std::invalid_argument("inner_product: mixed representations");
  ComplexHP acc = a.coeff[0].conj() * b.coeff[0];
  for (long long j = 1; j < a.dim(); ++j) acc += a.coeff[static_cast<std::size_t>(j)].conj() * b.coeff[static_cast<std::size_t>(j)];
  return acc;
}

StateVector position_op_apply(const StateVector& v) {
  if (v.basis != Basis::position)
    throw std::domain_error("position_op_apply: state must be in the position representation");
  const long long n = v.dim();
  StateVector out;
  out.basis = Basis::position;
  out.coeff.reserve(static_cast<std::size_t>(n));
  for (long long j = 0; j < n; ++j) {
    const ComplexHP& c = v.coeff[static_cast<std::size_t>(j)];
    out.coeff.push_back(ComplexHP::unit_phase(PhaseRational(j, n), c.precision()) * c);
  }
  return out;
}

CycloSum trace_method1(const TorusSystem& sys) {
  const long long n = sys.dim();
  // exp(-i pi k^2 p/N) = exp(2 pi i (-k^2 p)/(2N))
  return gauss::expand({.coeff = -sys.p, .modulus = 2 * n, .shift = 0, .sign = +1, .count = n});
}

CycloSum spectral_power_sum(long long n_dim, long long p_steps, long long offset) {
  if (n_dim < 1) throw std::invalid_argument("spectral_power_sum: N must be >= 1");
  CycloSum out;
  const long long m = 2 * n_dim;
  std::vector<long long> bucket(static_cast<std::size_t>(m), 0);
  for (long long k = 0; k < n_dim; ++k) {
    // k d / N - k^2 p/(2N) = (2 k d - k^2 p) / (2N)
    __int128 e = (static_cast<__int128>(2) * k % m * (offset % m) % m -
                  static_cast<__int128>(k) * k % m * (p_steps % m) % m) %
                 m;
    if (e < 0) e += m;
    ++bucket[static_cast<std::size_t>(e)];
  }
  for (long long e = 0; e < m; ++e)
    if (bucket[static_cast<std::size_t>(e)] != 0) out.add_term(PhaseRational(e, m), bucket[static_cast<std::size_t>(e)]);
  return out;
}

namespace {

ComplexHP inverse_sqrt_iN(long long n_dim, long precision_bits) {
  const ComplexHP i_n(BigFloat(precision_bits), BigFloat::of_int(n_dim, precision_bits), 0.0);
  return ComplexHP::from_double(1.0, 0.0, precision_bits) / principal_sqrt(i_n);
}

}  // namespace

KernelMatrix step_kernel_matrix(long long n_dim, long precision_bits) {
  if (n_dim < 2 || n_dim % 2 != 0)
    throw std::domain_error("step_kernel_matrix: N must be even (the quadratic phase has period N only then)");
  const ComplexHP norm = inverse_sqrt_iN(n_dim, precision_bits);
  // entry depends on (r-s) mod N: precompute the N distinct values
  std::vector<ComplexHP> by_offset;
  by_offset.reserve(static_cast<std::size_t>(n_dim));
  for (long long d = 0; d < n_dim; ++d) {
    const long long e = d * d % (2 * n_dim);
    by_offset.push_back(ComplexHP::unit_phase(PhaseRational(e, 2 * n_dim), precision_bits) * norm);
  }
  KernelMatrix out;
  out.dim = n_dim;
  out.basis = Basis::position;
  out.steps = 1;
  out.entries.reserve(static_cast<std::size_t>(n_dim * n_dim));
  for (long long r = 0; r < n_dim; ++r)
    for (long long s = 0; s < n_dim; ++s)
      out.entries.push_back(by_offset[static_cast<std::size_t>(((r - s) % n_dim + n_dim) % n_dim)]);
  return out;
}

KernelMatrix single_step_kernel(const TorusSystem& sys, long precision_bits) {
  return step_kernel_matrix(sys.dim(), precision_bits);
}

KernelMatrix evolve_by_power(const TorusSystem& sys, long precision_bits) {
  KernelMatrix step = single_step_kernel(sys, precision_bits);
  KernelMatrix acc = step;
  for (long long i = 1; i < sys.p; ++i) acc = multiply(acc, step);
  return acc;
}

KernelMatrix spectral_kernel_matrix(const TorusSystem& sys, long precision_bits) {
  const long long n = sys.dim();
  const BigFloat inv_n = BigFloat::of_int(1, precision_bits + kGuardBits) / BigFloat::of_int(n, precision_bits + kGuardBits);
  std::vector<ComplexHP> by_offset;
  by_offset.reserve(static_cast<std::size_t>(n));
  for (long long d = 0; d < n; ++d)
    by_offset.push_back(spectral_power_sum(n, sys.p, d).evaluate(precision_bits).scaled_real(inv_n));
  KernelMatrix out;
  out.dim = n;
  out.basis = Basis::position;
  out.steps = sys.p;
  out.entries.reserve(static_cast<std::size_t>(n * n));
  for (long long r = 0; r < n; ++r)
    for (long long s = 0; s < n; ++s)
      out.entries.push_back(by_offset[static_cast<std::size_t>(((r - s) % n + n) % n)]);
  return out;
}

CycloSum brute_force_path_cyclosum(const TorusSystem& sys, long long r, long long s,
                                   unsigned long long budget) {
  const long long n = sys.dim();
  if (r < 0 || r >= n || s < 0 || s >= n)
    throw std::invalid_argument("brute_force_path_cyclosum: grid index out of range");
  // N^(p-1) intermediate configurations
  unsigned long long paths = 1;
  bool overflow = false;
  for (long long i = 1; i < sys.p; ++i) {
    if (paths > ~0ULL / static_cast<unsigned long long>(n)) {
      overflow = true;
      break;
    }
    paths *= static_cast<unsigned long long>(n);
  }
  if (overflow || paths > budget) {
    const unsigned long long required = overflow ? ~0ULL : paths;
    const std::string count = overflow ? "more than " + std::to_string(~0ULL) : std::to_string(paths);
    throw EnumerationBudgetError("path enumeration needs " + count + " paths, over the budget of " +
                                     std::to_string(budget),
                                 required);
  }

  const long long m = 2 * n;
  std::vector<long long> sq(static_cast<std::size_t>(2 * n - 1));  // (d^2) mod 2N for d in [-(N-1), N-1]
  for (long long d = -(n - 1); d <= n - 1; ++d) sq[static_cast<std::size_t>(d + n - 1)] = d * d % m;

  std::vector<long long> bucket(static_cast<std::size_t>(m), 0);
  std::vector<long long> mid(static_cast<std::size_t>(std::max<long long>(sys.p - 1, 0)), 0);
  while (true) {
    long long e = 0;
    long long prev = s;  // path runs s = s_0 -> s_1 -> ... -> s_p = r
    for (long long i = 0; i < sys.p - 1; ++i) {
      e += sq[static_cast<std::size_t>(mid[static_cast<std::size_t>(i)] - prev + n - 1)];
      prev = mid[static_cast<std::size_t>(i)];
    }
    e = (e + sq[static_cast<std::size_t>(r - prev + n - 1)]) % m;
    ++bucket[static_cast<std::size_t>(e)];
    // odometer over the intermediate points
    long long pos = 0;
    while (pos < sys.p - 1 && ++mid[static_cast<std::size_t>(pos)] == n) {
      mid[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos >= sys.p - 1) break;
  }
  CycloSum out;
  for (long long e = 0; e < m; ++e)
    if (bucket[static_cast<std::size_t>(e)] != 0) out.add_term(PhaseRational(e, m), bucket[static_cast<std::size_t>(e)]);
  return out;
}

ComplexHP brute_force_path_sum(const TorusSystem& sys, long long r, long long s, long precision_bits,
                               unsigned long long budget) {
  const CycloSum exact = brute_force_path_cyclosum(sys, r, s, budget);
  ComplexHP value = exact.evaluate(precision_bits);
  // (iN)^(-p/2) means the p-th power of 1/sqrt(iN), matching the per-step factor
  const ComplexHP inv = inverse_sqrt_iN(sys.dim(), precision_bits);
  for (long long i = 0; i < sys.p; ++i) value = value * inv;
  return value;
}

CycloSum winding_sum(long long n_dim, long long p) {
  if (n_dim < 2 || n_dim % 2 != 0) throw std::domain_error("winding_sum: N must be even");
  if (p < 1) throw std::invalid_argument("winding_sum: p must be positive");
  const long long m = 2 * n_dim * p;
  std::vector<long long> bucket(static_cast<std::size_t>(m), 0);
  for (long long l = 0; l < n_dim; ++l) {
    for (long long k = 0; k < p; ++k) {
      const __int128 v = static_cast<__int128>(k) * n_dim + static_cast<__int128>(l) * p;
      const long long e = static_cast<long long>(v % m * (v % m) % m);
      ++bucket[static_cast<std::size_t>(e)];
    }
  }
  CycloSum out;
  for (long long e = 0; e < m; ++e)
    if (bucket[static_cast<std::size_t>(e)] != 0) out.add_term(PhaseRational(e, m), bucket[static_cast<std::size_t>(e)]);
  return out;
}

ComplexHP winding_closed_form(long long n_dim, long long p, long precision_bits) {
  if (p % 2 != 0)
    return principal_sqrt(ComplexHP(BigFloat(precision_bits), BigFloat::of_int(n_dim * p, precision_bits), 0.0));
  const long long r = p / 2;
  if (r % 2 != 0) return ComplexHP::zero(precision_bits);
  return principal_sqrt(ComplexHP(BigFloat(precision_bits), BigFloat::of_int(2 * n_dim * p, precision_bits), 0.0));
}

ComplexHP winding_closed_form_corrected(long long n_dim, long long p, long precision_bits) {
  if (p % 2 != 0) return winding_closed_form(n_dim, p, precision_bits);
  const long long r = p / 2;
  if (r % 2 != 0) return ComplexHP::zero(precision_bits);
  return principal_sqrt(ComplexHP(BigFloat(precision_bits), BigFloat::of_int(n_dim * p, precision_bits), 0.0))
      .scaled_int(2);
}

ComplexHP trace_method2(const TorusSystem& sys, long precision_bits) {
  const long long m = std::gcd(sys.p, sys.q);
  const long long p1 = sys.p / m;
  const long long q1 = sys.q / m;
  const ComplexHP quad = gauss::quad_gauss_sum(q1, p1).evaluate(precision_bits);
  const ComplexHP sqrt_ip =
      principal_sqrt(ComplexHP(BigFloat(precision_bits), BigFloat::of_int(p1, precision_bits), 0.0));
  const BigFloat sqrt_2q = sqrt(BigFloat::of_int(2 * q1, precision_bits + kGuardBits));
  ComplexHP tr = quad.scaled_real(sqrt_2q) / sqrt_ip;
  if (m != 1) tr = tr.scaled_int(m);
  return tr;
}

}  // namespace torusgauss::torus
