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

#ifndef TORUSGAUSS_TORUS_HPP
#define TORUSGAUSS_TORUS_HPP

#include <vector>

#include "torusgauss/cyclosum.hpp"
#include "torusgauss/report.hpp"

namespace torusgauss::torus {

inline constexpr unsigned long long kDefaultPathBudget = 10'000'000ULL;

/// N = 2q dimensional quantum mechanics of a free rotor whose angular
/// momentum is periodic as well as its angle.  Units: hbar = 1, moment of
/// inertia I = 1.  The evolution time is pinned to the p-th allowed
/// observation time t = 2*pi*p*I/(N*hbar).
struct TorusSystem {
  long long q;
  long long p;

  TorusSystem(long long q_in, long long p_in);
  long long dim() const { return 2 * q; }  // N, always even
  static constexpr double inertia = 1.0;
  static constexpr double hbar = 1.0;
  double time() const;  // 2*pi*p/N
};

enum class Basis { momentum, position };

/// Coefficients of a state in the tagged basis.  The position basis vectors
/// are the grid indicators, so position-tagged coefficients are the values
/// of the state on the angular grid {0, ..., N-1}.
struct StateVector {
  std::vector<ComplexHP> coeff;
  Basis basis = Basis::position;

  long long dim() const { return static_cast<long long>(coeff.size()); }
  // index reduced mod N, matching the periodic expansion a_k = a_{k+N}
  const ComplexHP& at(long long k) const;
};

struct KernelMatrix {
  long long dim = 0;
  Basis basis = Basis::position;
  long long steps = 0;
  std::vector<ComplexHP> entries;  // row-major

  const ComplexHP& at(long long r, long long s) const { return entries[static_cast<std::size_t>(r * dim + s)]; }
  ComplexHP& at(long long r, long long s) { return entries[static_cast<std::size_t>(r * dim + s)]; }
  ComplexHP trace() const;
};

KernelMatrix multiply(const KernelMatrix& a, const KernelMatrix& b);

/// Observation times t_m = 2*pi*m*I/(N*hbar), m = 1..m_max, forced by the
/// angular-momentum periodicity.  N must be even.
std::vector<double> allowed_times(long long n_dim, double inertia, long long m_max);

/// f_k(j) = exp(2*pi*i k j/N)/sqrt(N) sampled on the angular grid, and the
/// grid indicators b_r, both orthonormal under <f|g> = sum_j conj(f_j) g_j.
/// Both families are returned in their grid (position) representation.
std::vector<StateVector> momentum_basis(long long n_dim, long precision_bits = kDefaultPrecisionBits);
std::vector<StateVector> position_basis(long long n_dim, long precision_bits = kDefaultPrecisionBits);

ComplexHP inner_product(const StateVector& a, const StateVector& b);

/// Exponentiated angular position: b_r -> exp(2*pi*i r/N) b_r; requires the
/// position representation.
StateVector position_op_apply(const StateVector& v);

/// Momentum-basis trace of exp(-iHt): sum_{k=0}^{N-1} exp(-i pi k^2 p/N).
CycloSum trace_method1(const TorusSystem& sys);

/// Spectral single-step entry as an exact sum (before the 1/N factor):
/// sum_{k=0}^{N-1} exp(2*pi*i (k d/N - k^2 p_steps/(2N))) at offset d = r-s.
CycloSum spectral_power_sum(long long n_dim, long long p_steps, long long offset);

/// Single time step exp(-iH t/p) in the grid basis:
/// entry(r,s) = exp(2*pi*i (r-s)^2/(2N)) / sqrt(iN), principal sqrt.
/// Throws std::domain_error for odd N (free function form used by tests).
KernelMatrix step_kernel_matrix(long long n_dim, long precision_bits);
KernelMatrix single_step_kernel(const TorusSystem& sys, long precision_bits = kDefaultPrecisionBits);

/// p-fold product of the single step, by repeated multiplication.
KernelMatrix evolve_by_power(const TorusSystem& sys, long precision_bits = kDefaultPrecisionBits);

/// Full-time kernel assembled in the momentum basis:
/// entry(r,s) = (1/N) sum_k exp(2*pi*i (k(r-s)/N - k^2 p/(2N))).
KernelMatrix spectral_kernel_matrix(const TorusSystem& sys, long precision_bits = kDefaultPrecisionBits);

/// Exact sum over all N^(p-1) intermediate grid paths from s to r of
/// exp(2*pi*i sum_i (s_i - s_{i-1})^2/(2N)).  Throws EnumerationBudgetError
/// (naming the required count) if N^(p-1) exceeds the budget.
CycloSum brute_force_path_cyclosum(const TorusSystem& sys, long long r, long long s,
                                   unsigned long long budget = kDefaultPathBudget);

/// The path sum above normalized by (iN)^(-p/2) = (1/sqrt(iN))^p: equals the
/// (r,s) entry of the p-step kernel.
ComplexHP brute_force_path_sum(const TorusSystem& sys, long long r, long long s,
                               long precision_bits = kDefaultPrecisionBits,
                               unsigned long long budget = kDefaultPathBudget);

/// Winding/step double sum  sum_{l<N} sum_{k<p} exp(2*pi*i (kN+lp)^2/(2Np)).
CycloSum winding_sum(long long n_dim, long long p);

/// Closed form asserted for the winding sum: sqrt(iNp) for odd p, and
/// sqrt((1+(-1)^r) iNp) for p = 2r.  (For r even this printed form is too
/// small by sqrt(2); see winding_closed_form_corrected.)
ComplexHP winding_closed_form(long long n_dim, long long p, long precision_bits = kDefaultPrecisionBits);

/// (1+(-1)^r) sqrt(iNp) for p = 2r: the value the double sum actually takes
/// when gcd(p, N/2) = 1 (equals the other form for odd r; for odd p both
/// forms are sqrt(iNp)).
ComplexHP winding_closed_form_corrected(long long n_dim, long long p,
                                        long precision_bits = kDefaultPrecisionBits);

/// Path-integral trace in closed form, sqrt(2q/(ip)) sum_{k<p} e^{2 pi i k^2 q/p}
/// for gcd(p,q) = 1; a common factor m = gcd(p,q) is pulled out first via
/// p = m p', q = m q', for which the trace is m times the coprime trace.
ComplexHP trace_method2(const TorusSystem& sys, long precision_bits = kDefaultPrecisionBits);

}  // namespace torusgauss::torus

#endif  // TORUSGAUSS_TORUS_HPP
