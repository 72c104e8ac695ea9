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

#ifndef TORUSGAUSS_CYLINDER_HPP
#define TORUSGAUSS_CYLINDER_HPP

#include <vector>

#include "torusgauss/complex_hp.hpp"
#include "torusgauss/report.hpp"

namespace torusgauss::cylinder {

/// Upper bound on sum_{n > M} exp(-alpha n^2): the term ratio is at most
/// exp(-alpha(2M+3)), so the tail is below its first term divided by
/// (1 - ratio).  Result floored at 1e-300 so it stays a positive upper
/// bound when the double formula underflows.
double gaussian_tail(double alpha, long truncation);

/// Smallest M with 2*gaussian_tail(alpha, M) <= target.
long choose_truncation(double alpha, double target);

/// Truncation data for theta(tau) = sum_n exp(-pi n^2 tau), Re(tau) > 0.
struct ThetaParams {
  ComplexHP tau;
  long truncation = 1;
  double tail_bound = 0.0;  // >= 2 sum_{n>M} exp(-pi n^2 Re tau)

  static ThetaParams auto_truncated(const ComplexHP& tau, double target);
  static ThetaParams with_truncation(const ComplexHP& tau, long truncation);
};

/// sum_{n=-M}^{M} exp(-pi n^2 tau).  The returned error bound covers
/// rounding only; params.tail_bound bounds the distance to the full series.
ComplexHP theta_truncated(const ThetaParams& params);

/// theta(tau) = (1/sqrt tau) theta(1/tau) with principal sqrt, both sides
/// summed independently at automatic truncation.  The tolerance is the sum
/// of the two truncation tails (the right one scaled by |1/sqrt tau|) plus
/// the rounding bounds.
VerificationReport verify_jacobi(const ComplexHP& tau, long precision_bits = kDefaultPrecisionBits);

/// Free rotor on the circle with complex regularized time, Im(t) < 0.
struct CylinderKernelParams {
  BigFloat inertia;
  BigFloat hbar;
  ComplexHP t;       // Im(t) < 0 strictly
  BigFloat theta0;   // angles reduced into [0, 2*pi)
  BigFloat theta;
  long truncation = 1;

  long precision() const { return t.precision(); }

  static CylinderKernelParams make(double inertia, double hbar, double t_re, double t_im,
                                   double theta0, double theta,
                                   long precision_bits = kDefaultPrecisionBits,
                                   double tail_target = 0.0);
  /// Same, with the normalization 2*pi*I = hbar, under which the spectral
  /// trace at imaginary time is the standard theta series.
  static CylinderKernelParams theta_normalized_preset(double inertia, double t_re, double t_im,
                                                      double theta0, double theta,
                                                      long precision_bits = kDefaultPrecisionBits,
                                                      double tail_target = 0.0);
};

/// (1/2pi) sum_{n=-M}^{M} exp(-i hbar n^2 t/(2I)) exp(i n (theta-theta0)).
/// Error bound covers rounding; spectral_tail_bound gives the truncation tail.
ComplexHP spectral_kernel(const CylinderKernelParams& params);
double spectral_tail_bound(const CylinderKernelParams& params);

/// sum_{n=-M}^{M} sqrt(I/(2 pi i hbar t)) exp((iI/(2 hbar t))(theta-theta0-2 pi n)^2),
/// principal sqrt.  Termwise a free propagator per winding image; equals
/// spectral_kernel within the combined tail and rounding bounds.
ComplexHP image_kernel(const CylinderKernelParams& params);
double image_tail_bound(const CylinderKernelParams& params);

/// Evaluate both sides of the theta transformation at tau = 2iq/p + eps and
/// scale by sqrt(p*eps), conjugated: both sides then converge, as eps -> 0+,
/// to the two sides of the Landsberg-Schaar identity for (q, p).  One report
/// per eps; abs_diff is the certified gap to the exact limit value, and each
/// report after the first passes iff its gap strictly decreased.
std::vector<VerificationReport> regularized_ls_limit(long long q, long long p,
                                                     const std::vector<double>& eps_list,
                                                     long precision_bits = 512);

}  // namespace torusgauss::cylinder

#endif  // TORUSGAUSS_CYLINDER_HPP
