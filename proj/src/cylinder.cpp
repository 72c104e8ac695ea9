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

#include "torusgauss/cylinder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "torusgauss/gauss.hpp"

namespace torusgauss::cylinder {

namespace {
constexpr double kTailFloor = 1e-300;
constexpr double kMinTailTarget = 1e-280;

// z * (-i) and z * i
ComplexHP times_minus_i(const ComplexHP& z) { return ComplexHP(z.im(), -z.re(), z.err_bound()); }
ComplexHP times_i(const ComplexHP& z) { return ComplexHP(-z.im(), z.re(), z.err_bound()); }
}  // namespace

double gaussian_tail(double alpha, long truncation) {
  if (alpha <= 0) throw std::invalid_argument("gaussian_tail: alpha must be positive");
  const double m1 = static_cast<double>(truncation) + 1.0;
  const double lead = std::exp(-alpha * m1 * m1);
  const double ratio = std::exp(-alpha * (2.0 * m1 + 1.0));
  double tail = lead / (1.0 - ratio);
  if (!(tail > kTailFloor)) tail = kTailFloor;
  return tail;
}

long choose_truncation(double alpha, double target) {
  if (target < kMinTailTarget) target = kMinTailTarget;
  long m = static_cast<long>(std::sqrt(std::max(0.0, -std::log(target / 4.0)) / alpha));
  m = std::max<long>(1, m - 2);
  while (2.0 * gaussian_tail(alpha, m) > target) {
    ++m;
    if (m > 100000000L) throw std::invalid_argument("choose_truncation: target unreachable");
  }
  return m;
}

ThetaParams ThetaParams::auto_truncated(const ComplexHP& tau, double target) {
  ThetaParams p;
  p.tau = tau;
  const double a_lo = tau.re().to_double() * (1.0 - 1e-12) - tau.err_bound();
  if (a_lo <= 0) throw std::domain_error("theta: Re(tau) must be positive");
  const double alpha = std::numbers::pi * a_lo;
  p.truncation = choose_truncation(alpha, target);
  p.tail_bound = 2.0 * gaussian_tail(alpha, p.truncation);
  return p;
}

ThetaParams ThetaParams::with_truncation(const ComplexHP& tau, long truncation) {
  ThetaParams p;
  p.tau = tau;
  const double a_lo = tau.re().to_double() * (1.0 - 1e-12) - tau.err_bound();
  if (a_lo <= 0) throw std::domain_error("theta: Re(tau) must be positive");
  if (truncation < 1) throw std::invalid_argument("theta: truncation must be >= 1");
  p.truncation = truncation;
  p.tail_bound = 2.0 * gaussian_tail(std::numbers::pi * a_lo, truncation);
  return p;
}

ComplexHP theta_truncated(const ThetaParams& params) {
  const ComplexHP& tau = params.tau;
  if (!(tau.re().sign() > 0)) throw std::domain_error("theta: Re(tau) must be positive");
  const long prec = tau.precision();
  const BigFloat pi = BigFloat::pi(prec + kGuardBits);
  ComplexHP sum = ComplexHP::from_double(1.0, 0.0, prec);  // n = 0
  for (long n = 1; n <= params.truncation; ++n) {
    // +n and -n contribute equally
    const BigFloat factor = mul_int(pi, -n * n);
    sum += cexp(tau.scaled_real(factor)).scaled_int(2);
  }
  return sum;
}

VerificationReport verify_jacobi(const ComplexHP& tau, long precision_bits) {
  const double target = std::ldexp(1.0, static_cast<int>(10 - precision_bits));
  const ComplexHP tau_p = ComplexHP(tau.re().rounded_to(precision_bits),
                                    tau.im().rounded_to(precision_bits), tau.err_bound());
  const ThetaParams left = ThetaParams::auto_truncated(tau_p, target);
  const ComplexHP sigma = ComplexHP::from_double(1.0, 0.0, precision_bits) / tau_p;
  const ThetaParams right = ThetaParams::auto_truncated(sigma, target);

  const ComplexHP lhs = theta_truncated(left);
  const ComplexHP sqrt_tau = principal_sqrt(tau_p);
  const ComplexHP rhs = theta_truncated(right) / sqrt_tau;

  const double inv_mag = 1.0 / std::max(sqrt_tau.abs_lower(), 1e-300);
  const double tolerance = left.tail_bound + right.tail_bound * inv_mag +
                           2.0 * (lhs.err_bound() + rhs.err_bound()) + kTailFloor;
  VerificationReport rep = make_report(
      {{"tau_re", tau.re().to_string(20)},
       {"tau_im", tau.im().to_string(20)},
       {"m_lhs", std::to_string(left.truncation)},
       {"m_rhs", std::to_string(right.truncation)}},
      lhs, rhs, tolerance);
  return rep;
}

CylinderKernelParams CylinderKernelParams::make(double inertia, double hbar, double t_re, double t_im,
                                                double theta0, double theta, long precision_bits,
                                                double tail_target) {
  if (!(inertia > 0) || !(hbar > 0))
    throw std::invalid_argument("CylinderKernelParams: inertia and hbar must be positive");
  if (!(t_im < 0))
    throw std::domain_error(
        "CylinderKernelParams: Im(t) must be negative; at real times the series converges only in the "
        "distribution sense");
  CylinderKernelParams p;
  p.inertia = BigFloat::of(inertia, precision_bits);
  p.hbar = BigFloat::of(hbar, precision_bits);
  p.t = ComplexHP::from_double(t_re, t_im, precision_bits);
  const double two_pi = 2.0 * std::numbers::pi;
  p.theta0 = BigFloat::of(theta0 - two_pi * std::floor(theta0 / two_pi), precision_bits);
  p.theta = BigFloat::of(theta - two_pi * std::floor(theta / two_pi), precision_bits);
  if (tail_target <= 0) tail_target = std::ldexp(1.0, static_cast<int>(10 - precision_bits));
  // one truncation serving both series
  long m = 1;
  CylinderKernelParams probe = p;
  for (;;) {
    probe.truncation = m;
    if (spectral_tail_bound(probe) <= tail_target && image_tail_bound(probe) <= tail_target) break;
    ++m;
    if (m > 100000000L) throw std::invalid_argument("CylinderKernelParams: tail target unreachable");
  }
  p.truncation = m;
  return p;
}

CylinderKernelParams CylinderKernelParams::theta_normalized_preset(double inertia, double t_re,
                                                                    double t_im, double theta0,
                                                                    double theta, long precision_bits,
                                                                    double tail_target) {
  CylinderKernelParams p = make(inertia, 1.0, t_re, t_im, theta0, theta, precision_bits, tail_target);
  // 2*pi*I = hbar, built from the high-precision pi rather than a double
  p.hbar = ldexp2(BigFloat::pi(precision_bits) * p.inertia, 1);
  return p;
}

namespace {

// -i hbar t / (2 I): exponent coefficient of n^2 in the spectral series
ComplexHP spectral_exponent_coeff(const CylinderKernelParams& params) {
  const BigFloat scale = params.hbar / ldexp2(params.inertia, 1);
  return times_minus_i(params.t).scaled_real(scale);
}

// i I / (2 hbar t): exponent coefficient of the squared image displacement
ComplexHP image_exponent_coeff(const CylinderKernelParams& params) {
  const long prec = params.precision();
  const BigFloat scale = params.inertia / ldexp2(params.hbar, 1);
  const ComplexHP inv_t = ComplexHP::from_double(1.0, 0.0, prec) / params.t;
  return times_i(inv_t).scaled_real(scale);
}

}  // namespace

double spectral_tail_bound(const CylinderKernelParams& params) {
  const ComplexHP w = spectral_exponent_coeff(params);
  const double alpha = -(w.re().to_double() * (1.0 - 1e-12) + w.err_bound());
  if (alpha <= 0) throw std::domain_error("spectral_kernel: nonpositive decay rate");
  return 2.0 * gaussian_tail(alpha, params.truncation) / (2.0 * std::numbers::pi) * (1.0 + 1e-12);
}

ComplexHP spectral_kernel(const CylinderKernelParams& params) {
  if (!(params.t.im().sign() < 0))
    throw std::domain_error(
        "spectral_kernel: Im(t) must be negative; at real times the series converges only in the "
        "distribution sense");
  const long prec = params.precision();
  const long wp = prec + kGuardBits;
  const ComplexHP w = spectral_exponent_coeff(params);
  const BigFloat d = params.theta.rounded_to(wp) - params.theta0.rounded_to(wp);

  ComplexHP sum = ComplexHP::from_double(1.0, 0.0, prec);
  for (long n = 1; n <= params.truncation; ++n) {
    // e^{w n^2}(e^{i n d} + e^{-i n d}) = 2 cos(n d) e^{w n^2}
    const BigFloat c = ldexp2(cos(mul_int(d, n)), 1);
    sum += cexp(w.scaled_int(n * n)).scaled_real(c.rounded_to(prec));
  }
  const BigFloat inv_two_pi = BigFloat::of_int(1, wp) / ldexp2(BigFloat::pi(wp), 1);
  return sum.scaled_real(inv_two_pi);
}

double image_tail_bound(const CylinderKernelParams& params) {
  const ComplexHP w2 = image_exponent_coeff(params);
  const double c = -(w2.re().to_double() * (1.0 - 1e-12) + w2.err_bound());
  if (c <= 0) throw std::domain_error("image_kernel: nonpositive decay rate");
  const long prec = params.precision();
  const ComplexHP pref =
      principal_sqrt(ComplexHP::from_real(params.inertia) /
                     times_i(params.t).scaled_real(ldexp2(BigFloat::pi(prec), 1) * params.hbar));
  const double two_pi = 2.0 * std::numbers::pi;
  const double dmag = std::fabs((params.theta - params.theta0).to_double());
  const double y0 = two_pi * (static_cast<double>(params.truncation) + 1.0) - dmag;
  if (y0 <= 0) throw std::invalid_argument("image_kernel: truncation too small for the angle gap");
  const double ratio = std::exp(-c * two_pi * (2.0 * y0 + two_pi));
  double tail = 2.0 * std::exp(-c * y0 * y0) / (1.0 - ratio);
  if (!(tail > kTailFloor)) tail = kTailFloor;
  return tail * pref.abs_upper();
}

ComplexHP image_kernel(const CylinderKernelParams& params) {
  if (!(params.t.im().sign() < 0))
    throw std::domain_error(
        "image_kernel: Im(t) must be negative; at real times the series converges only in the "
        "distribution sense");
  const long prec = params.precision();
  const long wp = prec + kGuardBits;
  const ComplexHP w2 = image_exponent_coeff(params);
  // sqrt(I/(2 pi i hbar t)), principal branch
  const ComplexHP pref =
      principal_sqrt(ComplexHP::from_real(params.inertia) /
                     times_i(params.t).scaled_real(ldexp2(BigFloat::pi(prec), 1) * params.hbar));

  const BigFloat d = params.theta.rounded_to(wp) - params.theta0.rounded_to(wp);
  const BigFloat two_pi = ldexp2(BigFloat::pi(wp), 1);
  ComplexHP sum = ComplexHP::zero(prec);
  for (long n = -params.truncation; n <= params.truncation; ++n) {
    const BigFloat x = d - mul_int(two_pi, n);
    sum += cexp(w2.scaled_real((x * x).rounded_to(prec)));
  }
  return sum * pref;
}

std::vector<VerificationReport> regularized_ls_limit(long long q, long long p,
                                                     const std::vector<double>& eps_list,
                                                     long precision_bits) {
  if (q < 1 || p < 1) throw std::invalid_argument("regularized_ls_limit: p, q must be positive");
  if (eps_list.empty()) throw std::invalid_argument("regularized_ls_limit: empty eps list");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0))
      throw std::domain_error("regularized_ls_limit: eps must be positive (the limit point is singular)");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
      throw std::invalid_argument("regularized_ls_limit: eps list must be strictly decreasing");
  }
  const long prec = precision_bits;
  const double target = std::ldexp(1.0, static_cast<int>(16 - prec));

  const ComplexHP exact = gauss::quad_gauss_sum(q, p).evaluate(prec) /
                          ComplexHP::from_rounded_real(sqrt(BigFloat::of_int(p, prec + kGuardBits)));

  std::vector<VerificationReport> out;
  double prev_gap = 0.0;
  for (std::size_t k = 0; k < eps_list.size(); ++k) {
    const double eps = eps_list[k];
    const BigFloat im = BigFloat::ratio(2 * q, p, prec);
    const ComplexHP tau(BigFloat::of(eps, prec), im,
                        std::ldexp(2.0 * static_cast<double>(q) / static_cast<double>(p),
                                   static_cast<int>(1 - prec)));
    const ThetaParams left = ThetaParams::auto_truncated(tau, target);
    const ComplexHP theta_l = theta_truncated(left).with_extra_error(left.tail_bound);

    const ComplexHP sigma = ComplexHP::from_double(1.0, 0.0, prec) / tau;
    const ThetaParams right = ThetaParams::auto_truncated(sigma, target);
    const ComplexHP theta_r = theta_truncated(right).with_extra_error(right.tail_bound);
    const ComplexHP rhs_side = theta_r / principal_sqrt(tau);

    const BigFloat scale =
        sqrt(mul_int(BigFloat::of(eps, prec + kGuardBits), p));  // sqrt(p * eps)
    const ComplexHP normalized_lhs = theta_l.conj().scaled_real(scale);
    const ComplexHP normalized_rhs = rhs_side.conj().scaled_real(scale);

    const double gap = certified_distance(normalized_lhs, exact);
    const double gap_dual = certified_distance(normalized_rhs, exact);

    VerificationReport rep;
    rep.params = {{"q", std::to_string(q)},
                  {"p", std::to_string(p)},
                  {"eps", std::to_string(eps)},
                  {"m_lhs", std::to_string(left.truncation)},
                  {"m_rhs", std::to_string(right.truncation)},
                  {"gap_dual", std::to_string(gap_dual)},
                  {"jacobi_gap", std::to_string(certified_distance(normalized_lhs, normalized_rhs))}};
    rep.lhs = normalized_lhs;
    rep.rhs = exact;
    rep.abs_diff = gap;
    rep.tolerance = (k == 0) ? gap + 1.0 : prev_gap * (1.0 - 1e-9);
    rep.pass = rep.abs_diff <= rep.tolerance;
    out.push_back(std::move(rep));
    prev_gap = gap;
  }
  return out;
}

}  // namespace torusgauss::cylinder
