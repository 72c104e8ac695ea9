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

#include "torusgauss/complex_hp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace torusgauss {

namespace {

// Upward fudge for double bookkeeping of error bounds.
double up(double x) { return x * (1.0 + 1e-12); }

double rounding_term(double magnitude, long prec) {
  return std::ldexp(up(magnitude), static_cast<int>(1 - prec));
}

}  // namespace

ComplexHP::ComplexHP() : re_(kDefaultPrecisionBits), im_(kDefaultPrecisionBits), err_(0.0) {}

ComplexHP::ComplexHP(BigFloat real, BigFloat imag, double err_bound)
    : re_(std::move(real)), im_(std::move(imag)), err_(err_bound) {
  if (err_ < 0) throw std::invalid_argument("ComplexHP: negative error bound");
}

ComplexHP ComplexHP::zero(long precision_bits) {
  return ComplexHP(BigFloat(precision_bits), BigFloat(precision_bits), 0.0);
}

ComplexHP ComplexHP::from_double(double real, double imag, long precision_bits) {
  return ComplexHP(BigFloat::of(real, precision_bits), BigFloat::of(imag, precision_bits), 0.0);
}

ComplexHP ComplexHP::from_real(BigFloat real, double err_bound) {
  const long prec = real.precision();
  return ComplexHP(std::move(real), BigFloat(prec), err_bound);
}

ComplexHP ComplexHP::from_rounded_real(BigFloat real) {
  const long prec = real.precision();
  const double err = std::ldexp(up(std::fabs(real.to_double())), static_cast<int>(1 - prec));
  return from_real(std::move(real), err);
}

ComplexHP ComplexHP::imaginary_unit(long precision_bits) {
  return ComplexHP(BigFloat(precision_bits), BigFloat::of_int(1, precision_bits), 0.0);
}

ComplexHP ComplexHP::unit_phase(const PhaseRational& r, long precision_bits) {
  const long wp = precision_bits + kGuardBits;
  const BigFloat angle = BigFloat::ratio(r.num(), r.den(), wp) * ldexp2(BigFloat::pi(wp), 1);
  BigFloat c(wp), s(wp);
  sin_cos(s, c, angle);
  return ComplexHP(c.rounded_to(precision_bits), s.rounded_to(precision_bits),
                   std::ldexp(1.0, static_cast<int>(2 - precision_bits)));
}

long ComplexHP::precision() const { return std::min(re_.precision(), im_.precision()); }

ComplexHP ComplexHP::with_extra_error(double extra) const {
  if (extra < 0) throw std::invalid_argument("with_extra_error: negative increment");
  return ComplexHP(re_, im_, err_ + extra);
}

ComplexHP ComplexHP::conj() const { return ComplexHP(re_, -im_, err_); }

ComplexHP ComplexHP::negated() const { return ComplexHP(-re_, -im_, err_); }

BigFloat ComplexHP::abs() const { return hypot(re_, im_); }

double ComplexHP::abs_upper() const { return up(abs().to_double()) + err_; }

double ComplexHP::abs_lower() const {
  const double lo = abs().to_double() * (1.0 - 1e-12) - err_;
  return lo > 0 ? lo : 0.0;
}

ComplexHP operator+(const ComplexHP& a, const ComplexHP& b) {
  BigFloat re = a.re_ + b.re_;
  BigFloat im = a.im_ + b.im_;
  const long prec = std::min(a.precision(), b.precision());
  const double mag = up(hypot(re, im).to_double());
  return ComplexHP(std::move(re), std::move(im), a.err_ + b.err_ + rounding_term(mag, prec));
}

ComplexHP operator-(const ComplexHP& a, const ComplexHP& b) {
  BigFloat re = a.re_ - b.re_;
  BigFloat im = a.im_ - b.im_;
  const long prec = std::min(a.precision(), b.precision());
  const double mag = up(hypot(re, im).to_double());
  return ComplexHP(std::move(re), std::move(im), a.err_ + b.err_ + rounding_term(mag, prec));
}

ComplexHP& ComplexHP::operator+=(const ComplexHP& b) {
  *this = *this + b;
  return *this;
}

ComplexHP operator*(const ComplexHP& a, const ComplexHP& b) {
  const long prec = std::min(a.precision(), b.precision());
  const long wp = prec + kGuardBits;
  const BigFloat ar = a.re_.rounded_to(wp), ai = a.im_.rounded_to(wp);
  const BigFloat br = b.re_.rounded_to(wp), bi = b.im_.rounded_to(wp);
  BigFloat re = (ar * br - ai * bi).rounded_to(prec);
  BigFloat im = (ar * bi + ai * br).rounded_to(prec);
  const double ma = a.abs_upper(), mb = b.abs_upper();
  const double err = ma * b.err_ + mb * a.err_ + a.err_ * b.err_ + rounding_term(ma * mb, prec);
  return ComplexHP(std::move(re), std::move(im), err);
}

ComplexHP operator/(const ComplexHP& a, const ComplexHP& b) {
  const double blo = b.abs_lower();
  if (blo <= 0.0)
    throw PrecisionExhaustedError("complex division: divisor indistinguishable from 0 (precision exhausted)");
  const long prec = std::min(a.precision(), b.precision());
  const long wp = prec + kGuardBits;
  const BigFloat ar = a.re_.rounded_to(wp), ai = a.im_.rounded_to(wp);
  const BigFloat br = b.re_.rounded_to(wp), bi = b.im_.rounded_to(wp);
  const BigFloat den = br * br + bi * bi;
  BigFloat re = ((ar * br + ai * bi) / den).rounded_to(prec);
  BigFloat im = ((ai * br - ar * bi) / den).rounded_to(prec);
  // |a/b - a~/b~| <= err(a)/|b~| + |a~| err(b) / (|b||b~|)
  const double ma = a.abs_upper();
  const double err = a.err_ / blo + ma * b.err_ / (blo * blo) + rounding_term(ma / blo, prec);
  return ComplexHP(std::move(re), std::move(im), err);
}

ComplexHP ComplexHP::scaled_int(long long k) const {
  BigFloat re = mul_int(re_, k);
  BigFloat im = mul_int(im_, k);
  const double ak = std::abs(static_cast<double>(k));
  return ComplexHP(std::move(re), std::move(im), up(err_ * ak) + rounding_term(abs_upper() * ak, precision()));
}

ComplexHP ComplexHP::scaled_real(const BigFloat& x) const {
  const long prec = std::min(precision(), x.precision());
  const long wp = prec + kGuardBits;
  BigFloat re = (re_.rounded_to(wp) * x).rounded_to(prec);
  BigFloat im = (im_.rounded_to(wp) * x).rounded_to(prec);
  const double ax = up(std::fabs(x.to_double()));
  // x carries its own half-ulp rounding; covered by the rounding term below.
  const double err = err_ * ax + rounding_term(abs_upper() * ax * 2.0, prec);
  return ComplexHP(std::move(re), std::move(im), err);
}

std::string ComplexHP::to_string() const {
  const int d = decimal_digits_for_bits(precision());
  return "(" + re_.to_string(d) + ", " + im_.to_string(d) + ") +/- " + std::to_string(err_);
}

ComplexHP principal_sqrt(const ComplexHP& z) {
  const double zlo = z.abs_lower();
  if (zlo <= 0.0)
    throw PrecisionExhaustedError("principal_sqrt: argument indistinguishable from 0 (precision exhausted)");
  const long prec = z.precision();
  const long wp = prec + kGuardBits;
  const BigFloat re = z.re().rounded_to(wp), im = z.im().rounded_to(wp);
  const BigFloat mag = hypot(re, im);
  BigFloat out_re(wp), out_im(wp);
  if (re.sign() >= 0) {
    // w = sqrt((|z|+re)/2), result = (w, im/(2w))
    out_re = sqrt(ldexp2(mag + re, -1));
    out_im = ldexp2(im / out_re, -1);
  } else {
    // v = sqrt((|z|-re)/2) > 0; result = (|im|/(2v), sign(im) v); for im = 0
    // (negative real z) this lands on the +i*sqrt(|z|) branch edge.
    const BigFloat v = sqrt(ldexp2(mag - re, -1));
    out_re = ldexp2(abs(im) / v, -1);
    out_im = (im.sign() < 0) ? -v : v;
  }
  // First-order: d(sqrt z) = dz / (2 sqrt z), |sqrt z| >= sqrt(zlo).
  const double err = z.err_bound() / (2.0 * std::sqrt(zlo)) +
                     rounding_term(std::sqrt(z.abs_upper()) * 2.0, prec);
  return ComplexHP(out_re.rounded_to(prec), out_im.rounded_to(prec), err);
}

ComplexHP cexp(const ComplexHP& z) {
  const long prec = z.precision();
  const long wp = prec + kGuardBits;
  const BigFloat x = z.re().rounded_to(wp), y = z.im().rounded_to(wp);
  const BigFloat r = exp(x);
  BigFloat c(wp), s(wp);
  sin_cos(s, c, y);
  BigFloat out_re = (r * c).rounded_to(prec);
  BigFloat out_im = (r * s).rounded_to(prec);
  // |exp(z) - exp(z~)| <= |exp(z)| (e^|dz| - 1) <= mag * err * e^err
  const double mag = up(std::exp(std::min(700.0, z.re().to_double() + z.err_bound())));
  const double e = z.err_bound();
  const double err = mag * e * (e < 1.0 ? 2.72 : std::exp(e)) + rounding_term(mag * 2.0, prec);
  return ComplexHP(std::move(out_re), std::move(out_im), err);
}

BigFloat distance(const ComplexHP& a, const ComplexHP& b) {
  return hypot(a.re() - b.re(), a.im() - b.im());
}

double certified_distance(const ComplexHP& a, const ComplexHP& b) {
  return up(distance(a, b).to_double()) + a.err_bound() + b.err_bound();
}

}  // namespace torusgauss
