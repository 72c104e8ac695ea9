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

#include "torusgauss/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace torusgauss {

namespace {
long clamp_prec(long bits) {
  return std::max<long>(bits, MPFR_PREC_MIN);
}
}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(v_, clamp_prec(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::of(double value, long precision_bits) {
  BigFloat r(precision_bits);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of_int(long long value, long precision_bits) {
  BigFloat r(precision_bits);
  mpfr_set_si(r.v_, static_cast<long>(value), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::ratio(long long num, long long den, long precision_bits) {
  if (den == 0) throw std::invalid_argument("BigFloat::ratio: zero denominator");
  BigFloat n = of_int(num, precision_bits + 2);
  BigFloat d = of_int(den, precision_bits + 2);
  BigFloat r(precision_bits);
  mpfr_div(r.v_, n.v_, d.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(long precision_bits) {
  BigFloat r(precision_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::rounded_to(long precision_bits) const {
  BigFloat r(precision_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int significant_digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Re", significant_digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {
long result_prec(const BigFloat& a, const BigFloat& b) {
  return std::min(a.precision(), b.precision());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(result_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(result_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(result_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(result_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& b) {
  mpfr_add(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& b) {
  mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt of negative BigFloat");
  BigFloat r(x.precision());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.v_, x.v_, MPFR_RNDN);
  return r;
}

void sin_cos(BigFloat& s, BigFloat& c, const BigFloat& x) {
  mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN);
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(result_prec(y, x));
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(result_prec(x, y));
  mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

BigFloat ldexp2(const BigFloat& x, long k) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.v_, x.v_, k, MPFR_RNDN);
  return r;
}

BigFloat mul_int(const BigFloat& x, long long k) {
  BigFloat r(x.precision());
  mpfr_mul_si(r.v_, x.v_, static_cast<long>(k), MPFR_RNDN);
  return r;
}

int decimal_digits_for_bits(long precision_bits) {
  return static_cast<int>(std::ceil(precision_bits * 0.30103)) + 4;
}

}  // namespace torusgauss
