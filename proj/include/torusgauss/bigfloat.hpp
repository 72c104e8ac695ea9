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

#ifndef TORUSGAUSS_BIGFLOAT_HPP
#define TORUSGAUSS_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

namespace torusgauss {

inline constexpr long kDefaultPrecisionBits = 256;
inline constexpr long kMinPrecisionBits = 16;
// Internal guard bits used so that a value rounded back to its nominal
// precision is correct to within one final rounding.
inline constexpr long kGuardBits = 32;

/// Arbitrary-precision real backed by MPFR, round-to-nearest throughout.
/// Binary operations produce a result at the smaller operand precision.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = kDefaultPrecisionBits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat of(double value, long precision_bits);
  static BigFloat of_int(long long value, long precision_bits);
  // num/den rounded once at the requested precision
  static BigFloat ratio(long long num, long long den, long precision_bits);
  static BigFloat pi(long precision_bits);

  long precision() const { return mpfr_get_prec(v_); }
  // Copy rounded to a (usually lower) precision.
  BigFloat rounded_to(long precision_bits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int significant_digits) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& b);
  BigFloat& operator-=(const BigFloat& b);

  friend int compare(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);   // domain error for x < 0
  friend BigFloat exp(const BigFloat& x);
  friend BigFloat log(const BigFloat& x);
  friend BigFloat cos(const BigFloat& x);
  friend BigFloat sin(const BigFloat& x);
  friend void sin_cos(BigFloat& s, BigFloat& c, const BigFloat& x);
  friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
  friend BigFloat hypot(const BigFloat& x, const BigFloat& y);
  friend BigFloat ldexp2(const BigFloat& x, long k);  // x * 2^k, exact

  // Scale by a machine integer (single rounding).
  friend BigFloat mul_int(const BigFloat& x, long long k);

 private:
  mpfr_t v_;
};

// Decimal digits that round-trip the given binary precision.
int decimal_digits_for_bits(long precision_bits);

}  // namespace torusgauss

#endif  // TORUSGAUSS_BIGFLOAT_HPP
