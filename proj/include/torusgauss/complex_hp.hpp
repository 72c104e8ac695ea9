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

#ifndef TORUSGAUSS_COMPLEX_HP_HPP
#define TORUSGAUSS_COMPLEX_HP_HPP

#include <string>

#include "torusgauss/bigfloat.hpp"
#include "torusgauss/errors.hpp"
#include "torusgauss/phase_rational.hpp"

namespace torusgauss {

/// Arbitrary-precision complex value carrying an a-priori error bound.
///
/// err_bound() bounds |stored - ideal| in the complex norm and composes as
///   a + b : err(a) + err(b)                          (+ final rounding)
///   a * b : |a| err(b) + |b| err(a) + err(a) err(b)  (+ final rounding)
/// where the final-rounding term is |result| * 2^(1-precision).  Division,
/// square root and exponential propagate first-order bounds with a lower
/// bound on the denominator magnitude; when an operand cannot be separated
/// from a singular point within its error bound the operation throws
/// PrecisionExhaustedError.
class ComplexHP {
 public:
  ComplexHP();  // zero at default precision
  ComplexHP(BigFloat real, BigFloat imag, double err_bound = 0.0);

  static ComplexHP zero(long precision_bits);
  static ComplexHP from_double(double real, double imag, long precision_bits = kDefaultPrecisionBits);
  static ComplexHP from_real(BigFloat real, double err_bound = 0.0);
  // Real value that is itself correctly rounded at its own precision: the
  // error bound is set to one ulp.
  static ComplexHP from_rounded_real(BigFloat real);
  static ComplexHP imaginary_unit(long precision_bits);
  // exp(2*pi*i*r), evaluated with guard bits; error bound 2^(2-precision).
  static ComplexHP unit_phase(const PhaseRational& r, long precision_bits);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  long precision() const;
  double err_bound() const { return err_; }

  // Widen the error bound (used to fold in series-truncation tails).
  ComplexHP with_extra_error(double extra) const;

  ComplexHP conj() const;
  ComplexHP negated() const;
  BigFloat abs() const;
  // double bounds on |z| including the error bound
  double abs_upper() const;
  double abs_lower() const;

  friend ComplexHP operator+(const ComplexHP& a, const ComplexHP& b);
  friend ComplexHP operator-(const ComplexHP& a, const ComplexHP& b);
  friend ComplexHP operator*(const ComplexHP& a, const ComplexHP& b);
  friend ComplexHP operator/(const ComplexHP& a, const ComplexHP& b);
  ComplexHP& operator+=(const ComplexHP& b);

  // Scale by an exact machine integer / a real with its own rounding error.
  ComplexHP scaled_int(long long k) const;
  ComplexHP scaled_real(const BigFloat& x) const;

  std::string to_string() const;  // diagnostic form "(re, im) +/- err"

 private:
  BigFloat re_, im_;
  double err_;
};

/// Principal square root: result argument in (-pi/2, pi/2]; result^2 = z
/// within the propagated bound.  Throws PrecisionExhaustedError if z is
/// indistinguishable from 0.
ComplexHP principal_sqrt(const ComplexHP& z);

/// Complex exponential exp(z).
ComplexHP cexp(const ComplexHP& z);

/// |a - b| as a BigFloat at the smaller operand precision.
BigFloat distance(const ComplexHP& a, const ComplexHP& b);

/// |a - b| + err(a) + err(b), rounded upward: a certified upper bound on the
/// distance between the ideal values.
double certified_distance(const ComplexHP& a, const ComplexHP& b);

}  // namespace torusgauss

#endif  // TORUSGAUSS_COMPLEX_HP_HPP
