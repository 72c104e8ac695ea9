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

#ifndef TORUSGAUSS_CYCLOSUM_HPP
#define TORUSGAUSS_CYCLOSUM_HPP

#include <gmpxx.h>

#include <map>

#include "torusgauss/complex_hp.hpp"
#include "torusgauss/phase_rational.hpp"

namespace torusgauss {

/// Exact finite sum  sum_j  c_j * exp(2*pi*i*r_j)  with integer coefficients
/// c_j keyed by canonical PhaseRational exponents r_j.  Zero coefficients are
/// never stored, so two sums are equal as values iff they are equal as maps.
/// All phase accumulation in this project goes through a CycloSum first and
/// is evaluated numerically exactly once.
class CycloSum {
 public:
  CycloSum() = default;

  void add_term(const PhaseRational& r, long long coeff);
  void add(const CycloSum& other);

  const std::map<PhaseRational, long long>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  long long total_abs_coeff() const;
  // lcm of the denominators of all stored exponents (1 for the empty sum)
  mpz_class order() const;

  // Sum with every exponent negated: the complex conjugate value.
  CycloSum conjugated() const;

  bool operator==(const CycloSum& other) const { return terms_ == other.terms_; }
  bool operator!=(const CycloSum& other) const { return !(*this == other); }

  /// Evaluate at the given precision (>= kMinPrecisionBits, else
  /// std::invalid_argument).  Accumulates with guard bits and rounds once;
  /// the reported err_bound is  total_abs_coeff * 2^(2-bits),  which is at
  /// most  term_count * total_abs_coeff * 2^(3-bits).
  ComplexHP evaluate(long precision_bits) const;

 private:
  std::map<PhaseRational, long long> terms_;
};

inline ComplexHP cyclosum_eval(const CycloSum& s, long precision_bits) {
  return s.evaluate(precision_bits);
}

}  // namespace torusgauss

#endif  // TORUSGAUSS_CYCLOSUM_HPP
