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

#include "torusgauss/cyclosum.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace torusgauss {

void CycloSum::add_term(const PhaseRational& r, long long coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    terms_.emplace(r, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void CycloSum::add(const CycloSum& other) {
  for (const auto& [r, c] : other.terms_) add_term(r, c);
}

long long CycloSum::total_abs_coeff() const {
  __int128 total = 0;
  for (const auto& [r, c] : terms_) total += c < 0 ? -static_cast<__int128>(c) : c;
  if (total > 0x7fffffffffffffffLL) throw std::overflow_error("CycloSum: coefficient mass overflows");
  return static_cast<long long>(total);
}

mpz_class CycloSum::order() const {
  mpz_class l = 1;
  for (const auto& [r, c] : terms_) {
    mpz_class d(static_cast<long>(r.den()));
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

CycloSum CycloSum::conjugated() const {
  CycloSum out;
  for (const auto& [r, c] : terms_) out.add_term(r.negated(), c);
  return out;
}

ComplexHP CycloSum::evaluate(long precision_bits) const {
  if (precision_bits < kMinPrecisionBits)
    throw std::invalid_argument("CycloSum::evaluate: precision below 16 bits");
  const long wp = precision_bits + kGuardBits;
  const BigFloat two_pi = ldexp2(BigFloat::pi(wp), 1);
  BigFloat acc_re(wp), acc_im(wp);
  BigFloat s(wp), c(wp);
  for (const auto& [r, coeff] : terms_) {
    const BigFloat angle = BigFloat::ratio(r.num(), r.den(), wp) * two_pi;
    sin_cos(s, c, angle);
    acc_re += mul_int(c, coeff);
    acc_im += mul_int(s, coeff);
  }
  const double err =
      std::ldexp(static_cast<double>(total_abs_coeff()), static_cast<int>(2 - precision_bits));
  return ComplexHP(acc_re.rounded_to(precision_bits), acc_im.rounded_to(precision_bits), err);
}

}  // namespace torusgauss
