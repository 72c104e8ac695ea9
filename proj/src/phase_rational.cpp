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

#include "torusgauss/phase_rational.hpp"

#include <numeric>
#include <stdexcept>

namespace torusgauss {

PhaseRational::PhaseRational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("PhaseRational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const long long g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

PhaseRational PhaseRational::negated() const {
  if (num_ == 0) return PhaseRational();
  return PhaseRational(den_ - num_, den_);
}

PhaseRational phase_add(const PhaseRational& a, const PhaseRational& b) {
  const long long g = std::gcd(a.den(), b.den());
  const __int128 lcm = static_cast<__int128>(a.den() / g) * b.den();
  if (lcm > static_cast<__int128>(0x7fffffffffffffffLL))
    throw std::overflow_error("phase_add: common denominator overflows 64 bits");
  const long long l = static_cast<long long>(lcm);
  const __int128 n =
      static_cast<__int128>(a.num()) * (l / a.den()) + static_cast<__int128>(b.num()) * (l / b.den());
  return PhaseRational(static_cast<long long>(n % l), l);
}

}  // namespace torusgauss
