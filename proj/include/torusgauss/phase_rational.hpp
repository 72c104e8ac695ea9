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

#ifndef TORUSGAUSS_PHASE_RATIONAL_HPP
#define TORUSGAUSS_PHASE_RATIONAL_HPP

namespace torusgauss {

/// Reduced rational r in [0, 1) standing for the unit phase exp(2*pi*i*r).
/// Addition mod 1 of exponents is multiplication of phases.  Canonical form:
/// 0 <= num < den, gcd(num, den) = 1, den >= 1.
class PhaseRational {
 public:
  PhaseRational() : num_(0), den_(1) {}
  // Accepts any integer pair, reduces mod 1 into canonical form.
  PhaseRational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  // (-r) mod 1, the exponent of the conjugate phase.
  PhaseRational negated() const;

  friend bool operator==(const PhaseRational& a, const PhaseRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const PhaseRational& a, const PhaseRational& b) { return !(a == b); }
  // Value order (both sides are in [0,1), cross-multiplication is exact).
  friend bool operator<(const PhaseRational& a, const PhaseRational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  long long num_;
  long long den_;
};

// (a + b) mod 1 in canonical reduced form; total on canonical inputs.
PhaseRational phase_add(const PhaseRational& a, const PhaseRational& b);

}  // namespace torusgauss

#endif  // TORUSGAUSS_PHASE_RATIONAL_HPP
