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

#ifndef TORUSGAUSS_TESTING_UTIL_HPP
#define TORUSGAUSS_TESTING_UTIL_HPP

#include <cmath>
#include <cstdint>

#include "torusgauss/complex_hp.hpp"

namespace tgtest {

// |z - (re + i im)| <= tol, measured in double precision
inline bool close_to(const torusgauss::ComplexHP& z, double re, double im, double tol = 1e-60) {
  return std::hypot(z.re().to_double() - re, z.im().to_double() - im) <= tol;
}

inline double gap(const torusgauss::ComplexHP& a, const torusgauss::ComplexHP& b) {
  return torusgauss::certified_distance(a, b);
}

// deterministic cross-platform generator for property sweeps
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  long long below(long long n) { return static_cast<long long>(next() % static_cast<std::uint64_t>(n)); }
};

}  // namespace tgtest

#endif  // TORUSGAUSS_TESTING_UTIL_HPP
