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

#ifndef TORUSGAUSS_ERRORS_HPP
#define TORUSGAUSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torusgauss {

/// A value is indistinguishable from a singular point (usually 0) at the
/// current working precision, so the requested operation cannot proceed.
struct PrecisionExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A path enumeration would exceed the configured budget.  The message and
/// the `required` field name the number of paths that would be needed.
struct EnumerationBudgetError : std::runtime_error {
  EnumerationBudgetError(const std::string& what, unsigned long long required_paths)
      : std::runtime_error(what), required(required_paths) {}
  unsigned long long required;
};

}  // namespace torusgauss

#endif  // TORUSGAUSS_ERRORS_HPP
