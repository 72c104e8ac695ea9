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

#ifndef TORUSGAUSS_REPORT_HPP
#define TORUSGAUSS_REPORT_HPP

#include <map>
#include <optional>
#include <string>

#include "torusgauss/complex_hp.hpp"
#include "torusgauss/cyclosum.hpp"

namespace torusgauss {

/// Outcome of one identity check.  abs_diff is a certified upper bound on
/// the distance between the ideal left and right values:
///   abs_diff <= |lhs - rhs| + err_bound(lhs) + err_bound(rhs)
/// and pass == (abs_diff <= tolerance).
struct VerificationReport {
  std::map<std::string, std::string> params;
  ComplexHP lhs;
  ComplexHP rhs;
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<CycloSum> exact_lhs;
  std::optional<CycloSum> exact_rhs;
};

inline VerificationReport make_report(std::map<std::string, std::string> params, ComplexHP lhs,
                                      ComplexHP rhs, double tolerance) {
  VerificationReport rep;
  rep.params = std::move(params);
  rep.abs_diff = certified_distance(lhs, rhs);
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.tolerance = tolerance;
  rep.pass = rep.abs_diff <= tolerance;
  return rep;
}

}  // namespace torusgauss

#endif  // TORUSGAUSS_REPORT_HPP
