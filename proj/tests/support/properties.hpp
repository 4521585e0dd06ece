// Copyright 2026 The merohecke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEROHECKE_TESTS_PROPERTIES_HPP
#define MEROHECKE_TESTS_PROPERTIES_HPP

// Randomized property suites shared by the unit tests and the acceptance run.

#include <cstdint>
#include <string>

namespace props {

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return cases > 0 && failures == 0; }
  std::string summary() const;
};

// T_m T_n = T_n T_m, and = T_mn for coprime m, n; T_m also checked against
// the sparse oracle.
Outcome hecke_multiplicativity(std::uint64_t seed, int cases = 200);

// Constant term of f*g is 0 for f in a weakly holomorphic slice of weight w
// and g in M_{2-w}.
Outcome duality_constant_term(std::uint64_t seed, int cases = 40);

// class zero <=> solver succeeds; solutions carry the requested principal
// part; a unit perturbation of a pole coefficient is detected.
Outcome solver_round_trips(std::uint64_t seed, int cases = 500);

// Coefficients inside each declared window are independent of whatever lies
// beyond the input precision (mul, invert, t_op, u_op, v_op, d_power).
Outcome precision_soundness(std::uint64_t seed, int cases = 300);

// Associativity, commutativity, distributivity on declared windows; a*inv(a) = 1.
Outcome ring_axioms(std::uint64_t seed, int cases = 200);

}  // namespace props

#endif  // MEROHECKE_TESTS_PROPERTIES_HPP
