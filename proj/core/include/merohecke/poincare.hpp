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

#ifndef MEROHECKE_POINCARE_HPP
#define MEROHECKE_POINCARE_HPP

#include <cstdint>
#include <string>

#include "merohecke/numeval.hpp"

namespace merohecke {

// Seed (z - conj(zz))^(-2k) ((z - zz)/(z - conj(zz)))^ell, averaged over SL2(Z) in weight 2k.
struct PoincareSeed {
  int k = 2;
  int ell = 0;
  HPoint zz;
};

// Half the order of the stabilizer of zz in SL2(Z): 2 for orbits of i, 3 for orbits of rho, else 1.
int elliptic_order(const HPoint& zz);

struct PsiResult {
  Complex value;
  Complex half_bound_value;  // same sum truncated at B/2
  double tail_estimate = 0.0;
  bool vanishing = false;
  std::string note;
  std::int64_t bound = 0;
  std::int64_t terms = 0;
};

// Truncated sum over coprime (c,d) with max(|c|,|d|) <= B and translates |t| <= B.
// threads = 0 picks the hardware concurrency.
PsiResult psi_truncated(const PoincareSeed& seed, const HPoint& z, std::int64_t bound, unsigned bits,
                        unsigned threads = 0);

struct PsiTwoVariableReport {
  std::int64_t n = 1;
  Complex lhs;
  Complex rhs;
  double relative_difference = 0.0;
  double tail = 0.0;  // largest tail estimate among the summed Poincare values
};

// Hecke operator T_n applied in z, against the sum over the Hecke images of the pole zz.
PsiTwoVariableReport psi_two_variable_check(int k, int ell, const HPoint& zz, const HPoint& z,
                                            std::int64_t n, std::int64_t bound, unsigned bits,
                                            unsigned threads = 0);

}  // namespace merohecke

#endif  // MEROHECKE_POINCARE_HPP
