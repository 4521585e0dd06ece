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

#ifndef MEROHECKE_HECKE_HPP
#define MEROHECKE_HECKE_HPP

#include <cstdint>

#include "merohecke/laurent_series.hpp"

namespace merohecke {

// f(z) | V_m = f(mz). Valuation m*v, precision m*(P-1)+1.
LaurentSeries v_op(const LaurentSeries& f, std::int64_t m);

// f | U_m: coefficient n is c(mn). Precision ceil(P/m).
LaurentSeries u_op(const LaurentSeries& f, std::int64_t m);

// Weight-2kappa Hecke operator: coefficient n is
//   sum_{r | gcd(m, n)} r^(2kappa - 1) c(mn / r^2),   gcd(m, 0) := m,
// on the window [m*v if v < 0 else ceil(v/m), ceil(P/m)).
// Throws InsufficientPrecision when that window is empty.
LaurentSeries t_op(const LaurentSeries& f, int weight, std::int64_t m);

struct CommutationReport {
  bool commute = false;          // T_m T_n f == T_n T_m f on the common window
  bool multiplicative = true;    // T_m T_n f == T_mn f (only checked for coprime m, n)
  bool multiplicativity_checked = false;
  std::int64_t window_end = 0;

  bool ok() const { return commute && multiplicative; }
};

CommutationReport t_op_commutes_check(const LaurentSeries& f, int weight, std::int64_t m,
                                      std::int64_t n);

}  // namespace merohecke

#endif  // MEROHECKE_HECKE_HPP
