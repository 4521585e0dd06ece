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

#include "merohecke/hecke.hpp"

#include <numeric>
#include <stdexcept>

#include "merohecke/errors.hpp"

namespace merohecke {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

void require_positive(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("operator index must be positive");
}

}  // namespace

LaurentSeries v_op(const LaurentSeries& f, std::int64_t m) {
  require_positive(m);
  const auto precision = m * (f.precision() - 1) + 1;
  if (f.is_zero()) return LaurentSeries::zero(precision);
  const auto c = f.coefficients();
  std::vector<Rational> out(static_cast<std::size_t>(precision - m * f.valuation()));
  for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(m)] = c[i];
  return LaurentSeries(m * f.valuation(), std::move(out), precision);
}

LaurentSeries u_op(const LaurentSeries& f, std::int64_t m) {
  require_positive(m);
  const auto precision = ceil_div(f.precision(), m);
  const auto start = std::min(ceil_div(f.valuation(), m), precision);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(precision - start));
  for (auto n = start; n < precision; ++n) out.push_back(f.coefficient(m * n));
  return LaurentSeries(start, std::move(out), precision);
}

LaurentSeries t_op(const LaurentSeries& f, int weight, std::int64_t m) {
  require_positive(m);
  if (f.precision() < 0) {
    throw InsufficientPrecision("T_m needs the input known through q^0");
  }
  const auto end = ceil_div(f.precision(), m);
  if (f.is_zero()) return LaurentSeries::zero(end);
  const auto v = f.valuation();
  const auto start = v < 0 ? m * v : ceil_div(v, m);
  if (start >= end) {
    throw InsufficientPrecision("T_" + std::to_string(m) + " output window is empty for O(q^" +
                                std::to_string(f.precision()) + ")");
  }
  // r^(2kappa-1) for every divisor r of m.
  std::vector<std::pair<std::int64_t, Rational>> factors;
  for (std::int64_t r = 1; r <= m; ++r) {
    if (m % r == 0) factors.emplace_back(r, rational_pow(Rational(r), weight - 1));
  }
  std::vector<Rational> out(static_cast<std::size_t>(end - start));
  for (auto n = start; n < end; ++n) {
    Rational& acc = out[static_cast<std::size_t>(n - start)];
    for (const auto& [r, power] : factors) {
      if (n % r != 0) continue;
      const auto index = m * n / (r * r);
      if (index < v) continue;
      const auto& c = f.coefficients()[static_cast<std::size_t>(index - v)];
      if (sgn(c) != 0) acc += power * c;
    }
  }
  return LaurentSeries(start, std::move(out), end);
}

CommutationReport t_op_commutes_check(const LaurentSeries& f, int weight, std::int64_t m,
                                      std::int64_t n) {
  CommutationReport report;
  const auto mn = t_op(t_op(f, weight, n), weight, m);
  const auto nm = t_op(t_op(f, weight, m), weight, n);
  const auto cmp = equals_to_precision(mn, nm);
  report.commute = cmp.equal;
  report.window_end = cmp.window_end;
  if (std::gcd(m, n) == 1) {
    report.multiplicativity_checked = true;
    report.multiplicative = equals_to_precision(mn, t_op(f, weight, m * n)).equal;
  }
  return report;
}

}  // namespace merohecke
