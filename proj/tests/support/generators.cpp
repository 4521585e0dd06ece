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

#include "generators.hpp"

namespace gen {

using merohecke::LaurentSeries;
using merohecke::Rational;

Rational Source::rational(std::int64_t num_bound, std::int64_t den_bound) {
  Rational r(integer(-num_bound, num_bound), integer(1, den_bound));
  r.canonicalize();
  return r;
}

Rational Source::nonzero_rational(std::int64_t num_bound, std::int64_t den_bound) {
  Rational r;
  do {
    r = rational(num_bound, den_bound);
  } while (r == 0);
  return r;
}

LaurentSeries Source::series(std::int64_t vlo, std::int64_t vhi, std::int64_t max_len) {
  const auto v = integer(vlo, vhi);
  const auto len = integer(1, max_len);
  std::vector<Rational> c(static_cast<std::size_t>(len));
  c[0] = nonzero_rational();
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = coin(0.2) ? Rational(0) : rational();
  return LaurentSeries(v, std::move(c));
}

LaurentSeries Source::integer_series(std::int64_t vlo, std::int64_t vhi, std::int64_t min_len,
                                     std::int64_t max_len) {
  const auto v = integer(vlo, vhi);
  const auto len = integer(min_len, max_len);
  std::vector<Rational> c(static_cast<std::size_t>(len));
  do {
    c[0] = integer(-20, 20);
  } while (c[0] == 0);
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = integer(-1000, 1000);
  return LaurentSeries(v, std::move(c));
}

merohecke::PrincipalPart Source::principal_part(std::int64_t max_pole, bool with_constant) {
  merohecke::PrincipalPart pp;
  const auto top = integer(1, max_pole);
  pp.set(top, nonzero_rational());
  for (std::int64_t r = 1; r < top; ++r) {
    if (coin(0.5)) pp.set(r, rational());
  }
  if (with_constant) pp.set_constant(rational());
  return pp;
}

}  // namespace gen
