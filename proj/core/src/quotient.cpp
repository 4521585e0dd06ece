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

#include "merohecke/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "merohecke/errors.hpp"
#include "merohecke/forms.hpp"

namespace merohecke {

std::string to_string(QuotientKind kind) { return kind == QuotientKind::ModM ? "modM!" : "modS!"; }

QuotientKind parse_quotient_kind(std::string_view text) {
  if (text == "modM!" || text == "modM") return QuotientKind::ModM;
  if (text == "modS!" || text == "modS") return QuotientKind::ModS;
  throw ParseError("quotient kind must be modM! or modS!, got '" + std::string(text) + "'");
}

bool QuotientClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return sgn(x) == 0; });
}

PrincipalPart hecke_on_principal_part(const PrincipalPart& pp, int weight, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("hecke_on_principal_part: m must be positive");
  std::vector<std::pair<std::int64_t, Rational>> factors;
  Rational sigma_sum(0);
  for (std::int64_t r = 1; r <= m; ++r) {
    if (m % r != 0) continue;
    factors.emplace_back(r, rational_pow(Rational(r), weight - 1));
    sigma_sum += factors.back().second;
  }
  PrincipalPart out;
  const auto top = m * pp.max_pole();
  for (std::int64_t n = 1; n <= top; ++n) {
    Rational acc(0);
    for (const auto& [r, power] : factors) {
      if (n % r != 0) continue;
      const auto lambda = pp.get(m * n / (r * r));
      if (sgn(lambda) != 0) acc += power * lambda;
    }
    out.set(n, acc);
  }
  out.set_constant(sigma_sum * pp.constant());
  return out;
}

QuotientClass class_of(const PrincipalPart& pp, int two_k, QuotientKind kind) {
  const auto dual = kind == QuotientKind::ModM ? DualKind::Cusp : DualKind::Holomorphic;
  return {2 - two_k, kind, obstruction(2 - two_k, pp, dual)};
}

RationalMatrix quotient_hecke_matrix(int two_k, QuotientKind kind, std::int64_t m) {
  const auto space = kind == QuotientKind::ModM ? BasisKind::Cuspidal : BasisKind::Holomorphic;
  const auto d = static_cast<std::size_t>(dimension(two_k, space));
  RationalMatrix coords(d, d);
  RationalMatrix images(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    PrincipalPart basis_pp;
    basis_pp.set(static_cast<std::int64_t>(i + 1), Rational(1));
    const auto c = class_of(basis_pp, two_k, kind).coords;
    const auto y = class_of(hecke_on_principal_part(basis_pp, 2 - two_k, m), two_k, kind).coords;
    for (std::size_t r = 0; r < d; ++r) {
      coords(r, i) = c[r];
      images(r, i) = y[r];
    }
  }
  try {
    return solve(coords, images);
  } catch (const SingularMatrix&) {
    throw SingularCoordinateMatrix("classes of q^-1..q^-" + std::to_string(d) + " in weight " +
                                   std::to_string(2 - two_k) + " " + to_string(kind) +
                                   " are dependent");
  }
}

TheoremCheck theorem_check(int two_k, QuotientKind kind, std::int64_t m) {
  TheoremCheck out;
  const Rational scale_factor(integer_pow(Integer(static_cast<long>(m)),
                                          static_cast<std::uint64_t>(two_k - 1)));
  out.quotient_charpoly = charpoly(scale_factor * quotient_hecke_matrix(two_k, kind, m));
  out.space_charpoly = hecke_charpoly_on_space(
      two_k, kind == QuotientKind::ModM ? BasisKind::Cuspidal : BasisKind::Holomorphic, m);
  out.pass = out.quotient_charpoly == out.space_charpoly;
  return out;
}

SolveResult eigen_witness(int two_k, std::int64_t m, const Rational& lambda, QuotientKind kind,
                          std::int64_t precision) {
  const int weight = 2 - two_k;
  PrincipalPart seed;
  seed.set(1, Rational(1));
  const Rational normalized = lambda * rational_pow(Rational(m), 1 - two_k);
  const auto pp = hecke_on_principal_part(seed, weight, m) - normalized * seed;
  return solve_principal_part(weight, pp, kind == QuotientKind::ModS, precision);
}

}  // namespace merohecke
