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

#include "merohecke/whbasis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "memo.hpp"
#include "merohecke/errors.hpp"

namespace merohecke {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

void PrincipalPart::set(std::int64_t r, const Rational& value) {
  if (r < 1) throw std::invalid_argument("principal part index must be >= 1");
  if (sgn(value) == 0) {
    negative_.erase(r);
  } else {
    negative_[r] = value;
  }
}

Rational PrincipalPart::get(std::int64_t r) const {
  const auto it = negative_.find(r);
  return it == negative_.end() ? Rational(0) : it->second;
}

PrincipalPart PrincipalPart::of(const LaurentSeries& f) {
  PrincipalPart pp;
  for (auto n = f.valuation(); n < 0; ++n) pp.set(-n, f.coefficient(n));
  pp.set_constant(f.coefficient(0));
  return pp;
}

PrincipalPart PrincipalPart::parse(std::string_view text) {
  PrincipalPart pp;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto item = trim(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) {
      if (comma == text.size()) break;
      throw ParseError("principal part: empty entry");
    }
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("principal part: expected r:coeff in '" + item + "'");
    const auto index_text = trim(std::string_view(item).substr(0, colon));
    std::int64_t r = 0;
    try {
      std::size_t used = 0;
      r = std::stoll(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("principal part: bad index '" + index_text + "'");
    }
    if (r < 0) throw ParseError("principal part: index must be >= 0");
    const auto value = parse_rational(trim(std::string_view(item).substr(colon + 1)));
    if (r == 0) {
      pp.set_constant(pp.constant() + value);
    } else {
      pp.set(r, pp.get(r) + value);
    }
  }
  return pp;
}

PrincipalPart operator+(const PrincipalPart& a, const PrincipalPart& b) {
  PrincipalPart out = a;
  for (const auto& [r, v] : b.negative()) out.set(r, out.get(r) + v);
  out.set_constant(a.constant() + b.constant());
  return out;
}

PrincipalPart operator*(const Rational& c, const PrincipalPart& a) {
  PrincipalPart out;
  for (const auto& [r, v] : a.negative()) out.set(r, c * v);
  out.set_constant(c * a.constant());
  return out;
}

PrincipalPart operator-(const PrincipalPart& a, const PrincipalPart& b) {
  return a + Rational(-1) * b;
}

std::string to_string(const PrincipalPart& pp) {
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (auto it = pp.negative().rbegin(); it != pp.negative().rend(); ++it) {
    terms.emplace_back(-it->first, it->second);
  }
  if (sgn(pp.constant()) != 0) terms.emplace_back(0, pp.constant());
  if (terms.empty()) return "0";
  std::vector<Rational> dense(static_cast<std::size_t>(1 - terms.front().first));
  for (const auto& [e, v] : terms) dense[static_cast<std::size_t>(e - terms.front().first)] = v;
  auto text = to_string(LaurentSeries(terms.front().first, std::move(dense), 1));
  return text.substr(0, text.rfind(" + O(q^"));
}

namespace {

FormBasis build_slice(int weight, std::int64_t max_pole, std::int64_t precision) {
  if (weight % 2 != 0) throw std::invalid_argument("wh_slice_basis: weight must be even");
  if (max_pole < 0) throw std::invalid_argument("wh_slice_basis: max_pole must be >= 0");
  FormBasis out;
  out.weight = weight;
  out.kind = BasisKind::WeaklyHolomorphic;
  const auto lifted = weight + 12 * max_pole;
  if (lifted < 0) return out;

  // Delta^{-a} on O(q^Q) has precision Q - a - 1; products with M_{w+12a}
  // known to O(q^{P+a}) land at O(q^P).
  const auto a = max_pole;
  const auto holomorphic =
      basis(static_cast<int>(lifted), BasisKind::Holomorphic, std::max(precision + a, a + 2));
  LaurentSeries inv_delta_a = LaurentSeries::constant(Rational(1), precision + a + 1);
  if (a > 0) inv_delta_a = invert(pow(delta(precision + a + 1).series, a));

  std::vector<LaurentSeries> rows;
  for (const auto& element : holomorphic.elements) {
    rows.push_back(truncate(mul(inv_delta_a, element.series), precision));
  }
  for (auto& s : reduced_echelon_form(std::move(rows))) {
    out.elements.push_back({weight, std::move(s)});
  }
  return out;
}

}  // namespace

FormBasis wh_slice_basis(int weight, std::int64_t max_pole, std::int64_t precision) {
  static detail::BasisMemo<std::pair<int, std::int64_t>, FormBasis> memo;
  return memo.get({weight, max_pole}, precision,
                  [&](std::int64_t p) { return build_slice(weight, max_pole, p); });
}

std::vector<Rational> obstruction(int weight, const PrincipalPart& pp, DualKind dual) {
  const int dual_weight = 2 - weight;
  const auto kind = dual == DualKind::Cusp ? BasisKind::Cuspidal : BasisKind::Holomorphic;
  const auto dim = dimension(dual_weight, kind);
  if (dim == 0) return {};
  const auto g = basis(dual_weight, kind, std::max<std::int64_t>(pp.max_pole() + 1, dim + 2));
  std::vector<Rational> out;
  out.reserve(g.size());
  for (const auto& element : g.elements) {
    Rational pairing = pp.constant() * element.series.coefficient(0);
    for (const auto& [r, lambda] : pp.negative()) pairing += lambda * element.series.coefficient(r);
    out.push_back(std::move(pairing));
  }
  return out;
}

SolveResult solve_principal_part(int weight, const PrincipalPart& pp, bool in_s_shriek,
                                 std::int64_t precision, std::optional<std::int64_t> max_pole) {
  if (weight % 2 != 0) throw std::invalid_argument("solve_principal_part: weight must be even");
  if (weight >= 2) {
    throw NonUniqueSolution("M^!_" + std::to_string(weight) +
                            " contains holomorphic forms; principal parts do not pin a solution");
  }
  PrincipalPart target = pp;
  const bool constant_pinned = in_s_shriek || weight == 0;
  if (in_s_shriek) target.set_constant(Rational(0));

  const auto dual = in_s_shriek ? DualKind::Holomorphic : DualKind::Cusp;
  auto pairing = obstruction(weight, target, dual);
  if (std::any_of(pairing.begin(), pairing.end(), [](const Rational& x) { return sgn(x) != 0; })) {
    return ObstructionWitness{std::move(pairing)};
  }

  const auto pole =
      max_pole.value_or(pp.max_pole() + dimension(2 - weight, BasisKind::Cuspidal));
  if (pole < pp.max_pole()) {
    throw std::invalid_argument("solve_principal_part: max_pole below the requested pole order");
  }
  if (precision <= 0) throw InsufficientPrecision("solve_principal_part needs precision > 0");
  const auto slice = wh_slice_basis(weight, pole, precision);

  LaurentSeries f = LaurentSeries::zero(precision);
  for (const auto& element : slice.elements) {
    const auto e = element.series.valuation();
    if (e > 0) break;
    Rational want(0);
    if (e < 0) {
      want = target.get(-e);
    } else if (constant_pinned) {
      want = target.constant();
    } else {
      continue;
    }
    if (sgn(want) != 0) f = add(f, scale(element.series, want));
  }

  auto got = PrincipalPart::of(f);
  if (!constant_pinned) got.set_constant(target.constant());
  if (!(got == target)) {
    throw Error("solve_principal_part: unobstructed principal part " + to_string(target) +
                " not reached by the pole-order " + std::to_string(pole) + " slice");
  }
  return ModularFormSeries{weight, std::move(f)};
}

Polynomial j_polynomial_decompose(const ModularFormSeries& f, const ModularFormSeries& seed) {
  LaurentSeries residual = div(f.series, seed.series);
  if (residual.is_zero()) return Polynomial();
  const auto degree = std::max<std::int64_t>(-residual.valuation(), 0);
  const auto j = j_function(residual.precision() + degree + 1).series;
  std::vector<LaurentSeries> powers{LaurentSeries::constant(Rational(1), j.precision() + 1)};
  for (std::int64_t e = 1; e <= degree; ++e) powers.push_back(mul(powers.back(), j));

  std::vector<Rational> q(static_cast<std::size_t>(degree + 1));
  while (!residual.is_zero() && residual.valuation() <= 0) {
    const auto e = -residual.valuation();
    const Rational c = residual.leading_coefficient();
    q[static_cast<std::size_t>(e)] = c;
    residual = subtract(residual, scale(powers[static_cast<std::size_t>(e)], c));
  }
  if (!residual.is_zero()) {
    throw NotPolynomialInJ("residual " + to_string(residual, 3) +
                           " left after removing a polynomial in j");
  }
  return Polynomial(std::move(q));
}

BolMembership bol_image_membership(const ModularFormSeries& h, int k, bool in_s_shriek) {
  if (h.weight != 2 * k) throw std::invalid_argument("bol_image_membership: h must have weight 2k");
  if (h.series.precision() <= 0) throw InsufficientPrecision("h must be known through q^0");
  if (sgn(h.series.coefficient(0)) != 0) {
    throw std::invalid_argument("bol_image_membership: h must have zero constant term");
  }
  const auto power = static_cast<unsigned>(2 * k - 1);
  PrincipalPart pp;
  for (auto n = h.series.valuation(); n < 0; ++n) {
    pp.set(-n, h.series.coefficient(n) / rational_pow(Rational(n), power));
  }

  BolMembership report;
  auto solved = solve_principal_part(2 - 2 * k, pp, in_s_shriek, h.series.precision());
  if (auto* witness = std::get_if<ObstructionWitness>(&solved)) {
    report.obstruction = std::move(witness->pairing);
    return report;
  }
  auto F = std::get<ModularFormSeries>(std::move(solved));
  const auto cmp = equals_to_precision(d_power(F.series, power), h.series);
  report.window_begin = cmp.window_begin;
  report.window_end = cmp.window_end;
  report.first_mismatch = cmp.first_mismatch;
  report.member = cmp.equal;
  report.witness = std::move(F);
  return report;
}

}  // namespace merohecke
