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

#include "merohecke/forms.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "merohecke/errors.hpp"
#include "merohecke/hecke.hpp"
#include "memo.hpp"

namespace merohecke {

namespace {

// Keyed by weight; 0 stands for Delta.
detail::SeriesMemo<int>& memo() {
  static detail::SeriesMemo<int> instance;
  return instance;
}

void require_even_weight(int weight) {
  if (weight % 2 != 0) throw std::invalid_argument("weight must be even");
}

LaurentSeries build_eisenstein(int weight, std::int64_t precision) {
  const Rational factor = -Rational(2 * weight) / bernoulli(static_cast<unsigned>(weight));
  const auto length = static_cast<std::size_t>(std::max<std::int64_t>(precision, 0));
  std::vector<Rational> coeffs(length);
  if (length > 0) coeffs[0] = 1;
  // sigma_{2k-1}(n) for all n < precision by a divisor sieve.
  std::vector<Integer> sig(length);
  for (std::size_t d = 1; d < length; ++d) {
    const Integer power = integer_pow(Integer(static_cast<unsigned long>(d)),
                                      static_cast<std::uint64_t>(weight - 1));
    for (std::size_t n = d; n < length; n += d) sig[n] += power;
  }
  for (std::size_t n = 1; n < length; ++n) coeffs[n] = factor * sig[n];
  return LaurentSeries(0, std::move(coeffs), precision);
}

LaurentSeries build_delta(std::int64_t precision) {
  if (precision <= 1) return LaurentSeries::zero(precision);
  const auto length = precision - 1;  // terms of prod(1 - q^n)^24 needed
  // Euler: prod(1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k over all integers.
  std::vector<Rational> eta(static_cast<std::size_t>(length));
  eta[0] = 1;
  for (std::int64_t k = 1; k * (3 * k - 1) / 2 < length; ++k) {
    const int sign = (k % 2 == 0) ? 1 : -1;
    eta[static_cast<std::size_t>(k * (3 * k - 1) / 2)] += sign;
    if (k * (3 * k + 1) / 2 < length) eta[static_cast<std::size_t>(k * (3 * k + 1) / 2)] += sign;
  }
  const auto product = pow(LaurentSeries(0, std::move(eta), length), 24);
  return shift(product, 1);
}

}  // namespace

std::vector<Rational> FormBasis::coordinates(const LaurentSeries& f) const {
  std::vector<Rational> out;
  out.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    out.push_back(f.coefficient(leading_exponent(i)));
  }
  return out;
}

Rational bernoulli(unsigned k) {
  std::vector<Rational> b(k + 1);
  b[0] = 1;
  for (unsigned n = 1; n <= k; ++n) {
    // sum_{j=0}^{n} C(n+1, j) B_j = 0.
    Rational acc(0);
    Integer binom(1);  // C(n+1, j)
    for (unsigned j = 0; j < n; ++j) {
      acc += binom * b[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    b[n] = -acc / binom;
  }
  return b[k];
}

Integer sigma(unsigned r, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma: n must be positive");
  Integer total;
  for (const auto d : divisors(n)) {
    total += integer_pow(Integer(static_cast<unsigned long>(d)), r);
  }
  return total;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low;
  std::vector<std::uint64_t> high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d * d != n) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

ModularFormSeries eisenstein(int weight, std::int64_t precision) {
  require_even_weight(weight);
  if (weight < 4) throw std::invalid_argument("eisenstein: weight must be at least 4");
  return {weight, memo().get(weight, precision, [weight](std::int64_t p) {
            return build_eisenstein(weight, p);
          })};
}

ModularFormSeries delta(std::int64_t precision) {
  return {12, memo().get(0, precision, build_delta)};
}

ModularFormSeries j_function(std::int64_t precision) {
  const auto e4 = eisenstein(4, precision + 1).series;
  const auto inv = invert(delta(precision + 2).series);
  return {0, truncate(mul(pow(e4, 3), inv), precision)};
}

int dimension(int weight, BasisKind kind) {
  if (weight < 0 || weight % 2 != 0) return 0;
  if (kind == BasisKind::WeaklyHolomorphic) {
    throw std::invalid_argument("dimension: weakly holomorphic spaces are infinite dimensional");
  }
  const int full = weight / 12 + (weight % 12 == 2 ? 0 : 1);
  if (kind == BasisKind::Holomorphic) return full;
  return weight >= 4 ? full - 1 : 0;
}

namespace {

FormBasis build_basis(int weight, BasisKind kind, std::int64_t precision) {
  if (kind == BasisKind::WeaklyHolomorphic) {
    throw std::invalid_argument("basis: use wh_slice_basis for weakly holomorphic slices");
  }
  FormBasis out;
  out.weight = weight;
  out.kind = kind;
  if (weight < 0 || weight % 2 != 0) return out;

  const auto d = delta(precision).series;
  const auto e4 = eisenstein(4, precision).series;
  const auto e6 = eisenstein(6, precision).series;
  const int min_a = kind == BasisKind::Cuspidal ? 1 : 0;

  std::vector<LaurentSeries> spanning;
  for (int a = min_a; 12 * a <= weight; ++a) {
    const int rest = weight - 12 * a;
    for (int c = 0; 6 * c <= rest; ++c) {
      if ((rest - 6 * c) % 4 != 0) continue;
      const int b = (rest - 6 * c) / 4;
      auto term = LaurentSeries::constant(Rational(1), precision);
      if (a > 0) term = mul(term, pow(d, a));
      if (b > 0) term = mul(term, pow(e4, b));
      if (c > 0) term = mul(term, pow(e6, c));
      spanning.push_back(truncate(term, precision));
    }
  }
  for (auto& s : reduced_echelon_form(std::move(spanning))) {
    out.elements.push_back({weight, std::move(s)});
  }
  if (static_cast<int>(out.elements.size()) != dimension(weight, kind)) {
    throw InsufficientPrecision("basis of weight " + std::to_string(weight) +
                                " needs more than O(q^" + std::to_string(precision) + ")");
  }
  return out;
}

}  // namespace

FormBasis basis(int weight, BasisKind kind, std::int64_t precision) {
  static detail::BasisMemo<std::pair<int, BasisKind>, FormBasis> memo;
  return memo.get({weight, kind}, precision,
                  [&](std::int64_t p) { return build_basis(weight, kind, p); });
}

RationalMatrix hecke_matrix_on_space(int weight, BasisKind kind, std::int64_t m) {
  const auto dim = static_cast<std::size_t>(dimension(weight, kind));
  // T_m on O(q^P) is known to O(q^ceil(P/m)); the leading exponents stop at dim.
  const auto precision = m * static_cast<std::int64_t>(dim + 2);
  const auto b = basis(weight, kind, precision);
  RationalMatrix matrix(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto image = t_op(b.elements[j].series, weight, m);
    const auto coords = b.coordinates(image);
    for (std::size_t i = 0; i < dim; ++i) matrix(i, j) = coords[i];
  }
  return matrix;
}

Polynomial hecke_charpoly_on_space(int weight, BasisKind kind, std::int64_t m) {
  return charpoly(hecke_matrix_on_space(weight, kind, m));
}

}  // namespace merohecke
