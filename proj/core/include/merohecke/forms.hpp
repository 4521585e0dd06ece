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

#ifndef MEROHECKE_FORMS_HPP
#define MEROHECKE_FORMS_HPP

#include <cstdint>
#include <vector>

#include "merohecke/laurent_series.hpp"
#include "merohecke/polynomial.hpp"
#include "merohecke/rational.hpp"
#include "merohecke/rational_matrix.hpp"

namespace merohecke {

/// A q-expansion tagged with its (even) weight.
struct ModularFormSeries {
  int weight = 0;
  LaurentSeries series;

  friend bool operator==(const ModularFormSeries&, const ModularFormSeries&) = default;
};

enum class BasisKind { Holomorphic, Cuspidal, WeaklyHolomorphic };

/// Reduced echelon family: element i has leading coefficient 1 at
/// leading_exponent(i), the exponents strictly increase, and every other
/// element vanishes at those exponents.
struct FormBasis {
  int weight = 0;
  BasisKind kind = BasisKind::Holomorphic;
  std::vector<ModularFormSeries> elements;

  std::size_t size() const { return elements.size(); }
  std::int64_t leading_exponent(std::size_t i) const { return elements[i].series.valuation(); }
  /// Coordinates of f in this basis, read off at the leading exponents.
  /// Does not check that f lies in the span.
  std::vector<Rational> coordinates(const LaurentSeries& f) const;
};

/// B_k from sum_{j<=k} C(k+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2).
Rational bernoulli(unsigned k);

/// sum of d^r over the positive divisors d of n.
Integer sigma(unsigned r, std::uint64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// E_{2k} = 1 - (4k / B_{2k}) sum sigma_{2k-1}(n) q^n, to O(q^precision).
ModularFormSeries eisenstein(int weight, std::int64_t precision);

/// Delta = q prod (1 - q^n)^24, to O(q^precision).
ModularFormSeries delta(std::int64_t precision);

/// j = E4^3 / Delta, to O(q^precision).
ModularFormSeries j_function(std::int64_t precision);

/// Classical dimension of M_{2k} or S_{2k}; zero for negative or odd weight.
int dimension(int weight, BasisKind kind);

/// Echelon basis of M_{2k} (leading exponents 0..d-1) or S_{2k} (1..d).
FormBasis basis(int weight, BasisKind kind, std::int64_t precision);

/// Matrix of T_m on basis(weight, kind); column j holds the coordinates of
/// element j | T_m.
RationalMatrix hecke_matrix_on_space(int weight, BasisKind kind, std::int64_t m);

/// det(x - T_m) on M_{2k} or S_{2k}.
Polynomial hecke_charpoly_on_space(int weight, BasisKind kind, std::int64_t m);

}  // namespace merohecke

#endif  // MEROHECKE_FORMS_HPP
