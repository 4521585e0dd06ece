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

#ifndef MEROHECKE_LAURENT_SERIES_HPP
#define MEROHECKE_LAURENT_SERIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "merohecke/rational.hpp"

namespace merohecke {

/// Truncated Laurent series in q with exact rational coefficients.
///
/// A series is known on the half-open window (-inf, precision): coefficients
/// below valuation() are zero, coefficients in [valuation(), precision()) are
/// stored densely, and anything at or above precision() is unknown. Leading
/// zeros are never stored, so valuation() is the index of the first nonzero
/// coefficient; the zero series known to precision P reports valuation P.
///
/// Every operation derives its output precision from its inputs and never
/// claims more than it can prove.
class LaurentSeries {
 public:
  /// Zero to precision 0.
  LaurentSeries() = default;

  /// coefficients[i] is the coefficient of q^(start + i); precision is
  /// start + coefficients.size().
  LaurentSeries(std::int64_t start, std::vector<Rational> coefficients);

  /// Same, with an explicit precision >= start + coefficients.size(); the gap
  /// is filled with known zeros.
  LaurentSeries(std::int64_t start, std::vector<Rational> coefficients, std::int64_t precision);

  static LaurentSeries zero(std::int64_t precision);
  static LaurentSeries constant(const Rational& value, std::int64_t precision);
  static LaurentSeries monomial(std::int64_t exponent, const Rational& value,
                                std::int64_t precision);

  std::int64_t valuation() const { return valuation_; }
  std::int64_t precision() const { return precision_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^n. Throws PrecisionExceeded when n >= precision().
  Rational coefficient(std::int64_t n) const;

  /// Throws ZeroLeadingCoefficient for the zero series.
  const Rational& leading_coefficient() const;

  /// Stored coefficients for exponents valuation() .. precision() - 1.
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Structural (bit-exact) equality: same valuation, precision, coefficients.
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  void normalize();

  std::int64_t valuation_ = 0;
  std::int64_t precision_ = 0;
  std::vector<Rational> coeffs_;
};

/// Outcome of comparing two series on their common known window.
struct SeriesComparison {
  bool equal = true;
  std::int64_t window_begin = 0;  // inclusive
  std::int64_t window_end = 0;    // exclusive, = min of the two precisions
  std::optional<std::int64_t> first_mismatch;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries subtract(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries negate(const LaurentSeries& a);
LaurentSeries scale(const LaurentSeries& a, const Rational& c);

/// Cauchy product. Valuation v_a + v_b, precision min(P_a + v_b, P_b + v_a).
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse to the largest provable precision P_a - 2 v_a.
LaurentSeries invert(const LaurentSeries& a);
/// Inverse truncated to target_precision; InsufficientPrecision if the input
/// cannot support it.
LaurentSeries invert(const LaurentSeries& a, std::int64_t target_precision);

LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b, std::int64_t target_precision);

/// D^j with D = q d/dq: the coefficient of q^n is multiplied by n^j.
LaurentSeries d_power(const LaurentSeries& a, unsigned j);

/// Forget every coefficient at or above new_precision (must not exceed the
/// current precision).
LaurentSeries truncate(const LaurentSeries& a, std::int64_t new_precision);

/// Multiply by q^k.
LaurentSeries shift(const LaurentSeries& a, std::int64_t k);

/// a^e; negative exponents go through invert().
LaurentSeries pow(const LaurentSeries& a, std::int64_t e);

SeriesComparison equals_to_precision(const LaurentSeries& a, const LaurentSeries& b);

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const Rational& c, const LaurentSeries& a);
LaurentSeries operator*(const LaurentSeries& a, const Rational& c);

/// Human-readable form, e.g. "q^-1 + 504 + 73764*q + O(q^2)".
std::string to_string(const LaurentSeries& a, std::int64_t max_terms = -1);

/// Reduced row echelon form: returns a basis of span(rows) where element i
/// has leading coefficient 1 at a strictly increasing exponent and zero at
/// every other element's leading exponent. All rows are first truncated to
/// the smallest common precision.
std::vector<LaurentSeries> reduced_echelon_form(std::vector<LaurentSeries> rows);

}  // namespace merohecke

#endif  // MEROHECKE_LAURENT_SERIES_HPP
