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

#include "merohecke/laurent_series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "merohecke/errors.hpp"

namespace merohecke {

namespace {

// Coefficients scaled by a common denominator: value_i = numerators[i] / denominator.
struct CommonDenominator {
  Integer denominator{1};
  std::vector<Integer> numerators;
};

CommonDenominator to_common_denominator(std::span<const Rational> values) {
  CommonDenominator out;
  for (const auto& v : values) {
    if (v.get_den() != 1) {
      mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
              v.get_den().get_mpz_t());
    }
  }
  out.numerators.reserve(values.size());
  for (const auto& v : values) {
    if (out.denominator == 1) {
      out.numerators.push_back(v.get_num());
    } else {
      Integer scaled = out.denominator / v.get_den();
      scaled *= v.get_num();
      out.numerators.push_back(std::move(scaled));
    }
  }
  return out;
}

std::string exponent_term(std::int64_t n) {
  if (n == 0) return "";
  if (n == 1) return "q";
  return "q^" + std::to_string(n);
}

}  // namespace

LaurentSeries::LaurentSeries(std::int64_t start, std::vector<Rational> coefficients)
    : valuation_(start),
      precision_(start + static_cast<std::int64_t>(coefficients.size())),
      coeffs_(std::move(coefficients)) {
  normalize();
}

LaurentSeries::LaurentSeries(std::int64_t start, std::vector<Rational> coefficients,
                             std::int64_t precision)
    : valuation_(start), precision_(precision), coeffs_(std::move(coefficients)) {
  const auto stored_end = start + static_cast<std::int64_t>(coeffs_.size());
  if (stored_end > precision) {
    throw std::invalid_argument("LaurentSeries: more coefficients than the precision allows");
  }
  if (precision > start) coeffs_.resize(static_cast<std::size_t>(precision - start));
  normalize();
}

LaurentSeries LaurentSeries::zero(std::int64_t precision) {
  LaurentSeries s;
  s.valuation_ = precision;
  s.precision_ = precision;
  return s;
}

LaurentSeries LaurentSeries::constant(const Rational& value, std::int64_t precision) {
  return monomial(0, value, precision);
}

LaurentSeries LaurentSeries::monomial(std::int64_t exponent, const Rational& value,
                                      std::int64_t precision) {
  if (exponent >= precision) {
    throw InsufficientPrecision("monomial q^" + std::to_string(exponent) +
                                " does not fit below precision " + std::to_string(precision));
  }
  return LaurentSeries(exponent, {value}, precision);
}

void LaurentSeries::normalize() {
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                                  [](const Rational& c) { return sgn(c) != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    valuation_ = precision_;
    return;
  }
  const auto skip = first - coeffs_.begin();
  if (skip > 0) coeffs_.erase(coeffs_.begin(), first);
  valuation_ += skip;
}

Rational LaurentSeries::coefficient(std::int64_t n) const {
  if (n >= precision_) {
    throw PrecisionExceeded("coefficient of q^" + std::to_string(n) +
                            " requested from a series known to O(q^" +
                            std::to_string(precision_) + ")");
  }
  if (n < valuation_) return Rational(0);
  return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

const Rational& LaurentSeries::leading_coefficient() const {
  if (coeffs_.empty()) throw ZeroLeadingCoefficient("series is zero to its precision");
  return coeffs_.front();
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  const auto precision = std::min(a.precision(), b.precision());
  const auto start = std::min(a.valuation(), b.valuation());
  if (start >= precision) return LaurentSeries::zero(precision);
  std::vector<Rational> out(static_cast<std::size_t>(precision - start));
  const auto accumulate = [&](const LaurentSeries& s) {
    const auto c = s.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto n = s.valuation() + static_cast<std::int64_t>(i);
      if (n >= precision) break;
      out[static_cast<std::size_t>(n - start)] += c[i];
    }
  };
  accumulate(a);
  accumulate(b);
  return LaurentSeries(start, std::move(out), precision);
}

LaurentSeries negate(const LaurentSeries& a) { return scale(a, Rational(-1)); }

LaurentSeries subtract(const LaurentSeries& a, const LaurentSeries& b) {
  return add(a, negate(b));
}

LaurentSeries scale(const LaurentSeries& a, const Rational& c) {
  if (sgn(c) == 0) return LaurentSeries::zero(a.precision());
  std::vector<Rational> out(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : out) x *= c;
  return LaurentSeries(a.valuation(), std::move(out), a.precision());
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  const auto precision = std::min(a.precision() + b.valuation(), b.precision() + a.valuation());
  const auto start = a.valuation() + b.valuation();
  if (a.is_zero() || b.is_zero() || start >= precision) return LaurentSeries::zero(precision);

  const auto length = static_cast<std::size_t>(precision - start);
  const auto lhs = to_common_denominator(a.coefficients());
  const auto rhs = to_common_denominator(b.coefficients());
  const auto& x = lhs.numerators;
  const auto& y = rhs.numerators;

  std::vector<Integer> acc(length);
  for (std::size_t i = 0; i < std::min(x.size(), length); ++i) {
    if (sgn(x[i]) == 0) continue;
    const auto upto = std::min(y.size(), length - i);
    for (std::size_t j = 0; j < upto; ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }

  const Integer denominator = lhs.denominator * rhs.denominator;
  std::vector<Rational> out(length);
  for (std::size_t i = 0; i < length; ++i) {
    out[i] = Rational(acc[i], denominator);
    out[i].canonicalize();
  }
  return LaurentSeries(start, std::move(out), precision);
}

LaurentSeries invert(const LaurentSeries& a) {
  if (a.is_zero()) throw ZeroLeadingCoefficient("cannot invert a series that is zero to O(q^" +
                                                std::to_string(a.precision()) + ")");
  return invert(a, a.precision() - 2 * a.valuation());
}

LaurentSeries invert(const LaurentSeries& a, std::int64_t target_precision) {
  if (a.is_zero()) throw ZeroLeadingCoefficient("cannot invert a series that is zero to O(q^" +
                                                std::to_string(a.precision()) + ")");
  const auto v = a.valuation();
  const auto max_precision = a.precision() - 2 * v;
  if (target_precision > max_precision) {
    throw InsufficientPrecision("inverse requested to O(q^" + std::to_string(target_precision) +
                                ") but the input only supports O(q^" +
                                std::to_string(max_precision) + ")");
  }
  if (target_precision <= -v) return LaurentSeries::zero(target_precision);
  const auto terms = static_cast<std::size_t>(target_precision + v);

  // u = A / D with integer A; 1/u = D * W_k / A0^(k+1) where
  // W_0 = 1, W_k = -sum_{i=1..k} A_i W_{k-i} A0^(i-1).
  const auto scaled = to_common_denominator(a.coefficients());
  const auto& A = scaled.numerators;
  const Integer& a0 = A.front();
  std::vector<Integer> a0_powers(terms + 1);
  a0_powers[0] = 1;
  for (std::size_t i = 1; i <= terms; ++i) a0_powers[i] = a0_powers[i - 1] * a0;

  std::vector<Integer> W(terms);
  W[0] = 1;
  Integer term;
  for (std::size_t k = 1; k < terms; ++k) {
    Integer sum;
    const auto upto = std::min(k, A.size() - 1);
    for (std::size_t i = 1; i <= upto; ++i) {
      if (sgn(A[i]) == 0) continue;
      mpz_mul(term.get_mpz_t(), A[i].get_mpz_t(), W[k - i].get_mpz_t());
      mpz_addmul(sum.get_mpz_t(), term.get_mpz_t(), a0_powers[i - 1].get_mpz_t());
    }
    W[k] = -sum;
  }

  std::vector<Rational> out(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    out[k] = Rational(scaled.denominator * W[k], a0_powers[k + 1]);
    out[k].canonicalize();
  }
  return LaurentSeries(-v, std::move(out), target_precision);
}

LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, invert(b)); }

LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b, std::int64_t target_precision) {
  auto q = mul(a, invert(b));
  if (q.precision() < target_precision) {
    throw InsufficientPrecision("quotient known to O(q^" + std::to_string(q.precision()) +
                                "), requested O(q^" + std::to_string(target_precision) + ")");
  }
  return truncate(q, target_precision);
}

LaurentSeries d_power(const LaurentSeries& a, unsigned j) {
  if (j == 0) return a;
  std::vector<Rational> out(a.coefficients().begin(), a.coefficients().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto n = a.valuation() + static_cast<std::int64_t>(i);
    out[i] *= rational_pow(Rational(n), j);
  }
  return LaurentSeries(a.valuation(), std::move(out), a.precision());
}

LaurentSeries truncate(const LaurentSeries& a, std::int64_t new_precision) {
  if (new_precision > a.precision()) {
    throw InsufficientPrecision("cannot extend O(q^" + std::to_string(a.precision()) +
                                ") to O(q^" + std::to_string(new_precision) + ")");
  }
  if (new_precision <= a.valuation()) return LaurentSeries::zero(new_precision);
  const auto c = a.coefficients();
  std::vector<Rational> out(c.begin(), c.begin() + (new_precision - a.valuation()));
  return LaurentSeries(a.valuation(), std::move(out), new_precision);
}

LaurentSeries shift(const LaurentSeries& a, std::int64_t k) {
  if (a.is_zero()) return LaurentSeries::zero(a.precision() + k);
  std::vector<Rational> out(a.coefficients().begin(), a.coefficients().end());
  return LaurentSeries(a.valuation() + k, std::move(out), a.precision() + k);
}

LaurentSeries pow(const LaurentSeries& a, std::int64_t e) {
  if (e < 0) return pow(invert(a), -e);
  if (e == 0) {
    if (a.is_zero()) throw ZeroLeadingCoefficient("0^0 of a series that is zero to its precision");
    return LaurentSeries::constant(Rational(1), a.precision() - a.valuation());
  }
  LaurentSeries result;
  bool have_result = false;
  LaurentSeries base = a;
  auto remaining = static_cast<std::uint64_t>(e);
  while (true) {
    if (remaining & 1U) {
      result = have_result ? mul(result, base) : base;
      have_result = true;
    }
    remaining >>= 1U;
    if (remaining == 0) break;
    base = mul(base, base);
  }
  return result;
}

SeriesComparison equals_to_precision(const LaurentSeries& a, const LaurentSeries& b) {
  SeriesComparison out;
  out.window_end = std::min(a.precision(), b.precision());
  out.window_begin = std::min({a.valuation(), b.valuation(), out.window_end});
  for (auto n = out.window_begin; n < out.window_end; ++n) {
    if (a.coefficient(n) != b.coefficient(n)) {
      out.equal = false;
      out.first_mismatch = n;
      break;
    }
  }
  return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return subtract(a, b); }
LaurentSeries operator-(const LaurentSeries& a) { return negate(a); }
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }
LaurentSeries operator*(const Rational& c, const LaurentSeries& a) { return scale(a, c); }
LaurentSeries operator*(const LaurentSeries& a, const Rational& c) { return scale(a, c); }

std::string to_string(const LaurentSeries& a, std::int64_t max_terms) {
  std::ostringstream out;
  std::int64_t written = 0;
  const auto c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    if (max_terms >= 0 && written == max_terms) break;
    const auto n = a.valuation() + static_cast<std::int64_t>(i);
    Rational magnitude = abs(c[i]);
    if (written == 0) {
      if (sgn(c[i]) < 0) out << "-";
    } else {
      out << (sgn(c[i]) < 0 ? " - " : " + ");
    }
    const auto q = exponent_term(n);
    if (q.empty()) {
      out << to_string(magnitude);
    } else if (magnitude == 1) {
      out << q;
    } else {
      out << to_string(magnitude) << "*" << q;
    }
    ++written;
  }
  if (written > 0) out << " + ";
  out << "O(q^" << a.precision() << ")";
  return out.str();
}

std::vector<LaurentSeries> reduced_echelon_form(std::vector<LaurentSeries> rows) {
  if (rows.empty()) return rows;
  std::int64_t precision = rows.front().precision();
  for (const auto& r : rows) precision = std::min(precision, r.precision());
  std::vector<LaurentSeries> basis;
  for (auto& row : rows) {
    auto current = truncate(row, precision);
    for (const auto& b : basis) {
      const auto c = current.coefficient(b.valuation());
      if (sgn(c) != 0) current = subtract(current, scale(b, c));
    }
    if (current.is_zero()) continue;
    current = scale(current, 1 / Rational(current.leading_coefficient()));
    const auto pivot = current.valuation();
    for (auto& b : basis) {
      const auto c = b.coefficient(pivot);
      if (sgn(c) != 0) b = subtract(b, scale(current, c));
    }
    basis.push_back(std::move(current));
  }
  std::sort(basis.begin(), basis.end(), [](const LaurentSeries& x, const LaurentSeries& y) {
    return x.valuation() < y.valuation();
  });
  return basis;
}

}  // namespace merohecke
