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

#include "merohecke/rational.hpp"

#include <cctype>

#include "merohecke/errors.hpp"

namespace merohecke {

namespace {

bool is_decimal_integer(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

std::string rationals_to_string(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_string(values[i]);
  }
  return out + "]";
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_decimal_integer(num) ||
      (slash != std::string_view::npos && (!is_decimal_integer(den) || den[0] == '-'))) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(1);
  if (slash != std::string_view::npos) {
    d = Integer(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Integer integer_pow(const Integer& base, std::uint64_t exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

Rational rational_pow(const Rational& base, std::int64_t exponent) {
  const auto e = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
  Rational r(integer_pow(base.get_num(), e), integer_pow(base.get_den(), e));
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("rational_pow: zero to a negative power");
    r = 1 / r;
  }
  r.canonicalize();
  return r;
}

bool is_canonical(const Rational& value) {
  if (value.get_den() <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return g == 1;
}

}  // namespace merohecke
