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

#ifndef MEROHECKE_RATIONAL_HPP
#define MEROHECKE_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace merohecke {

// Exact arbitrary-precision fraction. GMP keeps it canonical (den > 0,
// gcd(num, den) = 1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "num/den" in base 10, den omitted when 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// "[a, b/c, ...]" for diagnostics.
std::string rationals_to_string(const std::vector<Rational>& values);

// Inverse of to_string. Accepts "a", "-a", "a/b"; rejects zero or negative
// denominators and anything that is not a base-10 integer pair.
Rational parse_rational(std::string_view text);

// base^exponent for a possibly negative exponent (base != 0 when exponent < 0).
Rational rational_pow(const Rational& base, std::int64_t exponent);
Integer integer_pow(const Integer& base, std::uint64_t exponent);

// Canonical-form check used by property tests.
bool is_canonical(const Rational& value);

}  // namespace merohecke

#endif  // MEROHECKE_RATIONAL_HPP
