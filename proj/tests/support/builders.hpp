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

#ifndef MEROHECKE_TESTS_BUILDERS_HPP
#define MEROHECKE_TESTS_BUILDERS_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "merohecke/laurent_series.hpp"

namespace build_helpers {

// Integer coefficients given as decimal strings, starting at exponent start.
inline merohecke::LaurentSeries series(std::int64_t start, std::initializer_list<const char*> coeffs) {
  std::vector<merohecke::Rational> c;
  for (const char* s : coeffs) {
    c.emplace_back(s, 10);
    c.back().canonicalize();
  }
  return merohecke::LaurentSeries(start, std::move(c));
}

inline merohecke::LaurentSeries series(std::int64_t start, std::initializer_list<const char*> coeffs,
                                       std::int64_t precision) {
  std::vector<merohecke::Rational> c;
  for (const char* s : coeffs) {
    c.emplace_back(s, 10);
    c.back().canonicalize();
  }
  return merohecke::LaurentSeries(start, std::move(c), precision);
}

inline merohecke::LaurentSeries series(std::int64_t start, std::initializer_list<int> coeffs) {
  std::vector<merohecke::Rational> c;
  for (int x : coeffs) c.emplace_back(x);
  return merohecke::LaurentSeries(start, std::move(c));
}

inline merohecke::Rational Q(const std::string& text) {
  merohecke::Rational r(text, 10);
  r.canonicalize();
  return r;
}

}  // namespace build_helpers

#endif  // MEROHECKE_TESTS_BUILDERS_HPP
