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

#ifndef MEROHECKE_POLYNOMIAL_HPP
#define MEROHECKE_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "merohecke/rational.hpp"

namespace merohecke {

// Dense univariate polynomial over Q, coefficients stored low to high with no
// trailing zeros. The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> low_to_high);

  static Polynomial from_high_to_low(std::vector<Rational> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

// "x^2 - 1512*x + 374784" style, in the given variable name.
std::string to_string(const Polynomial& p, const std::string& variable = "x");

}  // namespace merohecke

#endif  // MEROHECKE_POLYNOMIAL_HPP
