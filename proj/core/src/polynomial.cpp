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

#include "merohecke/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace merohecke {

Polynomial::Polynomial(std::vector<Rational> low_to_high) : coeffs_(std::move(low_to_high)) {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_high_to_low(std::vector<Rational> coefficients) {
  std::reverse(coefficients.begin(), coefficients.end());
  return Polynomial(std::move(coefficients));
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
  for (int i = 0; i <= a.degree(); ++i) out[i] += a.coefficient(i);
  for (int i = 0; i <= b.degree(); ++i) out[i] += b.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
  for (int i = 0; i <= a.degree(); ++i) out[i] += a.coefficient(i);
  for (int i = 0; i <= b.degree(); ++i) out[i] -= b.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.degree() < 0 || b.degree() < 0) return Polynomial();
  std::vector<Rational> out(static_cast<std::size_t>(a.degree() + b.degree() + 1));
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) out[i + j] += a.coefficient(i) * b.coefficient(j);
  }
  return Polynomial(std::move(out));
}

std::string to_string(const Polynomial& p, const std::string& variable) {
  if (p.degree() < 0) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational c = p.coefficient(i);
    if (sgn(c) == 0) continue;
    const Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << to_string(magnitude) << "*";
    out << variable;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace merohecke
