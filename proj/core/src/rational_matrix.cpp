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

#include "merohecke/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "merohecke/errors.hpp"

namespace merohecke {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RationalMatrix operator*(const Rational& c, const RationalMatrix& a) {
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= c;
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  return a + Rational(-1) * b;
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows()) {
    throw std::invalid_argument("solve: shape mismatch");
  }
  const std::size_t n = a.rows();
  RationalMatrix lhs = a;
  RationalMatrix rhs = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(lhs(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lhs(pivot, j), lhs(col, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(pivot, j), rhs(col, j));
    }
    const Rational inv = 1 / lhs(col, col);
    for (std::size_t j = 0; j < n; ++j) lhs(col, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(col, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(lhs(r, col)) == 0) continue;
      const Rational f = lhs(r, col);
      for (std::size_t j = 0; j < n; ++j) lhs(r, j) -= f * lhs(col, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(r, j) -= f * rhs(col, j);
    }
  }
  return rhs;
}

RationalMatrix inverse(const RationalMatrix& a) {
  return solve(a, RationalMatrix::identity(a.rows()));
}

Polynomial charpoly(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: matrix not square");
  const std::size_t n = a.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const RationalMatrix am = a * m;
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

std::string to_json(const RationalMatrix& a) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    out.push_back(std::move(row));
  }
  return out.dump();
}

}  // namespace merohecke
