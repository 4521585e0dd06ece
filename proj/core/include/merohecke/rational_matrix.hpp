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

#ifndef MEROHECKE_RATIONAL_MATRIX_HPP
#define MEROHECKE_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "merohecke/polynomial.hpp"
#include "merohecke/rational.hpp"

namespace merohecke {

// Dense row-major matrix over Q. A 0x0 matrix is valid.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& c, const RationalMatrix& a);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);

// Gauss-Jordan over Q. Throws SingularMatrix.
RationalMatrix inverse(const RationalMatrix& a);

// Solve a * x = b column by column. Throws SingularMatrix.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);

// det(x*I - a), monic of degree n, by Faddeev-LeVerrier.
Polynomial charpoly(const RationalMatrix& a);

// JSON array of rows, entries "num/den".
std::string to_json(const RationalMatrix& a);

}  // namespace merohecke

#endif  // MEROHECKE_RATIONAL_MATRIX_HPP
