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

#ifndef MEROHECKE_ERRORS_HPP
#define MEROHECKE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace merohecke {

// Root of the library's exception hierarchy. Verification failures are
// reported through result structs, not exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coefficient beyond the known window of a series was requested.
class PrecisionExceeded : public Error {
 public:
  using Error::Error;
};

// The inputs cannot support the requested output precision.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

// Inversion of a series whose stored range is all zero.
class ZeroLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

// Exact linear algebra hit a singular matrix.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// Quotient basis classes turned out dependent (indicates a bug).
class SingularCoordinateMatrix : public Error {
 public:
  using Error::Error;
};

// Principal-part problem in a weight where solutions are not unique.
class NonUniqueSolution : public Error {
 public:
  using Error::Error;
};

// j-polynomial stripping left a nonconstant residue.
class NotPolynomialInJ : public Error {
 public:
  using Error::Error;
};

// Malformed serialized data, formulas or CLI arguments.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Evaluation requested below the height where a q-expansion is valid.
class RegionGuard : public Error {
 public:
  using Error::Error;
};

// Coefficient growth suggests the truncated q-series does not converge.
class DivergentTail : public Error {
 public:
  using Error::Error;
};

}  // namespace merohecke

#endif  // MEROHECKE_ERRORS_HPP
