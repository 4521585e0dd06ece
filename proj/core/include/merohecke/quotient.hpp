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

#ifndef MEROHECKE_QUOTIENT_HPP
#define MEROHECKE_QUOTIENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "merohecke/polynomial.hpp"
#include "merohecke/rational_matrix.hpp"
#include "merohecke/whbasis.hpp"

namespace merohecke {

// Harmonic forms of weight 2 - 2k modulo M^! (dual space S_{2k}) or modulo
// S^! (dual space M_{2k}).
enum class QuotientKind { ModM, ModS };

std::string to_string(QuotientKind kind);
QuotientKind parse_quotient_kind(std::string_view text);  // "modM!" / "modS!"

struct QuotientClass {
  int weight = 0;  // the harmonic weight 2 - 2k
  QuotientKind kind = QuotientKind::ModM;
  std::vector<Rational> coords;

  bool is_zero() const;
  friend bool operator==(const QuotientClass&, const QuotientClass&) = default;
};

/// Weight-2kappa T_m applied to a principal part:
///   lambda'_n = sum_{r | gcd(m, n)} r^(2kappa-1) lambda_{mn/r^2},
///   a0' = sigma_{2kappa-1}(m) a0.
PrincipalPart hecke_on_principal_part(const PrincipalPart& pp, int weight, std::int64_t m);

/// Obstruction coordinates of pp in the weight 2 - 2k quotient.
QuotientClass class_of(const PrincipalPart& pp, int two_k, QuotientKind kind);

/// Matrix of T_m on the quotient in the basis [q^-1], ..., [q^-d].
/// Throws SingularCoordinateMatrix if those classes are dependent.
RationalMatrix quotient_hecke_matrix(int two_k, QuotientKind kind, std::int64_t m);

struct TheoremCheck {
  bool pass = false;
  Polynomial quotient_charpoly;  // of m^(2k-1) times the quotient matrix
  Polynomial space_charpoly;     // of T_m on S_{2k} (ModM) or M_{2k} (ModS)
};

TheoremCheck theorem_check(int two_k, QuotientKind kind, std::int64_t m);

/// Principal part of F|T_m - m^(1-2k) lambda F for F with principal part q^-1
/// in weight 2 - 2k, solved in M^! (ModM) or S^! (ModS). Returns the
/// obstruction when lambda is not an eigenvalue.
SolveResult eigen_witness(int two_k, std::int64_t m, const Rational& lambda,
                          QuotientKind kind = QuotientKind::ModM, std::int64_t precision = 60);

}  // namespace merohecke

#endif  // MEROHECKE_QUOTIENT_HPP
