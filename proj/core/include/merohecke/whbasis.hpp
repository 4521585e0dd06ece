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

#ifndef MEROHECKE_WHBASIS_HPP
#define MEROHECKE_WHBASIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "merohecke/forms.hpp"
#include "merohecke/laurent_series.hpp"
#include "merohecke/polynomial.hpp"

namespace merohecke {

/// Holomorphic principal part at the cusp: sum_r lambda_r q^{-r} + a0.
/// Only nonzero lambda_r are stored.
class PrincipalPart {
 public:
  PrincipalPart() = default;

  /// Sets the coefficient of q^{-r}; r >= 1. A zero value erases the entry.
  void set(std::int64_t r, const Rational& value);
  Rational get(std::int64_t r) const;
  void set_constant(const Rational& value) { constant_ = value; }
  const Rational& constant() const { return constant_; }

  const std::map<std::int64_t, Rational>& negative() const { return negative_; }
  std::int64_t max_pole() const { return negative_.empty() ? 0 : negative_.rbegin()->first; }
  bool is_zero() const { return negative_.empty() && sgn(constant_) == 0; }

  /// Exponents < 0 and the constant term of f (f must be known through q^0).
  static PrincipalPart of(const LaurentSeries& f);

  /// "r:coeff,r:coeff,..." where r = 0 addresses the constant term.
  static PrincipalPart parse(std::string_view text);

  friend bool operator==(const PrincipalPart&, const PrincipalPart&) = default;

 private:
  std::map<std::int64_t, Rational> negative_;
  Rational constant_{0};
};

PrincipalPart operator+(const PrincipalPart& a, const PrincipalPart& b);
PrincipalPart operator*(const Rational& c, const PrincipalPart& a);
PrincipalPart operator-(const PrincipalPart& a, const PrincipalPart& b);

/// "q^-5 - 3126*q^-1" style rendering.
std::string to_string(const PrincipalPart& pp);

/// Echelon basis of {f in M^!_w : ord_infty f >= -max_pole}, built as
/// Delta^{-max_pole} M_{w + 12 max_pole}. Empty when w + 12 max_pole < 0.
FormBasis wh_slice_basis(int weight, std::int64_t max_pole, std::int64_t precision);

enum class DualKind { Cusp, Holomorphic };

/// Pairings sum_r lambda_r c_g(r) + a0 c_g(0) against every g in
/// basis(2 - weight, S or M).
std::vector<Rational> obstruction(int weight, const PrincipalPart& pp, DualKind dual);

struct ObstructionWitness {
  std::vector<Rational> pairing;
};

using SolveResult = std::variant<ModularFormSeries, ObstructionWitness>;

/// The unique f in M^!_w (in_s_shriek = false) or S^!_w (true) with the
/// given principal part, or the nonzero obstruction vector.
///
/// In M^! mode the input constant is ignored for w < 0 (it is determined by
/// the negative part) and pins the constant for w = 0. In S^! mode the
/// constant is forced to zero. Weights w >= 2 throw NonUniqueSolution.
/// max_pole defaults to pp.max_pole() + dim S_{2-w}.
SolveResult solve_principal_part(int weight, const PrincipalPart& pp, bool in_s_shriek,
                                 std::int64_t precision,
                                 std::optional<std::int64_t> max_pole = std::nullopt);

/// Q with f = seed * Q(j). Throws NotPolynomialInJ.
Polynomial j_polynomial_decompose(const ModularFormSeries& f, const ModularFormSeries& seed);

struct BolMembership {
  bool member = false;
  std::optional<ModularFormSeries> witness;   // F with D^{2k-1} F = h
  std::vector<Rational> obstruction;          // set when the solver was obstructed
  std::optional<std::int64_t> first_mismatch; // set when D^{2k-1} F differs from h
  std::int64_t window_begin = 0;
  std::int64_t window_end = 0;
};

/// Is h = D^{2k-1} F for some F in M^!_{2-2k} (or S^!_{2-2k})? h must have
/// weight 2k and zero constant term.
BolMembership bol_image_membership(const ModularFormSeries& h, int k, bool in_s_shriek);

}  // namespace merohecke

#endif  // MEROHECKE_WHBASIS_HPP
