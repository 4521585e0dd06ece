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

#ifndef MEROHECKE_NUMEVAL_HPP
#define MEROHECKE_NUMEVAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "merohecke/forms.hpp"
#include "merohecke/laurent_series.hpp"

namespace merohecke {

using Real = boost::multiprecision::mpfr_float;
using Complex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::mpfr_float_backend<0>>>;

/// Sets the working precision of every Real/Complex created in its lifetime
/// and restores the previous value on exit. The setting is process-wide:
/// install it before spawning worker threads and not inside them.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits_;
};

unsigned bits_to_digits(unsigned bits);

Real to_real(const Rational& value);
Complex ipow(const Complex& base, std::int64_t exponent);
std::string to_string(const Real& value, int digits = 30);

/// Parses "1.5", "-3/4", "sqrt(7)/2", "2*sqrt(3)" and products/quotients of
/// such factors.
Real parse_real(std::string_view text);

/// A point of the upper half-plane.
struct HPoint {
  Real x;
  Real y;
  unsigned bits = 200;

  HPoint() = default;
  HPoint(Real x_, Real y_, unsigned bits_);

  Complex z() const { return Complex(x, y); }
  static HPoint from_complex(const Complex& z, unsigned bits);
  /// "x,y" with parse_real components.
  static HPoint parse(std::string_view text, unsigned bits);
};

struct IntMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  friend IntMatrix operator*(const IntMatrix& l, const IntMatrix& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
            l.c * r.b + l.d * r.d};
  }
};

Complex act(const IntMatrix& g, const Complex& z);

/// gamma in SL2(Z) with gamma z in the standard fundamental domain.
IntMatrix reduce_to_fundamental_domain(const Complex& z, Complex* reduced = nullptr);

struct EvalResult {
  Complex value;
  double err_bound = 0.0;  // absolute: heuristic tail plus rounding
  std::string tail_note;
  std::int64_t terms = 0;
};

/// Number of q-terms after which |c(n) q^n| drops below 2^-bits at height y
/// for a form whose coefficients grow like exp(4 pi sqrt(pole_order n)).
std::int64_t terms_for_height(unsigned bits, double y, std::int64_t pole_order = 0);

/// Sum of c(n) q^n over the known window with a ratio-test tail estimate
/// from the last quarter of the coefficients. Throws RegionGuard when
/// y <= validity_height and DivergentTail when the estimated ratio reaches
/// 1/|q|.
EvalResult eval_series(const LaurentSeries& f, const HPoint& z, unsigned bits,
                       double validity_height = 0.0);

/// f(z) = (cz+d)^(-weight) f(gamma z) with gamma z in the fundamental domain.
EvalResult eval_modular(const ModularFormSeries& f, const HPoint& z, unsigned bits,
                        double validity_height = 0.0);

/// det(gamma)^(weight/2) (cz+d)^(-weight) f(gamma z), f summed at gamma z.
EvalResult slash(const ModularFormSeries& f, const IntMatrix& gamma, const HPoint& z,
                 unsigned bits, double validity_height = 0.0);

struct HeckeValue {
  EvalResult value;
  std::string path;  // "series" or "coset"
  std::optional<EvalResult> series_path;
  std::optional<EvalResult> coset_path;
  std::optional<double> relative_difference;
  bool paths_agree = true;
};

/// (f | T_m)(z): the exact T_m series when its error bound meets tol,
/// otherwise m^(2kappa-1) sum_{ad=m, b mod d} d^(-2kappa) f((az+b)/d).
/// Both paths are reported when both are available.
HeckeValue hecke_value(const ModularFormSeries& f, std::int64_t m, const HPoint& z, unsigned bits,
                       double tol = 1e-10, double validity_height = 0.0);

/// E8(i)/Delta(i).
EvalResult alpha(unsigned bits);

struct CmCheck {
  std::string name;
  Real value;
  Real expected;
  double relative_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CmReport {
  Real omega;                   // (-Delta(z))^(1/12) at z = (1 + sqrt(-7))/2
  double delta_imag_relative = 0.0;
  std::vector<CmCheck> checks;  // j, E4/Omega^4, E6/(sqrt(7) Omega^6)
  bool pass = false;
};

CmReport cm_checks(unsigned bits, double tol = 1e-20, double j_tol = 1e-25);

/// m^(2k-ell) (g |_{2ell-2k} T_m)(zz).
Complex script_g_coefficient(const ModularFormSeries& g, int k, int ell, const HPoint& zz,
                             std::int64_t m, unsigned bits);

struct F6iEigenEntry {
  std::int64_t n = 0;
  Rational exact;          // q^n coefficient of f6i|T_m - sigma_5(m) f6i
  Complex predicted;       // constant * script_g_coefficient(g_m, 3, 1, i, n)
  double relative_error = 0.0;
  Real fitted_constant;    // exact / script_g_coefficient
};

struct F6iEigenReport {
  std::int64_t m = 0;
  Rational constant;
  std::vector<F6iEigenEntry> entries;
  double max_relative_error = 0.0;
  Real fitted_constant;        // mean over n
  double fitted_spread = 0.0;  // max relative deviation of the per-n fits
  bool pass = false;
};

/// Compares the exact coefficients of f6i|T_m - (sigma_5(m) + sigma_offset) f6i
/// with constant * (n-th coefficient of the script-G series of g_m at i),
/// n = 1..N, where g_m is the catalogue entry divided by alpha.
F6iEigenReport verify_f6i_eigen(std::int64_t m, std::int64_t N, unsigned bits,
                                const Rational& constant, double tol = 1e-10,
                                std::int64_t sigma_offset = 0);

}  // namespace merohecke

#endif  // MEROHECKE_NUMEVAL_HPP
