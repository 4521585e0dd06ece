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

#include "merohecke/numeval.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "merohecke/errors.hpp"
#include "merohecke/hecke.hpp"
#include "merohecke/meroforms.hpp"

namespace merohecke {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kPi = 3.14159265358979323846;

Real pi() { return boost::math::constants::pi<Real>(); }

// log|x| for a nonzero rational without overflowing a double.
double log_abs(const Rational& x) {
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, x.get_num().get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, x.get_den().get_mpz_t());
  return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * kLn2;
}

double to_double(const Real& x) { return x.convert_to<double>(); }

double abs_double(const Complex& z) { return to_double(Real(abs(z))); }

Complex q_of(const Complex& z) {
  const Complex two_pi_i(Real(0), Real(2 * pi()));
  return Complex(exp(Complex(two_pi_i * z)));
}

double rounding_bound(unsigned bits, double magnitude, std::int64_t terms) {
  return std::ldexp(magnitude * static_cast<double>(terms + 4), -static_cast<int>(bits));
}

class RealParser {
 public:
  explicit RealParser(std::string_view s) : s_(s) {}

  Real parse() {
    skip();
    bool negative = false;
    while (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      negative ^= s_[pos_] == '-';
      ++pos_;
      skip();
    }
    Real value = factor();
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      const char op = s_[pos_];
      if (op != '*' && op != '/') fail();
      ++pos_;
      Real rhs = factor();
      if (op == '*') {
        value *= rhs;
      } else {
        if (rhs == 0) fail();
        value /= rhs;
      }
    }
    return negative ? Real(-value) : value;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail() const {
    throw ParseError("malformed real number '" + std::string(s_) + "'");
  }
  Real number() {
    skip();
    const auto start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
            s_[pos_] == 'e' || s_[pos_] == 'E' ||
            ((s_[pos_] == '-' || s_[pos_] == '+') && pos_ > start &&
             (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    if (pos_ == start) fail();
    try {
      return Real(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail();
    }
  }
  Real factor() {
    skip();
    if (s_.substr(pos_, 5) == "sqrt(") {
      pos_ += 5;
      Real inner = number();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail();
      ++pos_;
      if (inner < 0) fail();
      return Real(sqrt(inner));
    }
    if (s_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return pi();
    }
    return number();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

unsigned bits_to_digits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits_(Real::default_precision()) {
  Real::default_precision(bits_to_digits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits_); }

Real to_real(const Rational& value) {
  Real r;
  mpfr_set_q(r.backend().data(), value.get_mpq_t(), MPFR_RNDN);
  return r;
}

Complex ipow(const Complex& base, std::int64_t exponent) {
  Complex result(1);
  Complex b = exponent < 0 ? Complex(Complex(1) / base) : base;
  auto e = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
  while (e) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e) b *= b;
  }
  return result;
}

std::string to_string(const Real& value, int digits) {
  return value.str(digits, std::ios_base::scientific);
}

Real parse_real(std::string_view text) { return RealParser(text).parse(); }

HPoint::HPoint(Real x_, Real y_, unsigned bits_) : x(std::move(x_)), y(std::move(y_)), bits(bits_) {
  if (!(y > 0)) throw std::invalid_argument("points of the upper half-plane need y > 0");
}

HPoint HPoint::from_complex(const Complex& z, unsigned bits) {
  return HPoint(Real(real(z)), Real(imag(z)), bits);
}

HPoint HPoint::parse(std::string_view text, unsigned bits) {
  PrecisionScope scope(bits);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("point must be given as \"x,y\"");
  Real x = parse_real(text.substr(0, comma));
  Real y = parse_real(text.substr(comma + 1));
  if (!(y > 0)) throw ParseError("point must lie in the upper half-plane (y > 0)");
  return HPoint(std::move(x), std::move(y), bits);
}

Complex act(const IntMatrix& g, const Complex& z) {
  const Complex num = Complex(z * Real(g.a)) + Real(g.b);
  const Complex den = Complex(z * Real(g.c)) + Real(g.d);
  return Complex(num / den);
}

IntMatrix reduce_to_fundamental_domain(const Complex& z0, Complex* reduced) {
  IntMatrix g;
  Complex z = z0;
  for (int step = 0; step < 10000; ++step) {
    const Real x = real(z);
    const auto shift = static_cast<std::int64_t>(std::llround(to_double(x)));
    if (shift != 0) {
      z -= Real(shift);
      g = IntMatrix{1, -shift, 0, 1} * g;
    }
    const Real norm = Real(real(z) * real(z) + imag(z) * imag(z));
    if (norm < Real(1) - Real(1e-30)) {
      z = Complex(Complex(-1) / z);
      g = IntMatrix{0, -1, 1, 0} * g;
      continue;
    }
    break;
  }
  if (reduced) *reduced = z;
  return g;
}

std::int64_t terms_for_height(unsigned bits, double y, std::int64_t pole_order) {
  const double a = 2 * kPi * y;
  const double b = 4 * kPi * std::sqrt(static_cast<double>(std::max<std::int64_t>(pole_order, 0)));
  const double c = bits * kLn2;
  const double s = (b + std::sqrt(b * b + 4 * a * c)) / (2 * a);
  return static_cast<std::int64_t>(std::ceil(1.1 * s * s)) + 16;
}

EvalResult eval_series(const LaurentSeries& f, const HPoint& z, unsigned bits,
                       double validity_height) {
  PrecisionScope scope(bits);
  const double y = to_double(z.y);
  if (!(y > validity_height)) {
    throw RegionGuard("expansion only valid for y > " + std::to_string(validity_height) +
                      ", got y = " + std::to_string(y));
  }
  EvalResult out;
  const double log_q = -2 * kPi * y;
  const auto coeffs = f.coefficients();
  const auto v = f.valuation();
  const auto P = f.precision();
  out.terms = static_cast<std::int64_t>(coeffs.size());

  // Tail estimate from the growth of the coefficient envelope: the largest
  // |c(n)| in each half of the last quarter. Local ratios of consecutive
  // coefficients are useless here, since coefficients of cusp forms change
  // sign and come arbitrarily close to 0.
  const auto quarter = std::max<std::int64_t>(2, (static_cast<std::int64_t>(coeffs.size()) + 3) / 4);
  const auto half = quarter / 2;
  const auto inner_begin = P - quarter;
  const auto outer_begin = P - half;
  double inner_max = -std::numeric_limits<double>::infinity();
  double outer_max = -std::numeric_limits<double>::infinity();
  double magnitude = 0.0;  // sum |c(n) q^n|
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    const auto n = v + static_cast<std::int64_t>(i);
    const double lc = log_abs(coeffs[i]);
    magnitude += std::exp(lc + n * log_q);
    if (n >= outer_begin) {
      outer_max = std::max(outer_max, lc);
    } else if (n >= inner_begin) {
      inner_max = std::max(inner_max, lc);
    }
  }
  double tail = 0.0;
  if (!std::isfinite(inner_max) || !std::isfinite(outer_max)) {
    out.tail_note = "no coefficient growth data in the last quarter; tail taken as 0";
  } else {
    // Envelope growth per step between the two halves (centres half apart).
    const double log_rho = (outer_max - inner_max) / static_cast<double>(std::max<std::int64_t>(1, half));
    const double log_ratio = log_rho + log_q;
    if (log_ratio >= 0) {
      throw DivergentTail("coefficient ratio " + std::to_string(std::exp(log_rho)) +
                          " exceeds 1/|q| = " + std::to_string(std::exp(-log_q)));
    }
    // |c(n)| <= max_{last half} |c| * rho^(n - P + 1) for n >= P.
    tail = std::exp(outer_max + std::max(0.0, log_rho) + P * log_q) / -std::expm1(log_ratio);
    std::ostringstream note;
    note << "heuristic geometric tail: envelope ratio " << std::exp(log_rho) << " over exponents >= "
         << inner_begin << ", |q| = " << std::exp(log_q);
    out.tail_note = note.str();
  }

  // Horner from the top exponent down, then multiply by q^v.
  const Complex q = q_of(z.z());
  Complex acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc *= q;
    if (sgn(coeffs[i]) != 0) acc += to_real(coeffs[i]);
  }
  out.value = Complex(acc * ipow(q, v));
  out.err_bound = tail + rounding_bound(bits, magnitude, out.terms);
  return out;
}

EvalResult eval_modular(const ModularFormSeries& f, const HPoint& z, unsigned bits,
                        double validity_height) {
  PrecisionScope scope(bits);
  Complex reduced;
  const IntMatrix g = reduce_to_fundamental_domain(z.z(), &reduced);
  auto inner = eval_series(f.series, HPoint::from_complex(reduced, bits), bits, validity_height);
  if (g.c == 0 && g.d == 1) return inner;
  // f(gz) = (cz+d)^weight f(z).
  const Complex j = Complex(z.z() * Real(g.c)) + Real(g.d);
  const Complex factor = ipow(j, -f.weight);
  const double scale = abs_double(factor);
  inner.value = Complex(inner.value * factor);
  inner.err_bound = inner.err_bound * scale + rounding_bound(bits, abs_double(inner.value), 8);
  return inner;
}

EvalResult slash(const ModularFormSeries& f, const IntMatrix& gamma, const HPoint& z, unsigned bits,
                 double validity_height) {
  PrecisionScope scope(bits);
  if (gamma.det() <= 0) throw std::invalid_argument("slash: det(gamma) must be positive");
  const Complex gz = act(gamma, z.z());
  auto inner = eval_series(f.series, HPoint::from_complex(gz, bits), bits, validity_height);
  const Complex j = Complex(z.z() * Real(gamma.c)) + Real(gamma.d);
  // det^(weight/2) (cz+d)^(-weight)
  const Real det_power = pow(Real(gamma.det()), Real(f.weight) / 2);
  const Complex factor = Complex(ipow(j, -f.weight) * det_power);
  inner.value = Complex(inner.value * factor);
  inner.err_bound *= abs_double(factor);
  return inner;
}

HeckeValue hecke_value(const ModularFormSeries& f, std::int64_t m, const HPoint& z, unsigned bits,
                       double tol, double validity_height) {
  if (m < 1) throw std::invalid_argument("hecke_value: m must be positive");
  PrecisionScope scope(bits);
  HeckeValue out;

  try {
    const auto image = t_op(f.series, f.weight, m);
    out.series_path =
        eval_series(image, z, bits, validity_height * static_cast<double>(m));
  } catch (const InsufficientPrecision&) {
  } catch (const DivergentTail&) {
  } catch (const RegionGuard&) {
  }

  // m^(2kappa-1) sum_{ad=m} sum_{b mod d} d^(-2kappa) f((az+b)/d)
  {
    EvalResult coset;
    coset.value = Complex(0);
    double err = 0.0;
    std::int64_t terms = 0;
    for (std::int64_t d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      const std::int64_t a = m / d;
      const Real weight_factor = pow(Real(d), Real(-f.weight));
      for (std::int64_t b = 0; b < d; ++b) {
        const Complex point = Complex(Complex(z.z() * Real(a)) + Real(b)) / Real(d);
        const auto value = eval_modular(f, HPoint::from_complex(point, bits), bits, validity_height);
        coset.value += Complex(value.value * weight_factor);
        err += value.err_bound * to_double(weight_factor);
        terms = std::max(terms, value.terms);
        if (coset.tail_note.empty()) coset.tail_note = value.tail_note;
      }
    }
    const Real front = pow(Real(m), Real(f.weight - 1));
    coset.value = Complex(coset.value * front);
    coset.err_bound = err * to_double(front);
    coset.terms = terms;
    out.coset_path = coset;
  }

  const auto acceptable = [&](const EvalResult& r) {
    const double magnitude = abs_double(r.value);
    return r.err_bound <= tol * magnitude || r.err_bound <= std::ldexp(1.0, -static_cast<int>(bits) / 2);
  };
  if (out.series_path && acceptable(*out.series_path)) {
    out.value = *out.series_path;
    out.path = "series";
  } else {
    out.value = *out.coset_path;
    out.path = "coset";
  }
  if (out.series_path && out.coset_path) {
    const double a = abs_double(out.series_path->value);
    const double b = abs_double(out.coset_path->value);
    const double diff = abs_double(Complex(out.series_path->value - out.coset_path->value));
    const double scale = std::max(a, b);
    out.relative_difference = scale > 0 ? diff / scale : diff;
    out.paths_agree =
        diff <= out.series_path->err_bound + out.coset_path->err_bound + tol * scale;
  }
  return out;
}

EvalResult alpha(unsigned bits) {
  const auto precision = terms_for_height(bits, 1.0, 1);
  const auto series = evaluate_formula("E8/Delta", precision).series;
  PrecisionScope scope(bits);
  return eval_series(series, HPoint(Real(0), Real(1), bits), bits);
}

CmReport cm_checks(unsigned bits, double tol, double j_tol) {
  CmReport report;
  PrecisionScope scope(bits);
  const Real sqrt7 = sqrt(Real(7));
  const HPoint zz(Real(1) / 2, Real(sqrt7 / 2), bits);
  const auto precision = terms_for_height(bits, to_double(zz.y), 1);

  const auto e4 = eval_series(eisenstein(4, precision).series, zz, bits).value;
  const auto e6 = eval_series(eisenstein(6, precision).series, zz, bits).value;
  const auto dl = eval_series(delta(precision).series, zz, bits).value;
  const auto jv = eval_series(j_function(precision).series, zz, bits).value;

  report.delta_imag_relative = to_double(Real(abs(imag(dl)) / abs(dl)));
  report.omega = pow(Real(-real(dl)), Real(1) / 12);
  const Real omega4 = pow(report.omega, 4);
  const Real omega6 = pow(report.omega, 6);

  const auto check = [&](std::string name, const Complex& value, const Real& expected, double t) {
    CmCheck c;
    c.name = std::move(name);
    c.value = real(value);
    c.expected = expected;
    c.relative_error = to_double(Real(abs(Complex(value - expected)) / abs(expected)));
    c.tolerance = t;
    c.pass = c.relative_error <= t;
    report.checks.push_back(std::move(c));
  };
  check("j", jv, Real(-3375), j_tol);
  check("E4/Omega^4", Complex(e4 / omega4), Real(15), tol);
  check("E6/(sqrt(7)*Omega^6)", Complex(e6 / Real(sqrt7 * omega6)), Real(27), tol);
  report.pass = report.delta_imag_relative <= tol &&
                std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CmCheck& c) { return c.pass; });
  return report;
}

Complex script_g_coefficient(const ModularFormSeries& g, int k, int ell, const HPoint& zz,
                             std::int64_t m, unsigned bits) {
  if (g.weight != 2 * ell - 2 * k) {
    throw std::invalid_argument("script_g_coefficient: g must have weight 2*ell - 2*k");
  }
  PrecisionScope scope(bits);
  const auto value = hecke_value(g, m, zz, bits).value.value;
  return Complex(value * pow(Real(m), Real(2 * k - ell)));
}

F6iEigenReport verify_f6i_eigen(std::int64_t m, std::int64_t N, unsigned bits,
                                const Rational& constant, double tol, std::int64_t sigma_offset) {
  if (m != 5 && m != 7) throw std::invalid_argument("verify_f6i_eigen: m must be 5 or 7");
  if (N < 1) throw std::invalid_argument("verify_f6i_eigen: N must be positive");
  F6iEigenReport report;
  report.m = m;
  report.constant = constant;

  const auto f = build("f6i", m * N + 1).series;
  const Rational eigen(sigma(5, static_cast<std::uint64_t>(m)) + sigma_offset);
  const auto lhs = subtract(t_op(f, 6, m), scale(f, eigen));

  // Enough terms for the reduced evaluation points (y >= sqrt(3)/2).
  const auto precision = terms_for_height(bits, 0.8660254037844386, m);
  const ModularFormSeries g{-4, build(m == 5 ? "g5" : "g7", precision).series};

  PrecisionScope scope(bits);
  const Real a = real(alpha(bits).value);
  const HPoint i_point(Real(0), Real(1), bits);
  Real fitted_sum = 0;
  for (std::int64_t n = 1; n <= N; ++n) {
    F6iEigenEntry e;
    e.n = n;
    e.exact = lhs.coefficient(n);
    const Complex scripted = Complex(script_g_coefficient(g, 3, 1, i_point, n, bits) / a);
    e.predicted = Complex(scripted * to_real(constant));
    const Real exact = to_real(e.exact);
    e.relative_error = to_double(Real(abs(Complex(e.predicted - exact)) / abs(exact)));
    e.fitted_constant = Real(exact / real(scripted));
    fitted_sum += e.fitted_constant;
    report.max_relative_error = std::max(report.max_relative_error, e.relative_error);
    report.entries.push_back(std::move(e));
  }
  report.fitted_constant = Real(fitted_sum / N);
  for (const auto& e : report.entries) {
    report.fitted_spread = std::max(
        report.fitted_spread,
        to_double(Real(abs(Real(e.fitted_constant - report.fitted_constant)) /
                       abs(report.fitted_constant))));
  }
  report.pass = report.max_relative_error <= tol;
  return report;
}

}  // namespace merohecke
