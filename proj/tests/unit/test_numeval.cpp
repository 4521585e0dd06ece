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

#include <gtest/gtest.h>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "generators.hpp"
#include "merohecke/errors.hpp"
#include "merohecke/forms.hpp"
#include "merohecke/meroforms.hpp"
#include "merohecke/numeval.hpp"

using namespace merohecke;

namespace {

constexpr unsigned kBits = 200;

double rel(const Complex& a, const Complex& b) {
  const Real d = abs(Complex(a - b));
  const Real s = abs(b);
  return static_cast<double>(s == 0 ? d : Real(d / s));
}

HPoint point(double x, double y, unsigned bits = kBits) { return HPoint(Real(x), Real(y), bits); }

ModularFormSeries eis(int w, std::int64_t p) { return eisenstein(w, p); }

}  // namespace

TEST(Numeval, ParseRealAndPoints) {
  PrecisionScope scope(kBits);
  EXPECT_EQ(parse_real("-3/4"), Real(-0.75));
  const Real s7 = parse_real("sqrt(7)/2");
  EXPECT_LT(abs(Real(s7 * s7 - Real(7) / 4)), Real(1e-50));
  EXPECT_LT(abs(Real(parse_real("2*sqrt(3)") - 2 * sqrt(Real(3)))), Real(1e-50));
  const auto p = HPoint::parse("1/2,sqrt(7)/2", kBits);
  EXPECT_EQ(p.x, Real(0.5));
  EXPECT_THROW(HPoint::parse("1,0", kBits), ParseError);
  EXPECT_THROW(HPoint::parse("1", kBits), ParseError);
  EXPECT_THROW(parse_real("abc"), ParseError);
}

TEST(Numeval, ConstantAndTerms) {
  const auto r = eval_series(LaurentSeries::constant(Rational(1), 5), point(0.3, 1.1), kBits);
  EXPECT_EQ(r.value, Complex(1));
  EXPECT_LE(r.err_bound, 1e-50);
  EXPECT_GT(terms_for_height(200, 1.0), terms_for_height(100, 1.0));
  EXPECT_GT(terms_for_height(200, 0.8), terms_for_height(200, 1.0));
  EXPECT_GT(terms_for_height(200, 1.0, 5), terms_for_height(200, 1.0, 0));
}

// alpha = 9 * 2^12 * pi^6 / Gamma(1/4)^8, from E4(i) = 3 Gamma(1/4)^8 / (2 pi)^6 and
// Delta(i) = Gamma(1/4)^24 / (2^24 pi^18).
TEST(Numeval, AlphaAgainstGammaClosedForm) {
  PrecisionScope scope(kBits);
  const auto a = alpha(kBits);
  const Real pi = boost::math::constants::pi<Real>();
  const Real g = boost::math::tgamma(Real(1) / 4);
  const Real expected = Real(9 * 4096) * pow(pi, 6) / pow(g, 8);
  EXPECT_LT(rel(a.value, Complex(expected)), 1e-40);
}

TEST(Numeval, ClassicalValues) {
  const auto j = j_function(200);
  const ModularFormSeries jf{0, j.series};
  EXPECT_LT(rel(eval_modular(jf, point(0, 1), kBits).value, Complex(1728)), 1e-40);
  const auto rho = HPoint::parse("1/2,sqrt(3)/2", kBits);
  EXPECT_LT(static_cast<double>(abs(eval_modular(jf, rho, kBits).value)), 1e-35);
  const auto cm = HPoint::parse("1/2,sqrt(7)/2", kBits);
  EXPECT_LT(rel(eval_modular(jf, cm, kBits).value, Complex(-3375)), 1e-40);
  EXPECT_LT(static_cast<double>(abs(eval_modular(eis(6, 200), point(0, 1), kBits).value)), 1e-45);
}

TEST(Numeval, SlashInvariance) {
  const auto d = delta(200);
  const auto z = point(0.13, 0.9);
  const auto base = eval_modular(d, z, kBits).value;
  for (const IntMatrix g : {IntMatrix{0, -1, 1, 0}, IntMatrix{1, 1, 0, 1}, IntMatrix{2, 1, 1, 1},
                            IntMatrix{1, 0, 3, 1}}) {
    EXPECT_LT(rel(slash(d, g, z, kBits).value, base), 1e-35) << g.a << g.b << g.c << g.d;
  }
  // eval_modular and the plain sum agree where the latter converges.
  const auto high = point(0.4, 1.3);
  EXPECT_LT(rel(eval_modular(d, high, kBits).value, eval_series(d.series, high, kBits).value), 1e-40);
  EXPECT_THROW(slash(d, IntMatrix{0, 1, 1, 0}, z, kBits), std::invalid_argument);
}

TEST(Numeval, FundamentalDomainReduction) {
  PrecisionScope scope(kBits);
  Complex reduced;
  const auto z = point(3.7, 0.02).z();
  const auto g = reduce_to_fundamental_domain(z, &reduced);
  EXPECT_EQ(g.det(), 1);
  EXPECT_LE(abs(reduced.real()), Real(0.5) + Real(1e-30));
  EXPECT_GE(abs(reduced), Real(1) - Real(1e-30));
  EXPECT_LT(rel(act(g, z), reduced), 1e-40);
}

TEST(Numeval, HeckeValues) {
  PrecisionScope scope(kBits);
  const auto e6 = eis(6, 300);
  const auto one = hecke_value(e6, 1, point(0.2, 1.1), kBits);
  EXPECT_LT(rel(one.value.value, eval_modular(e6, point(0.2, 1.1), kBits).value), 1e-40);

  // E6 | T5 = sigma_5(5) E6, which vanishes at i.
  const auto at_i = hecke_value(e6, 5, point(0, 1), kBits);
  EXPECT_LT(static_cast<double>(abs(at_i.value.value)), 1e-30);
  const auto at_2i = hecke_value(e6, 5, point(0, 2), kBits);
  const Complex expected = Complex(eval_modular(e6, point(0, 2), kBits).value * Real(3126));
  EXPECT_LT(rel(at_2i.value.value, expected), 1e-35);
  EXPECT_THROW(hecke_value(e6, 0, point(0, 1), kBits), std::invalid_argument);
}

TEST(Numeval, G5HeckeTwoPaths) {
  const auto g5 = build("g5", 400);
  const ModularFormSeries f{g5.weight, g5.series};
  const auto v = hecke_value(f, 5, point(0, 1), kBits, 1e-25);
  ASSERT_TRUE(v.coset_path.has_value());
  ASSERT_TRUE(v.series_path.has_value());
  ASSERT_TRUE(v.relative_difference.has_value());
  EXPECT_LT(*v.relative_difference, 1e-25);
  EXPECT_TRUE(v.paths_agree);
}

TEST(Numeval, RandomTwoPathAgreement) {
  gen::Source src(20260301);
  const std::vector<ModularFormSeries> forms = {eis(4, 400), eis(6, 400), delta(400),
                                                ModularFormSeries{16, mul(eis(4, 400).series, delta(400).series)}};
  for (int i = 0; i < 50; ++i) {
    const auto& f = forms[static_cast<std::size_t>(src.integer(0, 3))];
    const std::int64_t m = src.integer(2, 5);
    const double x = static_cast<double>(src.integer(-50, 50)) / 100.0;
    const double y = 0.9 + static_cast<double>(src.integer(0, 100)) / 100.0;
    const auto v = hecke_value(f, m, point(x, y, 160), 160, 1e-20);
    EXPECT_TRUE(v.paths_agree) << "case " << i << " m=" << m << " z=" << x << "+" << y << "i";
    if (v.relative_difference) {
      EXPECT_LT(*v.relative_difference, 1e-15) << "case " << i;
    }
  }
}

TEST(Numeval, Guards) {
  const auto f6i = build("f6i", 60);
  EXPECT_THROW(eval_series(f6i.series, point(0, 0.95), kBits, f6i.validity_height), RegionGuard);
  EXPECT_NO_THROW(eval_series(f6i.series, point(0, 2), kBits, f6i.validity_height));
  std::vector<Rational> geometric;
  Rational c(1);
  for (int n = 0; n < 60; ++n) {
    geometric.push_back(c);
    c *= 2;
  }
  const LaurentSeries g(0, geometric);
  EXPECT_THROW(eval_series(g, point(0, 0.05), kBits), DivergentTail);
  EXPECT_NO_THROW(eval_series(g, point(0, 1), kBits));
}

TEST(Numeval, PrecisionMonotone) {
  const auto d = delta(400);
  const auto z = point(0.1, 1.2, 256);
  const auto lo = eval_series(d.series, HPoint(z.x, z.y, 128), 128);
  const auto hi = eval_series(d.series, z, 256);
  EXPECT_LE(hi.err_bound, lo.err_bound);
  PrecisionScope scope(256);
  EXPECT_LE(static_cast<double>(abs(Complex(hi.value - lo.value))), lo.err_bound + hi.err_bound + 1e-30);
}

TEST(Numeval, CmChecks) {
  const auto r = cm_checks(kBits);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.checks.size(), 3U);
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.relative_error;
}

TEST(Numeval, ScriptGLinear) {
  const auto g5 = build("g5", 300);
  const ModularFormSeries f{g5.weight, g5.series};
  const ModularFormSeries twice{g5.weight, scale(g5.series, Rational(2))};
  const auto zz = point(0, 1);
  const auto a = script_g_coefficient(f, 3, 1, zz, 2, kBits);
  const auto b = script_g_coefficient(twice, 3, 1, zz, 2, kBits);
  PrecisionScope scope(kBits);
  EXPECT_LT(rel(b, Complex(a * Real(2))), 1e-30);
  EXPECT_THROW(script_g_coefficient(f, 3, 2, zz, 2, kBits), std::invalid_argument);
}

// The exact coefficients fit constant 1, not the printed -2^-10. Shifting the
// eigenvalue by 1 moves the n = 1 coefficient by c(1)/c(m) ~ exp(-2 pi (m-1)),
// so the control is only visible at a tolerance well below that.
TEST(Numeval, F6iEigenConstants) {
  for (const std::int64_t m : {5, 7}) {
    const auto fitted = verify_f6i_eigen(m, 6, kBits, Rational(1), 1e-30);
    EXPECT_TRUE(fitted.pass) << m << " " << fitted.max_relative_error;
    EXPECT_LT(fitted.fitted_spread, 1e-30);
    const auto printed = verify_f6i_eigen(m, 6, kBits, Rational(-1, 1024));
    EXPECT_FALSE(printed.pass);
    const auto shifted = verify_f6i_eigen(m, 6, kBits, Rational(1), 1e-30, 1);
    EXPECT_FALSE(shifted.pass);
    ASSERT_FALSE(shifted.entries.empty());
    EXPECT_GT(shifted.entries[0].relative_error, 1e-20);
  }
  EXPECT_THROW(verify_f6i_eigen(3, 6, kBits, Rational(1)), std::invalid_argument);
}
