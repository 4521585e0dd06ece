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

#include <thread>

#include "builders.hpp"
#include "oracles.hpp"
#include "merohecke/forms.hpp"
#include "merohecke/hecke.hpp"
#include "merohecke/laurent_series.hpp"

using namespace merohecke;
using build_helpers::Q;

TEST(Forms, BernoulliMatchesAkiyamaTanigawa) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  for (unsigned k = 0; k <= 40; ++k) EXPECT_EQ(bernoulli(k), oracle::bernoulli(k)) << "B_" << k;
}

TEST(Forms, SigmaMatchesBruteForce) {
  EXPECT_EQ(sigma(5, 1), 1);
  EXPECT_EQ(sigma(5, 5), 3126);
  EXPECT_EQ(sigma(5, 7), 16808);
  for (unsigned r = 0; r <= 11; ++r) {
    for (std::uint64_t n = 1; n <= 60; ++n) EXPECT_EQ(sigma(r, n), oracle::sigma(r, n));
  }
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
}

TEST(Forms, EisensteinMatchesOracle) {
  const auto e4 = eisenstein(4, 5).series;
  EXPECT_EQ(e4.coefficient(1), 240);
  EXPECT_EQ(e4.coefficient(2), 2160);
  EXPECT_EQ(eisenstein(6, 3).series.coefficient(1), -504);
  for (int w = 4; w <= 26; w += 2) {
    const auto e = eisenstein(w, 40);
    EXPECT_EQ(e.weight, w);
    const auto expected = oracle::eisenstein(w, 40);
    for (int n = 0; n < 40; ++n) ASSERT_EQ(e.series.coefficient(n), expected[n]) << "E" << w << " q^" << n;
  }
  EXPECT_THROW(eisenstein(2, 5), std::invalid_argument);
}

TEST(Forms, E8OverDeltaDisplay) {
  const auto f = div(eisenstein(8, 6).series, delta(6).series);
  EXPECT_EQ(f.coefficient(-1), 1);
  EXPECT_EQ(f.coefficient(0), 504);
  EXPECT_EQ(f.coefficient(1), 73764);
  EXPECT_EQ(f.coefficient(2), 2695040);
}

TEST(Forms, DeltaMatchesProductOracle) {
  const auto tau = oracle::tau_by_product(250);
  const auto d = delta(250);
  EXPECT_EQ(d.weight, 12);
  EXPECT_EQ(d.series.valuation(), 1);
  EXPECT_EQ(d.series.coefficient(2), -24);
  EXPECT_EQ(d.series.coefficient(3), 252);
  for (int n = 1; n < 250; ++n) ASSERT_EQ(d.series.coefficient(n), tau[n]) << "tau(" << n << ")";
}

TEST(Forms, JFunction) {
  const auto j = j_function(10).series;
  EXPECT_EQ(j.valuation(), -1);
  EXPECT_EQ(j.leading_coefficient(), 1);
  EXPECT_EQ(j.coefficient(0), 744);
  EXPECT_EQ(j.coefficient(1), 196884);
  EXPECT_EQ(j.precision(), 10);
  const auto F = add(pow(eisenstein(4, 12).series, 3), scale(delta(12).series, Rational(3375)));
  const auto lhs = div(F, delta(12).series);
  const auto rhs = add(j_function(10).series, LaurentSeries::constant(Rational(3375), 10));
  EXPECT_TRUE(equals_to_precision(lhs, rhs).equal);
}

TEST(Forms, Dimensions) {
  EXPECT_EQ(dimension(0, BasisKind::Holomorphic), 1);
  EXPECT_EQ(dimension(2, BasisKind::Holomorphic), 0);
  EXPECT_EQ(dimension(6, BasisKind::Holomorphic), 1);
  EXPECT_EQ(dimension(12, BasisKind::Cuspidal), 1);
  EXPECT_EQ(dimension(14, BasisKind::Holomorphic), 1);
  EXPECT_EQ(dimension(24, BasisKind::Cuspidal), 2);
  for (int w = 4; w <= 60; w += 2) {
    EXPECT_EQ(dimension(w, BasisKind::Holomorphic) - dimension(w, BasisKind::Cuspidal), 1) << w;
  }
  EXPECT_EQ(dimension(-2, BasisKind::Holomorphic), 0);
}

TEST(Forms, BasisExamples) {
  const auto m6 = basis(6, BasisKind::Holomorphic, 10);
  ASSERT_EQ(m6.size(), 1U);
  EXPECT_EQ(m6.elements[0].series, eisenstein(6, 10).series);

  const auto s12 = basis(12, BasisKind::Cuspidal, 10);
  ASSERT_EQ(s12.size(), 1U);
  EXPECT_EQ(s12.elements[0].series, delta(10).series);

  const auto s24 = basis(24, BasisKind::Cuspidal, 10);
  ASSERT_EQ(s24.size(), 2U);
  EXPECT_EQ(s24.leading_exponent(0), 1);
  EXPECT_EQ(s24.leading_exponent(1), 2);
  EXPECT_EQ(s24.elements[0].series.coefficient(2), 0);
  EXPECT_EQ(s24.elements[1].series.coefficient(1), 0);
}

TEST(Forms, BasisEchelonInvariants) {
  for (int w = 4; w <= 40; w += 2) {
    for (const auto kind : {BasisKind::Holomorphic, BasisKind::Cuspidal}) {
      const auto b = basis(w, kind, 12);
      ASSERT_EQ(static_cast<int>(b.size()), dimension(w, kind));
      const std::int64_t start = kind == BasisKind::Holomorphic ? 0 : 1;
      for (std::size_t i = 0; i < b.size(); ++i) {
        EXPECT_EQ(b.leading_exponent(i), start + static_cast<std::int64_t>(i));
        EXPECT_EQ(b.elements[i].series.leading_coefficient(), 1);
        for (std::size_t k = 0; k < b.size(); ++k) {
          if (k != i) EXPECT_EQ(b.elements[i].series.coefficient(b.leading_exponent(k)), 0);
        }
      }
      if (kind == BasisKind::Holomorphic) EXPECT_EQ(b.elements[0].series.coefficient(0), 1);
    }
  }
}

TEST(Forms, Coordinates) {
  const auto s24 = basis(24, BasisKind::Cuspidal, 10);
  const auto d = delta(10).series;
  const auto f = mul(d, pow(eisenstein(4, 10).series, 3));
  const auto c = s24.coordinates(f);
  ASSERT_EQ(c.size(), 2U);
  const auto back = add(scale(s24.elements[0].series, c[0]), scale(s24.elements[1].series, c[1]));
  EXPECT_TRUE(equals_to_precision(back, f).equal);
}

TEST(Forms, HeckeCharpolyExamples) {
  EXPECT_EQ(hecke_charpoly_on_space(12, BasisKind::Cuspidal, 2), Polynomial({Rational(24), Rational(1)}));
  EXPECT_EQ(hecke_charpoly_on_space(6, BasisKind::Holomorphic, 5),
            Polynomial({Rational(-3126), Rational(1)}));
  const auto p = hecke_charpoly_on_space(24, BasisKind::Cuspidal, 2);
  ASSERT_EQ(p.degree(), 2);
  const Rational disc = p.coefficient(1) * p.coefficient(1) - 4 * p.coefficient(0);
  EXPECT_GT(disc, 0);
  EXPECT_EQ(p.coefficient(0).get_den(), 1);
  EXPECT_EQ(p.coefficient(1).get_den(), 1);
}

TEST(Forms, S24CharpolyMatchesAlternativeBasis) {
  for (const std::int64_t m : {2, 3, 5}) {
    EXPECT_EQ(hecke_charpoly_on_space(24, BasisKind::Cuspidal, m), oracle::s24_charpoly(m)) << "m=" << m;
  }
  EXPECT_EQ(oracle::s24_charpoly(2),
            Polynomial({Rational(-20468736), Rational(-1080), Rational(1)}));
}

TEST(Forms, EisensteinEigenforms) {
  for (const int w : {4, 6, 8, 10, 14}) {
    for (std::int64_t m = 2; m <= 10; ++m) {
      const auto e = eisenstein(w, 12 * m).series;
      const auto image = t_op(e, w, m);
      const auto expected = scale(truncate(e, image.precision()), Rational(sigma(w - 1, m)));
      EXPECT_EQ(image, expected) << "E" << w << " T" << m;
    }
  }
}

TEST(Forms, MemoIsSafeUnderConcurrentReaders) {
  std::vector<std::thread> pool;
  std::vector<LaurentSeries> results(8);
  for (int i = 0; i < 8; ++i) {
    pool.emplace_back([&, i] { results[i] = delta(120 + 10 * (i % 3)).series; });
  }
  for (auto& t : pool) t.join();
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(results[i], truncate(delta(200).series, 120 + 10 * (i % 3)));
  }
}
