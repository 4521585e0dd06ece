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

#include "builders.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "merohecke/errors.hpp"
#include "merohecke/forms.hpp"
#include "merohecke/hecke.hpp"

using namespace merohecke;
using build_helpers::Q;
using build_helpers::series;

TEST(Hecke, VOperator) {
  EXPECT_EQ(v_op(series(1, {1}), 3), series(3, {1}));
  const auto v = v_op(series(-1, {1, 1}), 2);
  EXPECT_EQ(v.valuation(), -2);
  EXPECT_EQ(v.precision(), 2 * (1 - 1) + 1);
  EXPECT_EQ(v.coefficient(-2), 1);
  EXPECT_EQ(v.coefficient(0), 1);
  const auto dv = v_op(delta(10).series, 2);
  EXPECT_EQ(dv.valuation(), 2);
  EXPECT_EQ(dv.coefficient(4), -24);
  EXPECT_EQ(dv.precision(), 2 * 9 + 1);
}

TEST(Hecke, UOperator) {
  EXPECT_EQ(u_op(series(2, {1}), 2), series(1, {1}));
  const auto d = delta(20).series;
  EXPECT_EQ(u_op(d, 2).coefficient(1), -24);
  EXPECT_EQ(u_op(d, 2).precision(), 10);
  EXPECT_EQ(u_op(d, 3).precision(), 7);
  const auto f = series(-3, {2, 0, 5, 7, 1, 1, 9});
  for (std::int64_t m = 2; m <= 4; ++m) {
    EXPECT_TRUE(equals_to_precision(u_op(v_op(f, m), m), f).equal);
  }
}

TEST(Hecke, DeltaIsAnEigenform) {
  const auto d = delta(41).series;
  const auto image = t_op(d, 12, 2);
  EXPECT_EQ(image.precision(), 21);
  EXPECT_EQ(image, scale(truncate(d, 21), Rational(-24)));
}

TEST(Hecke, TOnF6iFirstCoefficient) {
  const auto f = div(delta(40).series, eisenstein(6, 40).series);
  const auto image = t_op(f, 6, 5);
  EXPECT_EQ(image.coefficient(1), f.coefficient(5));
}

TEST(Hecke, GTwoDisplay) {
  const auto e4 = eisenstein(4, 20).series;
  const auto d = delta(20).series;
  const auto g = div(mul(mul(e4, e4), eisenstein(6, 20).series), mul(d, d));
  const auto image = scale(t_op(g, -10, 2), Rational(2048));
  EXPECT_EQ(image.valuation(), -4);
  const std::vector<const char*> expected = {"1", "0", "24", "2048", "-402751440", "-7553771839488"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(image.coefficient(-4 + static_cast<std::int64_t>(i)), Q(expected[i]));
  }
}

TEST(Hecke, NegativeWeightGivesRationals) {
  const auto image = t_op(series(-1, {1, 0, 0, 0, 0}), -10, 2);
  EXPECT_EQ(image.coefficient(-2), Q("1/2048"));
  EXPECT_EQ(image.coefficient(-1), 0);
  const auto pole = t_op(series(-2, {1, 0, 0, 0, 0, 0, 0, 0}), -10, 2);
  EXPECT_EQ(pole.coefficient(-4), Q("1/2048"));
  EXPECT_EQ(pole.coefficient(-1), 1);
}

TEST(Hecke, ConstantTermUsesGcdWithZero) {
  // c'(0) = sum_{r | m} r^(2kappa-1) c(0)
  const auto f = LaurentSeries::constant(Rational(1), 12);
  const auto image = t_op(f, 4, 6);
  EXPECT_EQ(image.coefficient(0), sigma(3, 6));
}

TEST(Hecke, EmptyWindowThrows) {
  // Window [ceil(3/5), ceil(4/5)) = [1, 1).
  EXPECT_THROW(t_op(series(3, {1}), 12, 5), InsufficientPrecision);
  EXPECT_THROW(t_op(LaurentSeries::zero(-1), 12, 2), InsufficientPrecision);
  EXPECT_EQ(t_op(LaurentSeries::zero(10), 12, 3), LaurentSeries::zero(4));
}

TEST(Hecke, CommutationExamples) {
  const auto j = j_function(80).series;
  const auto j744 = subtract(j, LaurentSeries::constant(Rational(744), 80));
  EXPECT_TRUE(t_op_commutes_check(j744, 0, 2, 3).ok());
  EXPECT_TRUE(t_op_commutes_check(j744, 0, 2, 3).multiplicativity_checked);
  EXPECT_TRUE(t_op_commutes_check(delta(80).series, 12, 2, 4).ok());
  const auto e8d = div(eisenstein(8, 80).series, delta(80).series);
  EXPECT_TRUE(t_op_commutes_check(e8d, -4, 2, 3).ok());
}

TEST(Hecke, EigenformStability) {
  for (const int w : {4, 6, 8, 10, 12, 14}) {
    const auto space = w == 12 ? delta(150).series : eisenstein(w, 150).series;
    for (std::int64_t m = 1; m <= 12; ++m) {
      const auto image = t_op(space, w, m);
      const Rational lambda = w == 12 ? space.coefficient(m) : Rational(sigma(w - 1, m));
      EXPECT_EQ(image, scale(truncate(space, image.precision()), lambda)) << "w " << w << " m " << m;
    }
  }
}

TEST(Hecke, DecompositionIdentity) {
  gen::Source src(20261016);
  for (int i = 0; i < 40; ++i) {
    const auto f = src.series(-3, 2, 60);
    const int weight = 2 * static_cast<int>(src.integer(-6, 8));
    const auto m = src.integer(2, 8);
    if (f.precision() <= m * (std::max<std::int64_t>(f.valuation(), 0) + 1)) continue;
    LaurentSeries t;
    try {
      t = t_op(f, weight, m);
    } catch (const InsufficientPrecision&) {
      continue;
    }
    LaurentSeries sum = LaurentSeries::zero(t.precision());
    for (std::int64_t r = 1; r <= m; ++r) {
      if (m % r != 0) continue;
      sum = add(sum, scale(v_op(u_op(f, m / r), r), rational_pow(Rational(r), weight - 1)));
    }
    const auto cmp = equals_to_precision(t, sum);
    EXPECT_TRUE(cmp.equal) << "seed case " << i;
    EXPECT_GE(cmp.window_end, t.precision());
  }
}

TEST(Hecke, Integrality) {
  gen::Source src(7);
  for (int i = 0; i < 60; ++i) {
    const auto f = src.integer_series(-3, 3, 30, 60);
    const int weight = 2 * static_cast<int>(src.integer(1, 8));
    const auto m = src.integer(2, 6);
    const auto t = t_op(f, weight, m);
    for (const auto& c : t.coefficients()) ASSERT_EQ(c.get_den(), 1);
  }
}

TEST(Hecke, MatchesSparseOracle) {
  gen::Source src(99);
  for (int i = 0; i < 50; ++i) {
    const auto f = src.series(-4, 3, 50);
    const int weight = 2 * static_cast<int>(src.integer(-6, 7));
    const auto m = src.integer(1, 6);
    LaurentSeries t;
    try {
      t = t_op(f, weight, m);
    } catch (const InsufficientPrecision&) {
      continue;
    }
    oracle::Sparse s;
    for (auto n = f.valuation(); n < f.precision(); ++n) s[n] = f.coefficient(n);
    const auto model = oracle::hecke(s, weight, m, t.valuation(), t.precision());
    for (auto n = t.valuation(); n < t.precision(); ++n) {
      const auto it = model.find(n);
      ASSERT_EQ(t.coefficient(n), it == model.end() ? Rational(0) : it->second);
    }
  }
}
