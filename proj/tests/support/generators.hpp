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

#ifndef MEROHECKE_TESTS_GENERATORS_HPP
#define MEROHECKE_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "merohecke/laurent_series.hpp"
#include "merohecke/rational.hpp"
#include "merohecke/whbasis.hpp"

namespace gen {

// Seeded source for property tests; every failure message prints the seed.
class Source {
 public:
  explicit Source(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  merohecke::Rational rational(std::int64_t num_bound = 50, std::int64_t den_bound = 7);
  merohecke::Rational nonzero_rational(std::int64_t num_bound = 50, std::int64_t den_bound = 7);

  // Series with valuation in [vlo, vhi], between 1 and max_len stored terms,
  // nonzero leading coefficient, some interior zeros.
  merohecke::LaurentSeries series(std::int64_t vlo, std::int64_t vhi, std::int64_t max_len);

  // Integer-coefficient series, for integrality checks.
  merohecke::LaurentSeries integer_series(std::int64_t vlo, std::int64_t vhi, std::int64_t min_len,
                                          std::int64_t max_len);

  // Principal part with poles up to max_pole and optional constant term.
  merohecke::PrincipalPart principal_part(std::int64_t max_pole, bool with_constant);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace gen

#endif  // MEROHECKE_TESTS_GENERATORS_HPP
