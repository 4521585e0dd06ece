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

#include "merohecke/poincare.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace merohecke {

namespace {

struct Bezout {
  std::int64_t a;
  std::int64_t b;
};

// a, b with a*d - b*c = 1 for coprime (c, d).
Bezout complete(std::int64_t c, std::int64_t d) {
  if (c == 0) return {d, 0};
  std::int64_t old_r = d, r = c, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t qt = old_r / r;
    std::int64_t tmp = old_r - qt * r;
    old_r = r;
    r = tmp;
    tmp = old_s - qt * s;
    old_s = s;
    s = tmp;
    tmp = old_t - qt * t;
    old_t = t;
    t = tmp;
  }
  // old_s*d + old_t*c = old_r = +-1
  return {old_s * old_r, -old_t * old_r};
}

double to_double(const Real& x) { return x.convert_to<double>(); }

struct Slot {
  Complex full{0};
  Complex half{0};
  std::int64_t terms = 0;
};

}  // namespace

int elliptic_order(const HPoint& zz) {
  PrecisionScope scope(zz.bits);
  Complex reduced;
  reduce_to_fundamental_domain(zz.z(), &reduced);
  const Real tol = ldexp(Real(1), -static_cast<int>(zz.bits / 2));
  const Real x = real(reduced);
  const Real y = imag(reduced);
  if (abs(x) < tol && abs(Real(y - 1)) < tol) return 2;
  const Real h = sqrt(Real(3)) / 2;
  if (abs(Real(abs(x) - Real(0.5))) < tol && abs(Real(y - h)) < tol) return 3;
  return 1;
}

PsiResult psi_truncated(const PoincareSeed& seed, const HPoint& z, std::int64_t bound, unsigned bits,
                        unsigned threads) {
  if (seed.k < 2) throw std::invalid_argument("psi_truncated: need k >= 2");
  if (bound < 1) throw std::invalid_argument("psi_truncated: bound must be positive");
  PsiResult out;
  out.bound = bound;
  PrecisionScope scope(bits);
  out.value = Complex(0);
  out.half_bound_value = Complex(0);

  const int omega = elliptic_order(seed.zz);
  const int residue = ((seed.ell + seed.k) % omega + omega) % omega;
  if (residue != 0) {
    out.vanishing = true;
    out.note = "VanishingSeries: ell = " + std::to_string(seed.ell) + " is not congruent to -k = " +
               std::to_string(-seed.k) + " mod " + std::to_string(omega);
    return out;
  }

  const Complex zz = seed.zz.z();
  const Complex zz_bar = conj(zz);
  const Complex zv = z.z();
  const int two_k = 2 * seed.k;
  const std::int64_t half = bound / 2;

  std::vector<Slot> slots(static_cast<std::size_t>(2 * bound + 1));
  std::atomic<std::int64_t> next{-bound};

  const auto worker = [&] {
    for (std::int64_t c = next++; c <= bound; c = next++) {
      Slot& slot = slots[static_cast<std::size_t>(c + bound)];
      for (std::int64_t d = -bound; d <= bound; ++d) {
        if (std::gcd(c, d) != 1) continue;
        const auto [a, b] = complete(c, d);
        const Complex w0 = act(IntMatrix{a, b, c, d}, zv);
        const auto t0 = -static_cast<std::int64_t>(std::llround(to_double(Real(real(w0)))));
        const Complex w = w0 + Real(t0);
        const Complex automorphy = ipow(Complex(Complex(zv * Real(c)) + Real(d)), -two_k);
        const bool inner = std::max(std::abs(c), std::abs(d)) <= half;
        Complex row(0);
        Complex row_half(0);
        for (std::int64_t t = -bound; t <= bound; ++t) {
          const Complex wt = w + Real(t);
          const Complex term = Complex(ipow(Complex(wt - zz_bar), -two_k - seed.ell) *
                                       ipow(Complex(wt - zz), seed.ell));
          row += term;
          if (inner && std::abs(t) <= half) row_half += term;
          ++slot.terms;
        }
        slot.full += Complex(row * automorphy);
        if (inner) slot.half += Complex(row_half * automorphy);
      }
    }
  };

  unsigned count = threads ? threads : std::max(1U, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::int64_t>(count, 2 * bound + 1));
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (unsigned i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& slot : slots) {
    out.value += slot.full;
    out.half_bound_value += slot.half;
    out.terms += slot.terms;
  }
  const double magnitude = to_double(Real(abs(out.value)));
  const double drift = to_double(Real(abs(Complex(out.value - out.half_bound_value))));
  out.tail_estimate =
      std::max(drift, magnitude * std::pow(static_cast<double>(bound), 1.0 - two_k));
  out.note = "tail estimate is heuristic (B/2 drift and B^(1-2k) scale), not certified";
  return out;
}

PsiTwoVariableReport psi_two_variable_check(int k, int ell, const HPoint& zz, const HPoint& z,
                                            std::int64_t n, std::int64_t bound, unsigned bits,
                                            unsigned threads) {
  if (n < 1) throw std::invalid_argument("psi_two_variable_check: n must be positive");
  PrecisionScope scope(bits);
  PsiTwoVariableReport report;
  report.n = n;
  report.lhs = Complex(0);
  report.rhs = Complex(0);
  const int two_k = 2 * k;

  // n^(2k-1) sum_{ad=n} sum_{b mod d} d^(-2k) Psi((az+b)/d)
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const std::int64_t a = n / d;
    for (std::int64_t b = 0; b < d; ++b) {
      const Complex point = Complex(Complex(z.z() * Real(a)) + Real(b)) / Real(d);
      const auto psi = psi_truncated(PoincareSeed{k, ell, zz}, HPoint::from_complex(point, bits), bound,
                                     bits, threads);
      report.tail = std::max(report.tail, psi.tail_estimate);
      report.lhs += Complex(psi.value * pow(Real(d), Real(-two_k)));
    }
  }
  report.lhs = Complex(report.lhs * pow(Real(n), Real(two_k - 1)));

  // (1/n) sum_{r|n} r^(2k) sum_{j < n/r} Psi with pole at (r^2 zz + r j)/n
  for (std::int64_t r = 1; r <= n; ++r) {
    if (n % r != 0) continue;
    for (std::int64_t j = 0; j < n / r; ++j) {
      const Complex pole = Complex(Complex(zz.z() * Real(r * r)) + Real(r * j)) / Real(n);
      const auto psi = psi_truncated(PoincareSeed{k, ell, HPoint::from_complex(pole, bits)}, z, bound,
                                     bits, threads);
      report.tail = std::max(report.tail, psi.tail_estimate);
      report.rhs += Complex(psi.value * pow(Real(r), Real(two_k)));
    }
  }
  report.rhs = Complex(report.rhs / Real(n));

  const double scale = std::max(to_double(Real(abs(report.lhs))), to_double(Real(abs(report.rhs))));
  const double diff = to_double(Real(abs(Complex(report.lhs - report.rhs))));
  report.relative_difference = scale > 0 ? diff / scale : diff;
  return report;
}

}  // namespace merohecke
