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

#include <benchmark/benchmark.h>

#include "merohecke/forms.hpp"
#include "merohecke/hecke.hpp"
#include "merohecke/meroforms.hpp"
#include "merohecke/numeval.hpp"
#include "merohecke/poincare.hpp"
#include "merohecke/whbasis.hpp"

using namespace merohecke;

namespace {

void BM_Mul(benchmark::State& state) {
  const auto p = state.range(0);
  const auto a = eisenstein(4, p).series;
  const auto b = delta(p).series;
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Mul)->Arg(50)->Arg(200)->Arg(800);

void BM_Invert(benchmark::State& state) {
  const auto d = delta(state.range(0)).series;
  for (auto _ : state) benchmark::DoNotOptimize(invert(d));
}
BENCHMARK(BM_Invert)->Arg(50)->Arg(200)->Arg(800);

void BM_THecke(benchmark::State& state) {
  const auto g = build("g", 400).series;
  const auto m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(t_op(g, -10, m));
}
BENCHMARK(BM_THecke)->Arg(2)->Arg(5)->Arg(12);

// Memoized: after the first iteration this measures the cached path.
void BM_Basis(benchmark::State& state) {
  const auto w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wh_slice_basis(-w, 4, 60));
}
BENCHMARK(BM_Basis)->Arg(4)->Arg(10)->Arg(22);

void BM_Psi(benchmark::State& state) {
  const HPoint i(Real(0), Real(1), 128);
  const HPoint z(Real(0.25), Real(1.6), 128);
  const PoincareSeed seed{3, -1, i};
  for (auto _ : state) benchmark::DoNotOptimize(psi_truncated(seed, z, state.range(0), 128, 1));
}
BENCHMARK(BM_Psi)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
