// Copyright 2026 The demoivre Authors
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

#include "demoivre/analytic.hpp"
#include "demoivre/galois.hpp"
#include "demoivre/instance.hpp"

namespace {

using namespace demoivre;

void BM_ReductionIdentity(benchmark::State& state) {
  const auto inst = make_instance(static_cast<int>(state.range(0)), Rational(-7, 3), Rational(11, 5));
  for (auto _ : state) benchmark::DoNotOptimize(verify_reduction_identity(inst));
}
BENCHMARK(BM_ReductionIdentity)->Arg(9)->Arg(31)->Arg(63);

void BM_AllZeros(benchmark::State& state) {
  const auto inst = make_instance(static_cast<int>(state.range(0)), 26, 675);
  for (auto _ : state) benchmark::DoNotOptimize(all_zeros(inst, state.range(1)));
}
BENCHMARK(BM_AllZeros)->Args({9, 192})->Args({31, 192})->Args({31, 1024});

void BM_PthPower(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const QuadElem x = pow(QuadElem(Rational(5, 3), Rational(-2, 7), -11), p) * QuadElem(2, 1, -11);
  for (auto _ : state) benchmark::DoNotOptimize(is_pth_power(x, p));
}
BENCHMARK(BM_PthPower)->Arg(3)->Arg(13)->Arg(31);

void BM_BruteForceFactor(benchmark::State& state) {
  const auto inst = make_instance(static_cast<int>(state.range(0)), 3, -7);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_factor(inst));
}
BENCHMARK(BM_BruteForceFactor)->Arg(9)->Arg(15);

void BM_Classify(benchmark::State& state) {
  const auto inst = filaseta_instance(11, 6);
  for (auto _ : state) benchmark::DoNotOptimize(classify_galois_group(inst));
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
