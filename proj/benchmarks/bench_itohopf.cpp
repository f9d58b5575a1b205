// Copyright 2026 The itohopf Authors.
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

#include "itohopf/prodint.hpp"
#include "itohopf/quantise.hpp"
#include "itohopf/random.hpp"
#include "itohopf/ybe.hpp"

using namespace itohopf;

namespace {

RSeries example_series(const AlgebraPtr& alg, int order) {
  RSeries r(order, LegTensor(alg, 2));
  r[1] = example_r1(alg);
  return r;
}

// Product of two random tensors with words up to the given length.
void BM_ItoProduct(benchmark::State& state) {
  const auto alg = example_algebra();
  Rng rng(1);
  const int rank = static_cast<int>(state.range(0));
  const auto a = random_tensor(alg, rank, rng, 6);
  const auto b = random_tensor(alg, rank, rng, 6);
  for (auto _ : state) benchmark::DoNotOptimize(ito_product(a, b));
}
BENCHMARK(BM_ItoProduct)->DenseRange(2, 5);

void BM_IteratedCoproduct(benchmark::State& state) {
  const auto alg = example_algebra();
  Rng rng(2);
  const auto a = random_tensor(alg, 6, rng, 8);
  for (auto _ : state) benchmark::DoNotOptimize(iterated_coproduct(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IteratedCoproduct)->DenseRange(2, 4);

void BM_DoubleProduct(benchmark::State& state) {
  const auto alg = example_algebra();
  Rng rng(3);
  const auto r = random_r_series(alg, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(double_fb(r, false));
}
BENCHMARK(BM_DoubleProduct)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_QybeCheck(benchmark::State& state) {
  const auto alg = example_algebra();
  const auto r_matrix = double_fb(example_series(alg, static_cast<int>(state.range(0))), false).series;
  for (auto _ : state) benchmark::DoNotOptimize(qybe_check(r_matrix));
}
BENCHMARK(BM_QybeCheck)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DeformedCoproduct(benchmark::State& state) {
  const auto alg = example_algebra();
  const auto ctx = build_context(example_series(alg, static_cast<int>(state.range(0))), false);
  const auto k = TensorElt::word(alg, {1});
  for (auto _ : state) benchmark::DoNotOptimize(deformed_coproduct(ctx, k));
}
BENCHMARK(BM_DeformedCoproduct)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DeformedComponentByGrid(benchmark::State& state) {
  const auto alg = example_algebra();
  const auto ctx = build_context(example_series(alg, 4), false);
  const auto k = TensorElt::word(alg, {1});
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(deformed_component_by_grid(ctx, k, m, m));
}
BENCHMARK(BM_DeformedComponentByGrid)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
