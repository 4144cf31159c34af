/*
 * Copyright 2026 The bidisk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <benchmark/benchmark.h>

#include "bidisk/kernels.hpp"

using namespace bidisk;

namespace {

Poly2<cd> ex1() {
  Poly2<cd> p(1, 2);
  p.at(0, 0) = 4;
  p.at(1, 0) = -1;
  p.at(0, 1) = -3;
  p.at(1, 1) = -1;
  p.at(0, 2) = 1;
  return p;
}

Poly2<cd> g2() {
  Poly2<cd> q(1, 1);
  q.at(0, 0) = 1;
  q.at(1, 0) = -1;
  q.at(0, 1) = -1;
  q.at(1, 1) = 1;
  return q;
}

Exec mode(const benchmark::State &st) { return st.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_torus_l2(benchmark::State &st) {
  auto p = ex1(), q = g2();
  for (auto _ : st) benchmark::DoNotOptimize(torus_l2(q, p, int(st.range(0)), mode(st)));
}
BENCHMARK(BM_torus_l2)->ArgsProduct({{256, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_weight_fourier(benchmark::State &st) {
  auto p = ex1();
  for (auto _ : st) benchmark::DoNotOptimize(weight_fourier(p, 4, 4, int(st.range(0)), mode(st)));
}
BENCHMARK(BM_weight_fourier)->ArgsProduct({{256, 512}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_stability_sweep(benchmark::State &st) {
  auto p = ex1();
  for (auto _ : st) benchmark::DoNotOptimize(stability_sweep(p, int(st.range(0)), 512, 1e-6, mode(st)));
}
BENCHMARK(BM_stability_sweep)->ArgsProduct({{32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_torus_ratio_max(benchmark::State &st) {
  auto p = ex1(), q = g2();
  auto num = [&](cd a, cd b) { return std::norm(q(a, b)); };
  auto den = [&](cd a, cd b) { return std::norm(p(a, b)); };
  for (auto _ : st) benchmark::DoNotOptimize(torus_ratio_max(num, den, int(st.range(0)), mode(st)));
}
BENCHMARK(BM_torus_ratio_max)->ArgsProduct({{512, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
