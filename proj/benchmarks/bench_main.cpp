// Copyright 2026 The hyperorbits Authors
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

#include "hyperorbits/densities.hpp"
#include "hyperorbits/finite_fields.hpp"
#include "hyperorbits/orbits.hpp"
#include "hyperorbits/rings.hpp"
#include "hyperorbits/search.hpp"

using namespace hyperorbits;

namespace {

BinaryForm form_with_square_end(int n) {
  std::vector<Integer> c(n + 1);
  for (int i = 0; i < n; ++i) c[i] = (i % 2 == 0 ? 1 : -1) * (3 + 2 * i);
  c[n] = 49;
  return BinaryForm(c);
}

void BM_Discriminant(benchmark::State& state) {
  BinaryForm f = form_with_square_end(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(f));
}
BENCHMARK(BM_Discriminant)->DenseRange(4, 12, 4);

void BM_RingDiscriminant(benchmark::State& state) {
  BinaryForm f = form_with_square_end(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ring_discriminant(RankNRing(f)));
}
BENCHMARK(BM_RingDiscriminant)->DenseRange(4, 12, 4);

void BM_PairFromPoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BinaryForm f = sl2_act(Unimodular2(2, 1, 1, 1), form_with_square_end(n));
  CurvePoint P{-1, 2, 7};  // (0, 1) moved by the inverse of (2 1; 1 1)
  for (auto _ : state) benchmark::DoNotOptimize(pair_from_point(f, P));
}
BENCHMARK(BM_PairFromPoint)->DenseRange(2, 10, 4);

void BM_InvariantForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SymmetricPair v = pair_from_point(form_with_square_end(n), {0, 1, 7});
  for (auto _ : state) benchmark::DoNotOptimize(invariant_form(v));
}
BENCHMARK(BM_InvariantForm)->DenseRange(2, 10, 4);

void BM_MuReal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mu_real(n, 10000, 1));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_MuReal)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_MuPDistribution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mu_p_distribution(static_cast<int>(state.range(0)), 997));
}
BENCHMARK(BM_MuPDistribution)->Arg(4)->Arg(12)->Arg(22);

void BM_CountPairsN2(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_pairs_with_form(BinaryForm{1, 1, 3}, p));
}
BENCHMARK(BM_CountPairsN2)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_LocalSolubility(benchmark::State& state) {
  BinaryForm f{3, -7, 11, 5, -13};
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(locally_soluble_p(f, p));
}
BENCHMARK(BM_LocalSolubility)->Arg(2)->Arg(3)->Arg(13)->Arg(101);

void BM_SurveyCurve(benchmark::State& state) {
  BinaryForm f{3, -7, 11, 5, -13};
  for (auto _ : state) benchmark::DoNotOptimize(survey_curve(f, Integer(state.range(0))));
}
BENCHMARK(BM_SurveyCurve)->Arg(10)->Arg(50);

void BM_Genus0Product(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(genus0_product(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Genus0Product)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
