// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "nctk/distance.hpp"
#include "nctk/standard_model.hpp"

using namespace nctk;
using namespace nctk::testing;

namespace {

void BM_HermitianEig(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ComplexMatrix h = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(4, 96);

void BM_OperatorNorm(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix m = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm(m));
}
BENCHMARK(BM_OperatorNorm)->RangeMultiplier(2)->Range(4, 96);

void BM_M2Distance(benchmark::State& state) {
  const auto t = m2_triple(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  const PureState a = make_state(t.algebra, 0, {s, s});
  const PureState b = make_state(t.algebra, 0, {s, Complex{0.0, s}});
  for (auto _ : state) benchmark::DoNotOptimize(spectral_distance(t, a, b));
}
BENCHMARK(BM_M2Distance)->Unit(benchmark::kMicrosecond);

void BM_TwoPointDistance(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto t = two_point_matrix(random_unit_vector(rng, static_cast<std::size_t>(state.range(0))));
  const PureState a = make_state(t.algebra, 0, random_unit_vector(rng, t.algebra.component(0).n));
  const PureState b = make_state(t.algebra, 0, random_unit_vector(rng, t.algebra.component(0).n));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_distance(t, a, b));
}
BENCHMARK(BM_TwoPointDistance)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_BuildStandardModel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_internal_triple());
}
BENCHMARK(BM_BuildStandardModel)->Unit(benchmark::kMillisecond);

void BM_SheetDistance(benchmark::State& state) {
  const StandardModelGeometry sm = build_internal_triple();
  const FiniteSpectralTriple t = higgs_fluctuation(sm, {0.2, Complex{0.0, 0.1}});
  for (auto _ : state) benchmark::DoNotOptimize(sheet_distance(t));
}
BENCHMARK(BM_SheetDistance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
