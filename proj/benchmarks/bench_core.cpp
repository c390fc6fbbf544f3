#include <benchmark/benchmark.h>

#include "cubeprop/cube.hpp"
#include "cubeprop/fibration.hpp"
#include "cubeprop/generate.hpp"
#include "cubeprop/presheaf.hpp"

using namespace cubeprop;

static void BM_EnumHoms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enum_homs(n, n));
}
BENCHMARK(BM_EnumHoms)->DenseRange(1, 4);

static void BM_Validate(benchmark::State& state) {
  const RawTCSet raw = yoneda(static_cast<std::size_t>(state.range(0)), 2).to_raw();
  for (auto _ : state) benchmark::DoNotOptimize(TCSet::validate(raw));
}
BENCHMARK(BM_Validate)->DenseRange(0, 2);

static void BM_NegSub(benchmark::State& state) {
  Rng rng(1);
  const TCSet y = random_tcset(rng, GenConfig{});
  const Subobject a = random_subobject(rng, y);
  for (auto _ : state) benchmark::DoNotOptimize(neg_sub(a));
}
BENCHMARK(BM_NegSub);

static void BM_PointLifts(benchmark::State& state) {
  Rng rng(2);
  const Instance inst = random_fibrant_mono(rng, GenConfig{});
  for (auto _ : state) benchmark::DoNotOptimize(find_point_lifts(inst.map));
}
BENCHMARK(BM_PointLifts);

static void BM_IsHProp(benchmark::State& state) {
  Rng rng(3);
  const Instance inst = random_hprop(rng, GenConfig{});
  for (auto _ : state) benchmark::DoNotOptimize(is_hprop(inst.map));
}
BENCHMARK(BM_IsHProp);

BENCHMARK_MAIN();
