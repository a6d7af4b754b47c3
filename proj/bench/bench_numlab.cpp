#include <benchmark/benchmark.h>

#include <vector>

#include "mplab/momentpoly.hpp"
#include "mplab/numlab.hpp"

namespace {

const mplab::FlagPointF kDense = mplab::to_float(mplab::representative(mplab::OrbitClass::Dense));

void BM_SampleOrbitSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(mplab::sample_orbit_serial(kDense, mplab::Subgroup::H, n, 7, 2, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleOrbitOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mplab::sample_orbit(kDense, mplab::Subgroup::H, n, 7, 2, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<mplab::R3Vector> cloud(std::size_t n, std::uint64_t seed) {
  const auto s = mplab::sample_orbit(kDense, mplab::Subgroup::G, n, seed, 2, 1);
  std::vector<mplab::R3Vector> out;
  out.reserve(n);
  for (const auto& x : s.samples) out.push_back(x.phi);
  return out;
}

void BM_HausdorffSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = cloud(n, 1), b = cloud(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mplab::hausdorff_distance_serial(a, b));
}

void BM_HausdorffOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = cloud(n, 1), b = cloud(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mplab::hausdorff_distance(a, b));
}

}  // namespace

BENCHMARK(BM_SampleOrbitSerial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_SampleOrbitOmp)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_HausdorffSerial)->Arg(1 << 10)->Arg(1 << 12);
BENCHMARK(BM_HausdorffOmp)->Arg(1 << 10)->Arg(1 << 12);

BENCHMARK_MAIN();
