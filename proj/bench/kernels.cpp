// Serial reference kernels against their OpenMP counterparts, plus whole runs.
#include <benchmark/benchmark.h>

#include <map>

#include "salpart/far_crop.hpp"
#include "salpart/integral.hpp"
#include "salpart/partition.hpp"
#include "salpart/synth.hpp"

namespace {

using namespace salpart;

const SaliencyMap& scene(std::size_t side) {
  static std::map<std::size_t, SaliencyMap> cache;
  auto it = cache.find(side);
  if (it == cache.end()) it = cache.emplace(side, random_scene(side, side, 1)).first;
  return it->second;
}

void BM_IntegralSerial(benchmark::State& state) {
  const SaliencyMap& map = scene(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::build_integral(map));
}

void BM_IntegralParallel(benchmark::State& state) {
  const SaliencyMap& map = scene(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_integral(map));
}

void BM_ColumnIntegralSerial(benchmark::State& state) {
  const SaliencyMap& map = scene(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(serial::build_column_integral(map));
}

void BM_ColumnIntegralParallel(benchmark::State& state) {
  const SaliencyMap& map = scene(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_column_integral(map));
}

void BM_SuppressSerial(benchmark::State& state) {
  const SaliencyMap& map = scene(state.range(0));
  const std::size_t side = map.rows();
  const CropBox box{side / 4, side / 4, 3 * side / 4, 3 * side / 4, 0};
  for (auto _ : state) benchmark::DoNotOptimize(serial::suppress(map, box));
}

void BM_SuppressParallel(benchmark::State& state) {
  const SaliencyMap& map = scene(state.range(0));
  const std::size_t side = map.rows();
  const CropBox box{side / 4, side / 4, 3 * side / 4, 3 * side / 4, 0};
  for (auto _ : state) benchmark::DoNotOptimize(suppress(map, box));
}

void BM_SmallestFarCrop(benchmark::State& state) {
  const SaliencyMap& map = scene(state.range(0));
  const ColumnIntegralMap colint = build_column_integral(map);
  const double threshold = 0.5 * map.total();
  for (auto _ : state) benchmark::DoNotOptimize(smallest_far_crop(map, colint, 1.0, threshold));
}

void BM_Partition(benchmark::State& state) {
  const SaliencyMap& map = scene(512);
  PartitionConfig config;
  config.k = static_cast<std::size_t>(state.range(0));
  config.strict_disjoint = state.range(1) != 0;
  std::uint64_t calls = 0;
  for (auto _ : state) {
    const PartitionResult result = partition(map, config);
    calls = 0;
    for (const RoundDiagnostics& r : result.rounds) calls += r.windows_searched;
    benchmark::DoNotOptimize(result.boxes.data());
  }
  state.counters["subarray_calls"] = static_cast<double>(calls);
}

BENCHMARK(BM_IntegralSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_IntegralParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_ColumnIntegralSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_ColumnIntegralParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_SuppressSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_SuppressParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_SmallestFarCrop)->Arg(256)->Arg(1024);
BENCHMARK(BM_Partition)->ArgsProduct({{1, 2, 4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
