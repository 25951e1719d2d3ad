// Serial reference vs OpenMP kernels. Thread count is taken from OMP_NUM_THREADS.

#include "permclass/antichain.hpp"
#include "permclass/enumeration.hpp"

#include <benchmark/benchmark.h>

using namespace permclass;

namespace {

const std::vector<Perm>& level(std::size_t n) {
  static const auto parents = enumerate_avoiders_serial({Perm{1, 3, 2, 4}}, n);
  return parents;
}

void BM_ExtendLevelSerial(benchmark::State& state) {
  const auto& parents = level(8);
  for (auto _ : state) benchmark::DoNotOptimize(extend_level_serial(parents, {Perm{1, 3, 2, 4}}));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(parents.size()));
}
BENCHMARK(BM_ExtendLevelSerial)->Unit(benchmark::kMillisecond);

void BM_ExtendLevelParallel(benchmark::State& state) {
  const auto& parents = level(8);
  for (auto _ : state) benchmark::DoNotOptimize(extend_level(parents, {Perm{1, 3, 2, 4}}));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(parents.size()));
}
BENCHMARK(BM_ExtendLevelParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

std::vector<Perm> mu_family(std::size_t top) {
  std::vector<Perm> members = four_basis();
  for (std::size_t i = 7; i <= top; i += 2) members.push_back(mu(i));
  return members;
}

void BM_AntichainSerial(benchmark::State& state) {
  const auto members = mu_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_antichain_serial(members));
}
BENCHMARK(BM_AntichainSerial)->Arg(17)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_AntichainParallel(benchmark::State& state) {
  const auto members = mu_family(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_antichain(members));
}
BENCHMARK(BM_AntichainParallel)->Arg(17)->Arg(25)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
