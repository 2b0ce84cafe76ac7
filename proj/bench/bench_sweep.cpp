// Parallel sweep against the serial reference on the same grid of cells.

#include <benchmark/benchmark.h>

#include <span>

#include "ridematch/sweep.hpp"

namespace {

using namespace ridematch;

constexpr double kAgentCounts[] = {10, 20, 30, 40};
constexpr std::uint64_t kSeeds[] = {1, 2, 3, 4, 5};

template <auto Sweep>
void BM_sweep(benchmark::State& state) {
  SimConfig base;
  base.n_rounds = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto cells = Sweep(base, SweepAxis::agents, std::span<const double>(kAgentCounts),
                       std::span<const std::uint64_t>(kSeeds),
                       std::span<const Mechanism>(kAllMechanisms));
    benchmark::DoNotOptimize(cells.data());
  }
  state.SetItemsProcessed(state.iterations() * std::size(kAgentCounts) * std::size(kSeeds) *
                          std::size(kAllMechanisms));
}

BENCHMARK(BM_sweep<run_sweep_serial>)->Name("sweep/serial")->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep<run_sweep>)->Name("sweep/openmp")->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
