// Coset-target kernels: group multiplication vs orbit lookup, serial vs
// OpenMP.

#include <benchmark/benchmark.h>

#include "bruhat/descent.hpp"

namespace {

using namespace bruhat;

DescentSystem make_system(Family f, int rank, NodeSet j) {
  auto group = std::make_shared<const WeylGroup>(DiagramType{f, rank});
  return descent_system(group, j);
}

void run_kernel(benchmark::State& state, Family f, int rank, NodeSet j, Execution exec) {
  const auto sys = make_system(f, rank, j);
  for (auto _ : state) benchmark::DoNotOptimize(coset_targets(sys, exec));
  state.counters["cosets"] = static_cast<double>(sys.quotient().size());
  state.counters["S^J"] = static_cast<double>(sys.size());
}

void BM_A5_Reference(benchmark::State& s) { run_kernel(s, Family::A, 5, {}, Execution::Reference); }
void BM_A5_Serial(benchmark::State& s) { run_kernel(s, Family::A, 5, {}, Execution::Serial); }
void BM_A5_Parallel(benchmark::State& s) { run_kernel(s, Family::A, 5, {}, Execution::Parallel); }

void BM_D5_Reference(benchmark::State& s) { run_kernel(s, Family::D, 5, {}, Execution::Reference); }
void BM_D5_Serial(benchmark::State& s) { run_kernel(s, Family::D, 5, {}, Execution::Serial); }
void BM_D5_Parallel(benchmark::State& s) { run_kernel(s, Family::D, 5, {}, Execution::Parallel); }

// E6 with J = {2}: a non-smooth J, so |S^J| exceeds |S|.
void BM_E6_Serial(benchmark::State& s) {
  run_kernel(s, Family::E, 6, NodeSet::of({1}), Execution::Serial);
}
void BM_E6_Parallel(benchmark::State& s) {
  run_kernel(s, Family::E, 6, NodeSet::of({1}), Execution::Parallel);
}

// Row-level scaling on a larger quotient.
void BM_E7_Parallel(benchmark::State& s) {
  run_kernel(s, Family::E, 7, NodeSet::of({0, 1, 2}), Execution::Parallel);
}

}  // namespace

BENCHMARK(BM_A5_Reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_A5_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_A5_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_D5_Reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_D5_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_D5_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_E6_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_E6_Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_E7_Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
