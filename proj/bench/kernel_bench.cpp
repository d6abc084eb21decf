// Serial reference against the OpenMP path for the two parallel kernels.
// Arg(0) is the thread count; 1 selects the serial code.

#include <benchmark/benchmark.h>

#include <random>
#include <thread>

#include "dispersion/clique.hpp"
#include "dispersion/exact.hpp"
#include "dispersion/generate.hpp"

namespace {

using namespace dispersion;

void BM_SolveExact(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    const PointSet p = generate(Distribution::uniform_square, 300, 11);
    for (auto _ : state) benchmark::DoNotOptimize(solve_exact(p, 6, ExactOptions{threads}).value2);
}

BitMatrix random_bits(std::size_t n, double density) {
    std::mt19937_64 rng(3);
    std::bernoulli_distribution coin(density);
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (coin(rng)) m.set(i, j);
    return m;
}

void BM_BoolProduct(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    const BitMatrix a = random_bits(2048, 0.01), b = random_bits(2048, 0.01);
    for (auto _ : state) benchmark::DoNotOptimize(bool_matrix_multiply(a, b, threads).count());
}

void thread_args(benchmark::internal::Benchmark* b) {
    const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    b->Arg(1);
    for (int t = 2; t <= hw; t *= 2) b->Arg(t);
}

}  // namespace

BENCHMARK(BM_SolveExact)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BoolProduct)->Apply(thread_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
