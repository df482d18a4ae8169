#include <benchmark/benchmark.h>

#include <random>

#include "x0quartic/error.hpp"
#include "x0quartic/qflattice.hpp"

using namespace x0quartic;

namespace {

IntMatrix random_pd(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::int64_t> d(-4, 4);
    for (;;) {
        IntMatrix g(n, std::vector<std::int64_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            g[i][i] = 8 + d(rng) + 4;
            for (std::size_t j = 0; j < i; ++j) g[i][j] = g[j][i] = d(rng);
        }
        try {
            qflattice::ldl_decompose(g);
            return g;
        } catch (NotPositiveDefiniteError const&) {
        }
    }
}

void BM_Ldl(benchmark::State& state) {
    std::mt19937_64 rng(1);
    auto g = random_pd(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qflattice::ldl_decompose(g));
}
BENCHMARK(BM_Ldl)->DenseRange(2, 8, 2);

void BM_Enumerate(benchmark::State& state) {
    std::mt19937_64 rng(2);
    auto f = qflattice::ldl_decompose(random_pd(rng, static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(qflattice::enumerate_up_to(f, state.range(1)));
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{2, 4, 6}, {4, 16, 48}});

void BM_Minimum(benchmark::State& state) {
    std::mt19937_64 rng(3);
    auto f = qflattice::ldl_decompose(random_pd(rng, static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(qflattice::minimum(f));
}
BENCHMARK(BM_Minimum)->DenseRange(2, 6, 2);

}  // namespace
