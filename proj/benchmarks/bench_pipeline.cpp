#include <benchmark/benchmark.h>

#include "x0quartic/auxdata.hpp"
#include "x0quartic/classifier.hpp"
#include "x0quartic/curvedb.hpp"
#include "x0quartic/oggfilter.hpp"
#include "x0quartic/pairing.hpp"

using namespace x0quartic;

namespace {

CurveDatabase const& db() {
    static CurveDatabase const d = load_database(X0Q_BENCH_DATA_DIR "/curves.jsonl");
    return d;
}

AuxFacts const& aux() {
    static AuxFacts const a = load_aux(X0Q_BENCH_DATA_DIR "/aux.jsonl");
    return a;
}

void BM_GramMatrix(benchmark::State& state) {
    auto const& e = db().at("37.a1");
    auto n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(pairing::gram_matrix(n, e));
}
BENCHMARK(BM_GramMatrix)->Arg(148)->Arg(222)->Arg(370);

void BM_OggRange(benchmark::State& state) {
    for (auto _ : state)
        for (std::int64_t n = 402; n <= 1000; ++n) benchmark::DoNotOptimize(oggfilter::d_elliptic_excluded(n, 4, 23));
}
BENCHMARK(BM_OggRange);

void BM_Classify(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classifier::classify(state.range(0), db(), aux()));
}
BENCHMARK(BM_Classify)->Arg(122)->Arg(148)->Arg(330);

void BM_Scan(benchmark::State& state) {
    auto jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(classifier::scan(1, classifier::kScanLimit, db(), aux(), jobs));
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
