#include <benchmark/benchmark.h>

#include "sunflower/generators.hpp"
#include "sunflower/ksets.hpp"
#include "sunflower/ramsey.hpp"
#include "sunflower/rng.hpp"
#include "sunflower/search.hpp"
#include "sunflower/witness.hpp"

using namespace sunflower;

namespace {

Structure edge() { return Structure(Signature({{"E", 2}}), 2, {{{0, 1}, {1, 0}}}); }

Structure path3() { return Structure(Signature({{"E", 2}}), 3, {{{0, 1}, {1, 0}, {1, 2}, {2, 1}}}); }

} // namespace

static void BM_CountEmbeddings(benchmark::State& state) {
    const auto g = gen_named(parse_generator("random-graph"), static_cast<std::size_t>(state.range(0)), 1).structure;
    const Structure p = path3();
    for (auto _ : state) benchmark::DoNotOptimize(count_embeddings(p, g));
}
BENCHMARK(BM_CountEmbeddings)->Arg(20)->Arg(40)->Arg(80);

static void BM_EnumeratePresentations(benchmark::State& state) {
    const Structure c(Signature{}, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_presentations(c, 2));
}
BENCHMARK(BM_EnumeratePresentations)->DenseRange(3, 6);

static void BM_GenWitnessHypergraph(benchmark::State& state) {
    WitnessGenOptions opt;
    opt.c_override = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(gen_witness_hypergraph(2, 2, 4, seed++, opt));
}
BENCHMARK(BM_GenWitnessHypergraph)->Arg(32)->Arg(128)->Arg(512);

static void BM_Girth(benchmark::State& state) {
    WitnessGenOptions opt;
    opt.c_override = static_cast<std::uint64_t>(state.range(0));
    const auto h = gen_witness_hypergraph(2, 1, 4, 1, opt);
    for (auto _ : state) benchmark::DoNotOptimize(hypergraph_girth(h));
}
BENCHMARK(BM_Girth)->Arg(64)->Arg(256);

static void BM_Extract(benchmark::State& state) {
    const auto chain = build_witness_chain(classes::graphs(), edge(), 2, 1);
    const Structure& top = chain.top();
    std::uint64_t t = 0;
    const std::size_t ground = state.range(0) ? 2 * top.size() : 24;
    for (auto _ : state) {
        state.PauseTiming();
        const auto p = random_presentation(top, 2, ground, t++);
        state.ResumeTiming();
        benchmark::DoNotOptimize(extract_sunflower(chain, p, 2));
    }
}
BENCHMARK(BM_Extract)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
