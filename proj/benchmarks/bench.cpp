// Microbenchmarks for the solver hot paths. Instance sizes are kept modest
// so a full run stays under a minute.

#include <benchmark/benchmark.h>

#include "kneser/alternation.hpp"
#include "kneser/chen.hpp"
#include "kneser/chromatic.hpp"
#include "kneser/circular.hpp"
#include "kneser/families.hpp"
#include "kneser/fan.hpp"
#include "kneser/graph.hpp"
#include "kneser/hom.hpp"
#include "kneser/product_labeling.hpp"
#include "kneser/rng.hpp"
#include "kneser/two_coloring.hpp"
#include "kneser/witness_search.hpp"
#include "kneser/xind.hpp"

using namespace kneser;

namespace {

void BM_KneserGraphBuild(benchmark::State& state) {
    Hypergraph h = complete_uniform(int(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(kneser_graph(h));
}
BENCHMARK(BM_KneserGraphBuild)->Arg(7)->Arg(9);

void BM_ChromaticNumber(benchmark::State& state) {
    Graph g = kneser_graph(complete_uniform(int(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g).chi);
}
BENCHMARK(BM_ChromaticNumber)->Arg(5)->Arg(6)->Arg(7);

void BM_CircularChromatic(benchmark::State& state) {
    Graph g = kneser_graph(complete_uniform(5, 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(circular_chromatic_number(g).value.p);
}
BENCHMARK(BM_CircularChromatic);

void BM_Defect2Coloring(benchmark::State& state) {
    Hypergraph h = complete_uniform(int(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(cd2(h).value);
}
BENCHMARK(BM_Defect2Coloring)->Arg(6)->Arg(7);

void BM_AltIdentity(benchmark::State& state) {
    Hypergraph h = complete_uniform(int(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(alt_identity(h).value);
}
BENCHMARK(BM_AltIdentity)->Arg(7)->Arg(9);

void BM_FanChainCount(benchmark::State& state) {
    FanLabeling l = first_sign_labeling(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_negative_alternating_chains(l));
}
BENCHMARK(BM_FanChainCount)->Arg(5)->Arg(7);

void BM_ChenChainPair(benchmark::State& state) {
    FanLabeling l = first_sign_labeling(int(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(chen_chain_pair(l, 2).z);
}
BENCHMARK(BM_ChenChainPair)->Arg(5)->Arg(6);

void BM_HomK2(benchmark::State& state) {
    Graph g = kneser_graph(complete_uniform(5, 2));
    for (auto _ : state) benchmark::DoNotOptimize(hom_k2(g).poset.size);
}
BENCHMARK(BM_HomK2);

void BM_XindExact(benchmark::State& state) {
    HomK2 hom = hom_k2(kneser_graph(complete_uniform(5, 2)));
    for (auto _ : state)
        benchmark::DoNotOptimize(xind_exact(hom.poset).upper);
}
BENCHMARK(BM_XindExact);

void BM_FindKttStar(benchmark::State& state) {
    Graph g = kneser_graph(complete_uniform(5, 2));
    Coloring c = kneser_min_coloring(5, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_ktt_star(g, c, 3).has_value());
}
BENCHMARK(BM_FindKttStar);

void BM_ProductExtraction(benchmark::State& state) {
    std::vector<Hypergraph> hs{complete_uniform(5, 2), complete_uniform(5, 2)};
    for (auto _ : state) {
        auto ctx = ProductLabelingContext::build(hs);
        benchmark::DoNotOptimize(extract_ktt_star(ctx).t);
    }
}
BENCHMARK(BM_ProductExtraction);

void BM_SampleProductColoring(benchmark::State& state) {
    Graph g = categorical_product({kneser_graph(complete_uniform(5, 2)),
                                   kneser_graph(complete_uniform(5, 2))});
    Rng rng = make_rng(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_coloring(g, 3, rng).color[0]);
}
BENCHMARK(BM_SampleProductColoring);

} // namespace

BENCHMARK_MAIN();
