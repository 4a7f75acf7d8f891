#include <benchmark/benchmark.h>

#include "geoflow/hecke.hpp"
#include "geoflow/knotinv.hpp"
#include "geoflow/seifert.hpp"
#include "geoflow/tdl.hpp"
#include "geoflow/templates.hpp"

namespace {

void BM_EnumerateOrbitWords(benchmark::State& state) {
    const auto g = geoflow::build_group(5, geoflow::lattice_distance(5));
    const int max_len = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto words = geoflow::enumerate_orbit_words(g, max_len);
        benchmark::DoNotOptimize(words);
    }
}
BENCHMARK(BM_EnumerateOrbitWords)->Arg(4)->Arg(6)->Arg(8);

void BM_WordToMatrix(benchmark::State& state) {
    const auto g = geoflow::build_group(7, geoflow::lattice_distance(7));
    const geoflow::GroupWord w({1, 3, 2, 6, 4, 5, 1, 2, 3, 4});
    for (auto _ : state) benchmark::DoNotOptimize(geoflow::word_to_matrix(g, w));
}
BENCHMARK(BM_WordToMatrix);

void BM_OrbitDiagram(benchmark::State& state) {
    const auto t = geoflow::lorenz_template();
    const geoflow::GroupWord w({1, 1, 2, 1, 2, 2, 1, 1, 1, 2});
    for (auto _ : state) {
        auto d = geoflow::orbit_strands(t, {w});
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_OrbitDiagram);

void BM_PairLinking(benchmark::State& state) {
    const auto t = geoflow::hecke_template(5);
    const geoflow::GroupWord a({1, 2, 3, 4, 2, 3});
    const geoflow::GroupWord b({1, 3, 2, 4});
    for (auto _ : state) {
        auto d = geoflow::orbit_strands(t, {a, b});
        benchmark::DoNotOptimize(geoflow::linking_number(d, 0, 1));
    }
}
BENCHMARK(BM_PairLinking);

void BM_GenusPipeline(benchmark::State& state) {
    const auto t = geoflow::lorenz_template();
    const geoflow::GroupWord w({1, 2, 1, 2, 2, 1, 2, 2, 2, 2});
    for (auto _ : state) {
        auto d = geoflow::orbit_strands(t, {w});
        auto braid = geoflow::braid_from_diagram(d);
        benchmark::DoNotOptimize(geoflow::positive_braid_genus(braid));
        benchmark::DoNotOptimize(geoflow::seifert_circle_count(d));
    }
}
BENCHMARK(BM_GenusPipeline);

void BM_TdlRoundTrip(benchmark::State& state) {
    const auto desc = geoflow::tdl::hecke_description(9);
    for (auto _ : state) {
        auto text = geoflow::tdl::serialize(desc);
        benchmark::DoNotOptimize(geoflow::tdl::parse(text));
    }
}
BENCHMARK(BM_TdlRoundTrip);

void BM_LensNormalize(benchmark::State& state) {
    for (auto _ : state)
        for (long long c = -40; c <= 40; ++c)
            benchmark::DoNotOptimize(geoflow::lens_from_embedding(2, 9, c));
}
BENCHMARK(BM_LensNormalize);

}  // namespace

BENCHMARK_MAIN();
