/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/compat.hh>
#include <homcompat/generators.hh>
#include <homcompat/hom_poset.hh>
#include <homcompat/solvers.hh>
#include <homcompat/tucker.hh>

#include <benchmark/benchmark.h>

using namespace homcompat;

namespace
{
    auto bench_enumerate_hom(benchmark::State & state) -> void
    {
        auto host = kneser_graph(int(state.range(0)), 2);
        for (auto _ : state)
            benchmark::DoNotOptimize(enumerate_hom(host, 2));
    }

    auto bench_build_compat(benchmark::State & state) -> void
    {
        auto poset = enumerate_hom(kneser_graph(int(state.range(0)), 2), 2);
        for (auto _ : state)
            benchmark::DoNotOptimize(build_compat(poset));
    }

    auto bench_clique_number(benchmark::State & state) -> void
    {
        auto g = build_compat(enumerate_hom(kneser_graph(int(state.range(0)), 2), 2)).graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(clique_number(g));
    }

    auto bench_exact_chromatic(benchmark::State & state) -> void
    {
        auto g = build_compat(enumerate_hom(kneser_graph(int(state.range(0)), 2), 2)).graph;
        for (auto _ : state)
            benchmark::DoNotOptimize(exact_chromatic_number(g));
    }

    auto bench_find_bad_pair(benchmark::State & state) -> void
    {
        auto labeling = support_count_labeling(int(state.range(0)), 2);
        for (auto _ : state)
            benchmark::DoNotOptimize(find_bad_pair(labeling));
    }

    auto bench_refute_pullback(benchmark::State & state) -> void
    {
        auto p = pullback_tucker_params(int(state.range(0)), 2, 2);
        for (auto _ : state)
            benchmark::DoNotOptimize(refute_or_certify(p));
    }
}

BENCHMARK(bench_enumerate_hom)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_build_compat)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_clique_number)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_exact_chromatic)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(bench_find_bad_pair)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_refute_pullback)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
