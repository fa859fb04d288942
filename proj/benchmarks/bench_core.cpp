#include <benchmark/benchmark.h>

#include <random>

#include "tangentlab/conditions.hpp"
#include "tangentlab/fibres.hpp"
#include "tangentlab/scenery.hpp"
#include "tangentlab/setmetric.hpp"
#include "tangentlab/views.hpp"

using namespace tangentlab;

namespace {

SelfAffineSystem e6() {
    std::vector<AffineMapSpec> maps;
    const char* ab[6][2] = {{"0", "0"}, {"0", "4/5"}, {"1/3", "3/10"}, {"1/3", "11/20"}, {"2/3", "0"}, {"2/3", "4/5"}};
    for (auto& m : ab) maps.emplace_back(Rational(1, 3), Rational(1, 5), parse_rational(m[0]), parse_rational(m[1]));
    return SelfAffineSystem(std::move(maps));
}

GridSet sparse(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::bernoulli_distribution bit(0.01);
    GridSet g(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (bit(gen)) g.set(i, j);
    g.set(0, 0);
    return g;
}

void BM_Hausdorff(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GridSet a = sparse(n, 1), b = sparse(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(hausdorff_squared_cells(a, b));
    state.SetComplexityN(static_cast<std::int64_t>(n) * n);
}
BENCHMARK(BM_Hausdorff)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oN);

void BM_ApproxView(benchmark::State& state) {
    const auto sys = e6();
    const Word x = sample_points(ProbVector::uniform(6), 0, 1, 64).front();
    const Window w(sys, x, 1e-3);
    const int K = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(approx_view(sys, w, K));
}
BENCHMARK(BM_ApproxView)->DenseRange(2, 6, 2);

void BM_ReferenceView(benchmark::State& state) {
    const auto sys = e6();
    const Word x = sample_points(ProbVector::uniform(6), 0, 1, 64).front();
    const Window w(sys, x, 1e-3);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rasterize(reference_view(sys, w, n).rects, n));
}
BENCHMARK(BM_ReferenceView)->Arg(256)->Arg(512);

void BM_FibreCover(benchmark::State& state) {
    const auto gl = *gl_alignment(e6());
    const int n = static_cast<int>(state.range(0));
    const auto address = column_address(gl, Rational(1, 10), n);
    for (auto _ : state) benchmark::DoNotOptimize(fibre_cover_exact(gl, address.letters, n));
}
BENCHMARK(BM_FibreCover)->DenseRange(2, 10, 4);

}  // namespace

BENCHMARK_MAIN();
