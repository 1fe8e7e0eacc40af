#include <benchmark/benchmark.h>

#include <random>

#include "ehom/bitmatrix.hpp"
#include "ehom/burnside.hpp"
#include "ehom/permgroup.hpp"
#include "ehom/simplicial.hpp"

namespace {

ehom::BitMatrix random_matrix(std::size_t n) {
    std::mt19937_64 rng(12345);
    ehom::BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rng() & 1) m.set(r, c, true);
    return m;
}

// Torus triangulated as an m x m wrapped grid of squares.
ehom::SimplicialComplex grid_torus(int m) {
    auto vert = [&](int i, int j) { return ((i % m + m) % m) * m + ((j % m + m) % m); };
    std::vector<ehom::Simplex> facets;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            facets.push_back({vert(i, j), vert(i + 1, j), vert(i + 1, j + 1)});
            facets.push_back({vert(i, j), vert(i, j + 1), vert(i + 1, j + 1)});
        }
    return ehom::SimplicialComplex::from_facets(facets);
}

ehom::PermGroup s4() {
    return ehom::PermGroup::generate(4, {ehom::Perm({1, 0, 2, 3}), ehom::Perm({1, 2, 3, 0})});
}

void BM_RankDense(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ehom::rank(m));
}
BENCHMARK(BM_RankDense)->Arg(128)->Arg(512)->Arg(1024);

void BM_BettiGridTorus(benchmark::State& state) {
    const auto torus = grid_torus(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(torus.betti_mod2());
}
BENCHMARK(BM_BettiGridTorus)->Arg(8)->Arg(16);

void BM_SubgroupClassesS4(benchmark::State& state) {
    const auto g = s4();
    for (auto _ : state) benchmark::DoNotOptimize(ehom::subgroup_classes(g));
}
BENCHMARK(BM_SubgroupClassesS4);

void BM_MarksMatrixS4(benchmark::State& state) {
    const auto g = s4();
    for (auto _ : state) {
        ehom::BurnsideRing ring{g};
        benchmark::DoNotOptimize(ring.marks());
    }
}
BENCHMARK(BM_MarksMatrixS4);

void BM_BurnsideMultiplyS4(benchmark::State& state) {
    const ehom::BurnsideRing ring{s4()};
    std::vector<long long> a(ring.class_count(), 1), b(ring.class_count(), 2);
    for (auto _ : state) benchmark::DoNotOptimize(ring.multiply(a, b));
}
BENCHMARK(BM_BurnsideMultiplyS4);

}  // namespace

BENCHMARK_MAIN();
