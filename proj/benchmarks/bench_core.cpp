#include <benchmark/benchmark.h>

#include <random>

#include "conlab/catalog.hpp"
#include "conlab/dualizing.hpp"
#include "conlab/germ.hpp"
#include "conlab/matrix.hpp"
#include "conlab/semigroup.hpp"

namespace {

void BM_SemigroupConstruction(benchmark::State& state) {
    for (auto _ : state) {
        auto s = conlab::NumericalSemigroup::from_generators({8, 9});
        benchmark::DoNotOptimize(s.conductor());
    }
}
BENCHMARK(BM_SemigroupConstruction);

void BM_GermClosure(benchmark::State& state) {
    const auto s = conlab::NumericalSemigroup::from_generators({4, 6, 9});
    for (auto _ : state) {
        auto g = conlab::CurveGerm::from_semigroup(s);
        benchmark::DoNotOptimize(g.delta());
    }
}
BENCHMARK(BM_GermClosure);

void BM_OmegaMinGenerators(benchmark::State& state) {
    const auto g =
        conlab::CurveGerm::from_semigroup(conlab::NumericalSemigroup::from_generators({5, 7, 9}));
    for (auto _ : state) {
        auto mg = conlab::omega_min_generators(g);
        benchmark::DoNotOptimize(mg.cm_type);
    }
}
BENCHMARK(BM_OmegaMinGenerators);

void BM_RationalRank(benchmark::State& state) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> entry(-9, 9);
    conlab::RatMatrix m(12, 12);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = conlab::Rational(entry(rng), 1 + (entry(rng) + 9) % 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(conlab::rank(m));
}
BENCHMARK(BM_RationalRank);

void BM_CatalogReport(benchmark::State& state) {
    for (auto _ : state) {
        auto rows = conlab::catalog_report_rows();
        benchmark::DoNotOptimize(rows.size());
    }
}
BENCHMARK(BM_CatalogReport);

} // namespace

BENCHMARK_MAIN();
