#include <benchmark/benchmark.h>

#include <random>

#include "decinv/basisearch.hpp"
#include "decinv/binform.hpp"
#include "decinv/catalog.hpp"
#include "decinv/hilbert.hpp"
#include "decinv/modlin.hpp"
#include "decinv/nullcone.hpp"

using namespace decinv;

namespace {

FpPoly random_fp_poly(const VarSetPtr& vars, const FpRing& ring, int terms, int max_exp,
                      std::mt19937_64& rng) {
    std::vector<std::pair<Monomial, FpRing::Elt>> raw;
    int nv = static_cast<int>(vars->size());
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int v = 0; v < nv; ++v)
            m.set(v, static_cast<int>(rng_int(rng, 0, max_exp)));
        raw.emplace_back(m, ring.from_long(rng_int(rng, 1, 100)));
    }
    return FpPoly::from_terms(vars, ring, std::move(raw));
}

void BM_PolyMulFp(benchmark::State& state) {
    auto vars = VarSet::decimic();
    FpRing ring(109);
    std::mt19937_64 rng(1);
    FpPoly a = random_fp_poly(vars, ring, static_cast<int>(state.range(0)), 4, rng);
    FpPoly b = random_fp_poly(vars, ring, static_cast<int>(state.range(0)), 4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMulFp)->Arg(50)->Arg(200)->Arg(800);

void BM_TransvectantGenericDecimic(benchmark::State& state) {
    auto vars = VarSet::decimic();
    RatRing ring;
    QForm f = generic_form<RatRing>(10, vars, ring);
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(transvectant(f, f, k));
}
BENCHMARK(BM_TransvectantGenericDecimic)->Arg(2)->Arg(6)->Arg(10);

void BM_CatalogExpansion(benchmark::State& state) {
    auto vars = VarSet::decimic();
    FpRing ring(109);
    FpForm f = generic_form<FpRing>(10, vars, ring);
    for (auto _ : state) benchmark::DoNotOptimize(expand_entries(decimic_catalog(), f));
}
BENCHMARK(BM_CatalogExpansion);

void BM_SpanInsert(benchmark::State& state) {
    auto vars = VarSet::decimic();
    FpRing ring(109);
    std::mt19937_64 rng(2);
    MonomialInterner interner;
    std::vector<std::vector<FpRing::Elt>> rows;
    for (int i = 0; i < 200; ++i)
        rows.push_back(vectorize(random_fp_poly(vars, ring, 60, 3, rng), interner));
    for (auto _ : state) {
        IncrementalSpan span(ring.F);
        for (const auto& r : rows) {
            auto copy = r;
            span.insert(std::move(copy));
        }
        benchmark::DoNotOptimize(span.rank());
    }
}
BENCHMARK(BM_SpanInsert);

void BM_DimensionSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(poincare_table(10, 48));
}
BENCHMARK(BM_DimensionSeries);

} // namespace

BENCHMARK_MAIN();
