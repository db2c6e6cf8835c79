#include <benchmark/benchmark.h>

#include "isoell/families.hpp"
#include "isoell/pgl2.hpp"
#include "isoell/suite.hpp"

using namespace isoell;

static void BM_poly_product_of_linears(benchmark::State& state) {
    const u32 p = 11;
    MultiPoly x = MultiPoly::variable(p, "x"), z = MultiPoly::variable(p, "z");
    for (auto _ : state) {
        MultiPoly h = MultiPoly::constant(p, 1);
        for (u32 a = 2; a <= 9; ++a) h = h * (MultiPoly::constant(p, a) * x + z);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_poly_product_of_linears);

static void BM_trunc_invert(benchmark::State& state) {
    TruncatedAlgebra A(2, {{"t", 4}, {"s", 4}});
    TruncElt u = A.one() + A.gen("t") * A.gen("t") * A.gen("s");
    for (auto _ : state) benchmark::DoNotOptimize(u.inverse());
}
BENCHMARK(BM_trunc_invert);

static void BM_e2_associativity(benchmark::State& state) {
    TruncatedAlgebra A(2, {{"t", 4}, {"s", 4}, {"r", 4}});
    TruncElt t = A.gen("t"), s = A.gen("s"), r = A.gen("r");
    for (auto _ : state)
        benchmark::DoNotOptimize(e2_group_law(e2_group_law(t, s), r) ==
                                 e2_group_law(t, e2_group_law(s, r)));
}
BENCHMARK(BM_e2_associativity);

static void BM_fixed_point_scan_q8(benchmark::State& state) {
    TruncatedAlgebra A = mu2_algebra();
    ProjMat2 diag = embed_ordinary(0, mu2_generic_point(A));
    ProjMat2 swap = embed_ordinary(1, A.one());
    for (auto _ : state) benchmark::DoNotOptimize(scan_fixed_points({diag, swap}, 8));
}
BENCHMARK(BM_fixed_point_scan_q8);

static void BM_singular_scan_q25(benchmark::State& state) {
    auto eqs = space_curve_equations(concrete_space_family_p5());
    for (auto _ : state) benchmark::DoNotOptimize(singular_scan(eqs, 25));
}
BENCHMARK(BM_singular_scan_q25);

static void BM_full_report(benchmark::State& state) {
    SurfaceData d = space_family_to_surface(concrete_space_family_p5());
    for (auto _ : state) benchmark::DoNotOptimize(compute_report(d));
}
BENCHMARK(BM_full_report);

BENCHMARK_MAIN();
