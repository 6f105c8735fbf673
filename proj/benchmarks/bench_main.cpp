/* Micro-benchmarks for the hot paths: chain steps at simulation scale,
 * Frobenius sums, hook-length dimension counts, partition enumeration,
 * face tracing and the shape analysis kernels. */

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "phw/hurwitz.hpp"
#include "phw/limit_shape.hpp"
#include "phw/maps.hpp"
#include "phw/measures.hpp"
#include "phw/mh.hpp"
#include "phw/partition.hpp"
#include "phw/profile.hpp"
#include "phw/rng.hpp"
#include "phw/rsk.hpp"

namespace {

using namespace phw;

void BM_MhSteps(benchmark::State& state) {
    const MeasureSpec spec{2500, 7500, MeasureVariant::PositiveHalf};
    ChainConfig cfg;
    cfg.steps = static_cast<std::uint64_t>(state.range(0));
    cfg.burnin = cfg.steps; // no emissions, pure proposal throughput
    cfg.seed = 1;
    for (auto _ : state) {
        const MhResult r = mh_sample(spec, cfg, [](const MhSample&) {});
        benchmark::DoNotOptimize(r.final_content);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MhSteps)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_FrobeniusSum(benchmark::State& state) {
    const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        const BigCount h = hurwitz_number({n, 3 * n});
        benchmark::DoNotOptimize(h.get_mpz_t());
    }
}
BENCHMARK(BM_FrobeniusSum)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_DimSyt(benchmark::State& state) {
    // staircase (24, 23, …, 1): 300 boxes, 24 rows
    std::vector<std::uint32_t> parts;
    for (std::uint32_t k = 24; k >= 1; --k)
        parts.push_back(k);
    const Partition lam(std::move(parts));
    for (auto _ : state) {
        const BigCount f = dim_syt(lam);
        benchmark::DoNotOptimize(f.get_mpz_t());
    }
}
BENCHMARK(BM_DimSyt);

void BM_PartitionEnumeration(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        for_each_partition(n, [&](const Partition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(partition_count(
                                static_cast<unsigned>(n))));
}
BENCHMARK(BM_PartitionEnumeration)->Arg(40)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_FaceTracing(benchmark::State& state) {
    Rng rng(7);
    const TranspositionTuple t = random_tuple(1000, 3000, rng);
    for (auto _ : state) {
        const ComponentReport rep = component_report(HurwitzMap(t));
        benchmark::DoNotOptimize(rep.euler_total);
    }
}
BENCHMARK(BM_FaceTracing)->Unit(benchmark::kMicrosecond);

void BM_PlancherelRsk(benchmark::State& state) {
    Rng rng(11);
    for (auto _ : state) {
        const Partition p = plancherel_sample(1000, rng, PlancherelMethod::Rsk);
        benchmark::DoNotOptimize(p.length());
    }
}
BENCHMARK(BM_PlancherelRsk)->Unit(benchmark::kMicrosecond);

void BM_SupDistance(benchmark::State& state) {
    const Partition lam = warm_start_partition(2500, 7500);
    for (auto _ : state) {
        const double d = sup_distance(rescaled_profile(lam, 2500), true);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_SupDistance)->Unit(benchmark::kMicrosecond);

void BM_HookIntegral(benchmark::State& state) {
    const PolylineShape shape = PolylineShape::omega_interpolant(400);
    for (auto _ : state) {
        const double v = hook_integral(shape);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_HookIntegral)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
