#include <benchmark/benchmark.h>

#include "cartan/extensions.hpp"
#include "cartan/group.hpp"
#include "cartan/liealg.hpp"
#include "cartan/surface.hpp"
#include "cartan/vortex2d.hpp"
#include "cartan/vortex3d.hpp"

using namespace cartan;
using poly::RationalMap;

namespace {

void BM_Bracket(benchmark::State& state)
{
    const lie::AlgebraElement a{0.3, {0.1, 0.2}, {0.4, -0.1}, -1.0};
    const lie::AlgebraElement b{-0.7, {0.5, 0.0}, {0.0, 0.9}, -1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(lie::bracket(a, b));
    }
}
BENCHMARK(BM_Bracket);

void BM_MaurerCartanResiduals(benchmark::State& state)
{
    const auto pts = group::samplePoints(1.0, static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(group::maurerCartanResiduals(1.0, pts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MaurerCartanResiduals)->Arg(10)->Arg(100);

void BM_SurfaceFlatness(benchmark::State& state)
{
    const surface::SurfaceGeometry g{-1.0};
    const auto pts = surface::samplePoints(g, static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(surface::flatnessResidual(g, pts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SurfaceFlatness)->Arg(100);

void BM_VortexResiduals(benchmark::State& state)
{
    const auto vs = vortex2d::buildVortex(RationalMap::power(3), 1, 1);
    const auto pts = vortex2d::samplePoints(vs, static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vortex2d::vortexResiduals(vs, pts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VortexResiduals)->Arg(200);

void BM_FluxIntegral(benchmark::State& state)
{
    const auto vs = vortex2d::buildVortex(RationalMap::power(2), -1, -1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vortex2d::fluxIntegral(vs));
    }
}
BENCHMARK(BM_FluxIntegral)->Unit(benchmark::kMillisecond);

void BM_ConfigResiduals(benchmark::State& state)
{
    const auto vc = vortex3d::extractConfiguration(
        vortex3d::liftRationalMap(RationalMap::inversePower(2), vortex3d::LiftMode::Homogeneous, 0, -1));
    const auto pts = vortex3d::samplePoints(vc, static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(vortex3d::configResiduals(vc, pts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConfigResiduals)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Holonomy(benchmark::State& state)
{
    const auto vc = vortex3d::extractConfiguration(
        vortex3d::liftRationalMap(RationalMap::power(2), vortex3d::LiftMode::Homogeneous, 1, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(vortex3d::holonomy(vc));
    }
}
BENCHMARK(BM_Holonomy)->Unit(benchmark::kMillisecond);

void BM_AntiSelfDual(benchmark::State& state)
{
    const auto vs = vortex2d::buildVortex(RationalMap::power(2), 1, 1);
    const auto conn = ext::instantonConnection(vs);
    const auto pts = ext::productSamplePoints(vs, static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ext::asdResidual(vs, conn, pts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AntiSelfDual)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
