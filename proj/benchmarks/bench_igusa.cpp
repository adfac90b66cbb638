#include <benchmark/benchmark.h>

#include "compcurve/curve.hpp"
#include "compcurve/igusa.hpp"
#include "compcurve/rng.hpp"

using namespace compcurve;

static void IgusaClebsch(benchmark::State& state) {
    Rng rng(4);
    std::vector<Rational> c;
    for (int i = 0; i < 6; ++i) c.push_back(rng.rational(static_cast<long>(state.range())));
    c.emplace_back(1);
    BinaryForm F = homogenize(Poly<Rational>(std::move(c)), 6);
    for (auto _ : state) {
        auto t = igusa_clebsch(F);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(IgusaClebsch)->Arg(100)->Arg(1000000);

static void ForgeThetaTilde(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto c = forge_curve(CurveFamily::ThetaTilde, static_cast<int>(state.range()), seed++);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(ForgeThetaTilde)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
