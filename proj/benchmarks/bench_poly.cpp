#include <benchmark/benchmark.h>

#include "compcurve/poly.hpp"
#include "compcurve/rng.hpp"

using namespace compcurve;

namespace {
Poly<Rational> random_monic(Rng& rng, int deg, long height) {
    std::vector<Rational> c;
    for (int i = 0; i < deg; ++i) c.push_back(rng.rational(height));
    c.emplace_back(1);
    return Poly<Rational>(std::move(c));
}
}  // namespace

static void PolyMul(benchmark::State& state) {
    Rng rng(1);
    Poly<Rational> a = random_monic(rng, static_cast<int>(state.range()), 1000);
    Poly<Rational> b = random_monic(rng, static_cast<int>(state.range()), 1000);
    for (auto _ : state) {
        auto c = a * b;
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range());
}
BENCHMARK(PolyMul)->RangeMultiplier(2)->Range(8, 128)->Complexity();

static void SqrtApprox(benchmark::State& state) {
    Rng rng(2);
    Poly<Rational> m = random_monic(rng, 2 * static_cast<int>(state.range()), 1000000);
    for (auto _ : state) {
        auto hl = sqrt_approx(m);
        benchmark::DoNotOptimize(hl);
    }
}
BENCHMARK(SqrtApprox)->Arg(5)->Arg(10)->Arg(20);

static void SubresultantGcd(benchmark::State& state) {
    Rng rng(3);
    Poly<Rational> g = random_monic(rng, 4, 100);
    Poly<Rational> a = random_monic(rng, static_cast<int>(state.range()), 100) * g;
    Poly<Rational> b = random_monic(rng, static_cast<int>(state.range()), 100) * g;
    for (auto _ : state) {
        auto d = gcd(a, b);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(SubresultantGcd)->Arg(8)->Arg(16)->Arg(32);
