#include <benchmark/benchmark.h>

#include "compcurve/rng.hpp"
#include "compcurve/sieve.hpp"

using namespace compcurve;

static void CantorAdd(benchmark::State& state) {
    CurveSpec spec = forge_curve(state.range() == 2 ? CurveFamily::Lambda2 : CurveFamily::Theta2,
                                 3, 12345);
    std::uint64_t p = find_good_primes(spec, 1, 1000).front();
    JacobianCurve c = reduce_curve(spec, p);
    auto pos = canonical_positive_points(spec.family, spec.witness);
    MumfordDivisor a = jac_scalar_mul(3, reduce_point_class(pos[0].point, c));
    MumfordDivisor b = jac_scalar_mul(5, reduce_point_class(pos[1].point, c));
    for (auto _ : state) {
        auto s = jac_add(a, b);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(CantorAdd)->Arg(2)->Arg(3);  // genus 2 (lambda2) and 3 (theta2)

static void SieveLambda2(benchmark::State& state) {
    CurveSpec spec = forge_curve(CurveFamily::Lambda2, 3, 777);
    SieveParams params;
    params.prime_count = 1;
    params.bound = static_cast<int>(state.range());
    params.support = 2;
    for (auto _ : state) {
        auto rep = relation_sieve(spec, ClassKind::R, params);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(SieveLambda2)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
