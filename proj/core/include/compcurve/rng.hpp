#ifndef COMPCURVE_RNG_HPP
#define COMPCURVE_RNG_HPP

#include <cstdint>

#include "compcurve/rational.hpp"

namespace compcurve {

/* Deterministic PRNG (splitmix64). All artifact randomness flows through
 * this so that a (command, config, seed) triple is fully reproducible,
 * independent of platform and standard library. */
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next();
    // Uniform in [0, bound), bound >= 1, rejection sampling (no modulo bias).
    std::uint64_t below(std::uint64_t bound);
    // Uniform integer in [lo, hi], inclusive.
    long range(long lo, long hi);
    // Numerator uniform in [-height, height], denominator uniform in [1, height].
    Rational rational(long height);
    Rational nonzero_rational(long height);

    // Independent stream for worker `stream`; depends only on the original
    // seed, never on how much this generator has been consumed.
    Rng fork(std::uint64_t stream) const;

    std::uint64_t seed() const { return seed_; }

   private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

}  // namespace compcurve

#endif
