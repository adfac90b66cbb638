#include "compcurve/rng.hpp"

namespace compcurve {

namespace {
std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace

std::uint64_t Rng::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("Rng::below(0)");
    if (bound == 1) return 0;
    // Largest multiple of bound that fits; reject above it.
    std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    for (;;) {
        std::uint64_t x = next();
        if (x < limit) return x % bound;
    }
}

long Rng::range(long lo, long hi) {
    if (lo > hi) throw PreconditionError("Rng::range with lo > hi");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(below(span));
}

Rational Rng::rational(long height) {
    if (height < 1) throw PreconditionError("Rng::rational with height < 1");
    long num = range(-height, height);
    long den = range(1, height);
    return Rational(num, den);
}

Rational Rng::nonzero_rational(long height) {
    for (;;) {
        Rational r = rational(height);
        if (!r.is_zero()) return r;
    }
}

Rng Rng::fork(std::uint64_t stream) const {
    return Rng(mix(seed_ ^ mix(stream + 0x1D8AF066D5D2F0E3ULL)));
}

}  // namespace compcurve
