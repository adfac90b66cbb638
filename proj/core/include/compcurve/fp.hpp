#ifndef COMPCURVE_FP_HPP
#define COMPCURVE_FP_HPP

#include <cstdint>
#include <iosfwd>

#include "compcurve/errors.hpp"
#include "compcurve/rational.hpp"

namespace compcurve {

bool is_prime_u64(std::uint64_t n);  // deterministic Miller-Rabin below 2^64

/* Prime field F_p, p an odd prime < 2^62, with Montgomery multiplication.
 * Elements are carried in Montgomery form by FpElem; the unit tests pin
 * every operation against plain __int128 modular arithmetic. */
class FpField {
   public:
    explicit FpField(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    std::uint64_t to_mont(std::uint64_t a) const { return mont_mul(a, r2_); }
    std::uint64_t from_mont(std::uint64_t m) const { return redc(m); }
    std::uint64_t mont_one() const { return one_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;  // p < 2^62, no overflow
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mont_mul(std::uint64_t a, std::uint64_t b) const {
        return redc(static_cast<unsigned __int128>(a) * b);
    }
    std::uint64_t mont_pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t mont_inv(std::uint64_t a) const;  // throws SingularError on zero

   private:
    std::uint64_t redc(unsigned __int128 t) const {
        std::uint64_t m = static_cast<std::uint64_t>(t) * ninv_;
        unsigned __int128 s = t + static_cast<unsigned __int128>(m) * p_;
        std::uint64_t r = static_cast<std::uint64_t>(s >> 64);
        return r >= p_ ? r - p_ : r;
    }

    std::uint64_t p_ = 0;
    std::uint64_t ninv_ = 0;  // -p^{-1} mod 2^64
    std::uint64_t r2_ = 0;    // 2^128 mod p
    std::uint64_t one_ = 0;   // 2^64 mod p
};

/* Field element tagged with its field. A default-constructed element is the
 * polymorphic zero: compatible with any field, absorbing under *, neutral
 * under +. Arithmetic between elements of distinct primes throws. */
class FpElem {
   public:
    FpElem() = default;
    FpElem(const FpField* f, std::uint64_t mont) : f_(f), v_(mont) {}

    static FpElem from_int(const FpField& f, std::int64_t a);
    static FpElem from_mpz(const FpField& f, const mpz_class& a);
    // Throws BadReductionError when p divides the denominator.
    static FpElem from_rational(const FpField& f, const Rational& r);

    const FpField* field() const { return f_; }
    bool is_zero_elem() const { return f_ == nullptr || v_ == 0; }
    std::uint64_t value() const { return f_ ? f_->from_mont(v_) : 0; }  // canonical residue
    std::uint64_t mont() const { return v_; }

    FpElem operator-() const { return f_ ? FpElem(f_, f_->neg(v_)) : FpElem(); }
    FpElem inv() const;
    FpElem pow(std::uint64_t e) const;

    friend FpElem operator+(const FpElem& a, const FpElem& b);
    friend FpElem operator-(const FpElem& a, const FpElem& b);
    friend FpElem operator*(const FpElem& a, const FpElem& b);
    friend bool operator==(const FpElem& a, const FpElem& b);
    friend bool operator!=(const FpElem& a, const FpElem& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const FpElem& e);

   private:
    const FpField* f_ = nullptr;
    std::uint64_t v_ = 0;
};

inline FpElem zero_like(const FpElem& w) {
    return w.field() ? FpElem(w.field(), 0) : FpElem();
}
inline FpElem one_like(const FpElem& w) {
    if (!w.field()) throw Error("one_like on a field-less zero element");
    return FpElem(w.field(), w.field()->mont_one());
}
inline bool same_field(const FpElem& a, const FpElem& b) {
    return !a.field() || !b.field() || a.field()->p() == b.field()->p();
}
inline bool is_zero(const FpElem& a) { return a.is_zero_elem(); }

}  // namespace compcurve

#endif
