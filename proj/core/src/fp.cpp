#include "compcurve/fp.hpp"

#include <ostream>

namespace compcurve {

namespace {
std::uint64_t mulmod_plain(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

std::uint64_t powmod_plain(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod_plain(r, a, n);
        a = mulmod_plain(a, a, n);
        e >>= 1;
    }
    return r;
}
}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is known to be deterministic below 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_plain(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_plain(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FpField::FpField(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0) throw PreconditionError("FpField: p must be an odd prime");
    if (p >= (1ULL << 62)) throw PreconditionError("FpField: p must be < 2^62");
    if (!is_prime_u64(p)) throw PreconditionError("FpField: p failed the primality test");
    // Newton iteration for p^{-1} mod 2^64, then negate.
    std::uint64_t inv = p;
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    ninv_ = ~inv + 1;
    one_ = (~std::uint64_t{0}) % p + 1;  // 2^64 mod p
    if (one_ == p) one_ = 0;
    r2_ = mulmod_plain(one_, one_, p);
}

std::uint64_t FpField::mont_pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = one_;
    while (e) {
        if (e & 1) r = mont_mul(r, a);
        a = mont_mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t FpField::mont_inv(std::uint64_t a) const {
    if (a == 0) throw SingularError("inverse of zero in F_p");
    return mont_pow(a, p_ - 2);
}

FpElem FpElem::from_int(const FpField& f, std::int64_t a) {
    std::int64_t m = a % static_cast<std::int64_t>(f.p());
    if (m < 0) m += static_cast<std::int64_t>(f.p());
    return FpElem(&f, f.to_mont(static_cast<std::uint64_t>(m)));
}

FpElem FpElem::from_mpz(const FpField& f, const mpz_class& a) {
    mpz_class m = a % static_cast<unsigned long>(f.p());
    if (sgn(m) < 0) m += static_cast<unsigned long>(f.p());
    return FpElem(&f, f.to_mont(m.get_ui()));
}

FpElem FpElem::from_rational(const FpField& f, const Rational& r) {
    FpElem den = from_mpz(f, r.den());
    if (den.is_zero_elem())
        throw BadReductionError("denominator divisible by p=" + std::to_string(f.p()));
    return from_mpz(f, r.num()) * den.inv();
}

FpElem FpElem::inv() const {
    if (is_zero_elem()) throw SingularError("inverse of zero in F_p");
    return FpElem(f_, f_->mont_inv(v_));
}

FpElem FpElem::pow(std::uint64_t e) const {
    if (!f_) {
        if (e == 0) throw Error("0^0 over a field-less zero");
        return FpElem();
    }
    return FpElem(f_, f_->mont_pow(v_, e));
}

namespace {
void require_same(const FpElem& a, const FpElem& b) {
    if (a.field() && b.field() && a.field()->p() != b.field()->p())
        throw FieldMismatchError("F_p elements over distinct primes");
}
}  // namespace

FpElem operator+(const FpElem& a, const FpElem& b) {
    require_same(a, b);
    if (!a.field()) return b;
    if (!b.field()) return a;
    return FpElem(a.field(), a.field()->add(a.mont(), b.mont()));
}

FpElem operator-(const FpElem& a, const FpElem& b) {
    require_same(a, b);
    if (!b.field()) return a;
    if (!a.field()) return -b;
    return FpElem(a.field(), a.field()->sub(a.mont(), b.mont()));
}

FpElem operator*(const FpElem& a, const FpElem& b) {
    require_same(a, b);
    if (!a.field() || !b.field()) return FpElem();
    return FpElem(a.field(), a.field()->mont_mul(a.mont(), b.mont()));
}

bool operator==(const FpElem& a, const FpElem& b) {
    require_same(a, b);
    if (!a.field() || !b.field()) return a.is_zero_elem() && b.is_zero_elem();
    return a.mont() == b.mont();
}

std::ostream& operator<<(std::ostream& os, const FpElem& e) {
    if (!e.field()) return os << "0";
    return os << e.value() << " (mod " << e.field()->p() << ")";
}

}  // namespace compcurve
