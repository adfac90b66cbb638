#ifndef COMPCURVE_RATIONAL_HPP
#define COMPCURVE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "compcurve/errors.hpp"

namespace compcurve {

/* Arbitrary-precision rational scalar. Always in lowest terms with positive
 * denominator; the canonical zero is 0/1. Equality is structural. */
class Rational {
   public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose, integers embed
    Rational(long n, long d);
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d);

    // Accepts "num" or "num/den" with optional sign, base 10.
    static Rational from_string(const std::string& s);
    // Always emits "num/den" (canonical, bit-exact round trip).
    std::string to_string() const;

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws SingularError on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inv() const;  // throws SingularError on zero
    Rational pow(long e) const;

    friend Rational abs(const Rational& r);
    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

   private:
    mpq_class q_;
};

// Coefficient-field plumbing shared by the generic polynomial template.
inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool same_field(const Rational&, const Rational&) { return true; }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace compcurve

#endif
