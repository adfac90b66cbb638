#include "compcurve/rational.hpp"

#include <ostream>

namespace compcurve {

Rational::Rational(long n, long d) {
    if (d == 0) throw SingularError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw SingularError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s, 10);
            return Rational(n);
        }
        mpz_class n(s.substr(0, slash), 10);
        mpz_class d(s.substr(slash + 1), 10);
        if (sgn(d) == 0) throw ParseError("zero denominator in \"" + s + "\"");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational \"" + s + "\"");
    }
}

std::string Rational::to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw SingularError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw SingularError("inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rational base = *this, acc(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Rational abs(const Rational& r) {
    Rational a;
    a.q_ = abs(r.q_);
    return a;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace compcurve
