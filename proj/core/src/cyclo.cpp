#include "compcurve/cyclo.hpp"

#include <ostream>

namespace compcurve {

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

Poly<Rational> cyclotomic_poly(long p) {
    std::vector<Rational> c(static_cast<std::size_t>(p), Rational(1));
    return Poly<Rational>(std::move(c));
}

CycloElem::CycloElem(long p, Poly<Rational> rep) : p_(p) {
    if (!is_odd_prime(p)) throw PreconditionError("cyclotomic level must be an odd prime");
    if (!rep.is_zero_poly() && rep.degree() > p - 2)
        rep_ = poly_mod(rep, cyclotomic_poly(p));
    else
        rep_ = std::move(rep);
}

CycloElem CycloElem::unreduced(long p, Poly<Rational> rep) {
    CycloElem e = CycloElem::zero(p);
    e.rep_ = std::move(rep);
    return e;
}

Rational CycloElem::to_rational() const {
    if (!is_rational()) throw PreconditionError("cyclotomic element is not rational");
    return rep_.is_zero_poly() ? Rational(0) : rep_[0];
}

namespace {
void require_same(const CycloElem& x, const CycloElem& y) {
    if (x.p() != y.p()) throw FieldMismatchError("mixed cyclotomic levels");
}
}  // namespace

CycloElem operator+(const CycloElem& x, const CycloElem& y) {
    require_same(x, y);
    return CycloElem(x.p(), x.rep() + y.rep());
}

CycloElem operator-(const CycloElem& x, const CycloElem& y) {
    require_same(x, y);
    return CycloElem(x.p(), x.rep() - y.rep());
}

CycloElem operator*(const CycloElem& x, const CycloElem& y) {
    require_same(x, y);
    return CycloElem(x.p(), x.rep() * y.rep());
}

bool operator==(const CycloElem& x, const CycloElem& y) {
    return x.p() == y.p() && x.rep() == y.rep();
}

CycloElem CycloElem::inv() const {
    if (is_zero()) throw SingularError("inverse of zero cyclotomic element");
    // Phi_p is irreducible over Q, so gcd(rep, Phi_p) = 1 and the Bezout
    // coefficient of rep is the inverse mod Phi_p.
    auto eg = extended_gcd(rep_, cyclotomic_poly(p_));
    if (eg.g.degree() != 0) throw Error("cyclotomic inverse: gcd with Phi_p not constant");
    return CycloElem(p_, eg.s);
}

CycloElem CycloElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycloElem acc = one_like(*this), base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const CycloElem& x) {
    return os << "zeta" << x.p() << "[" << x.rep() << "]";
}

}  // namespace compcurve
