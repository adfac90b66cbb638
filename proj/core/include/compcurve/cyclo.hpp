#ifndef COMPCURVE_CYCLO_HPP
#define COMPCURVE_CYCLO_HPP

#include <iosfwd>

#include "compcurve/poly.hpp"
#include "compcurve/rational.hpp"

namespace compcurve {

/* Element of the cyclotomic field Q(zeta_p) = Q[z]/Phi_p(z), p an odd
 * prime, Phi_p = 1 + z + ... + z^{p-1}. Residues are reduced eagerly after
 * every multiplication, so deg rep <= p-2 always holds. Odd primes up to
 * 31 are the tested configuration; larger p works but is slow. */
class CycloElem {
   public:
    CycloElem(long p, Poly<Rational> rep);
    static CycloElem zero(long p) { return CycloElem(p, Poly<Rational>()); }
    static CycloElem from_rational(long p, const Rational& r) {
        return CycloElem(p, Poly<Rational>::constant(r));
    }
    static CycloElem zeta(long p) {
        return CycloElem(p, Poly<Rational>::monomial(Rational(1), 1));
    }

    long p() const { return p_; }
    const Poly<Rational>& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero_poly(); }
    bool is_rational() const { return rep_.is_zero_poly() || rep_.degree() == 0; }
    Rational to_rational() const;  // throws PreconditionError if not rational

    CycloElem operator-() const { return unreduced(p_, -rep_); }
    friend CycloElem operator+(const CycloElem& x, const CycloElem& y);
    friend CycloElem operator-(const CycloElem& x, const CycloElem& y);
    friend CycloElem operator*(const CycloElem& x, const CycloElem& y);
    friend bool operator==(const CycloElem& x, const CycloElem& y);
    friend bool operator!=(const CycloElem& x, const CycloElem& y) { return !(x == y); }

    CycloElem inv() const;  // extended gcd with Phi_p; throws SingularError on zero
    CycloElem pow(long e) const;

    friend std::ostream& operator<<(std::ostream& os, const CycloElem& x);

   private:
    // Internal: already-reduced representative, skips the divrem.
    static CycloElem unreduced(long p, Poly<Rational> rep);

    long p_;
    Poly<Rational> rep_;
};

Poly<Rational> cyclotomic_poly(long p);  // 1 + z + ... + z^{p-1}
bool is_odd_prime(long p);

inline CycloElem zero_like(const CycloElem& w) { return CycloElem::zero(w.p()); }
inline CycloElem one_like(const CycloElem& w) {
    return CycloElem::from_rational(w.p(), Rational(1));
}
inline bool same_field(const CycloElem& x, const CycloElem& y) { return x.p() == y.p(); }
inline bool is_zero(const CycloElem& x) { return x.is_zero(); }

}  // namespace compcurve

#endif
