#ifndef COMPCURVE_POLY_HPP
#define COMPCURVE_POLY_HPP

#include <algorithm>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

#include "compcurve/errors.hpp"
#include "compcurve/rational.hpp"

namespace compcurve {

/* Dense univariate polynomial over a coefficient field K. K must provide
 * +, -, *, inv(), ==, and the free functions zero_like / one_like /
 * same_field / is_zero. Index = degree; the invariant is that the
 * coefficient vector is empty (zero polynomial) or ends in a nonzero
 * coefficient. The zero polynomial reports the distinguished sentinel
 * degree kZeroDegree rather than -1, so accidental degree arithmetic on
 * it fails loudly in range checks instead of being off by one. */
template <class K>
class Poly {
   public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min() / 2;

    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(K v) {
        Poly p;
        if (!is_zero(v)) p.c_.push_back(std::move(v));
        return p;
    }
    // coeff * x^deg
    static Poly monomial(K coeff, int deg) {
        Poly p;
        if (is_zero(coeff)) return p;
        p.c_.assign(static_cast<std::size_t>(deg) + 1, zero_like(coeff));
        p.c_.back() = std::move(coeff);
        return p;
    }

    bool is_zero_poly() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }

    const std::vector<K>& coeffs() const { return c_; }

    const K& operator[](std::size_t i) const {
        if (i >= c_.size()) throw PreconditionError("coefficient index out of range");
        return c_[i];
    }
    // Coefficient of x^i, or zero beyond the degree (witness supplies the field).
    K coeff_or_zero(std::size_t i, const K& witness) const {
        return i < c_.size() ? c_[i] : zero_like(witness);
    }

    const K& leading() const {
        if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == one_like(c_.back()); }
    bool is_constant() const { return c_.size() <= 1; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_fields(a, b);
        Poly r;
        r.c_.reserve(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < std::max(a.c_.size(), b.c_.size()); ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                r.c_.push_back(a.c_[i] + b.c_[i]);
            else if (i < a.c_.size())
                r.c_.push_back(a.c_[i]);
            else
                r.c_.push_back(b.c_[i]);
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_fields(a, b);
        Poly r;
        if (a.c_.empty() || b.c_.empty()) return r;
        const K z = zero_like(a.c_.back());
        r.c_.assign(a.c_.size() + b.c_.size() - 1, z);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    Poly scaled(const K& s) const {
        Poly r;
        if (is_zero(s)) return r;
        r.c_.reserve(c_.size());
        for (const auto& v : c_) r.c_.push_back(v * s);
        r.trim();
        return r;
    }

    Poly monic() const {
        if (c_.empty()) throw PreconditionError("monic of zero polynomial");
        return scaled(leading().inv());
    }

    Poly derivative() const {
        Poly r;
        if (c_.size() <= 1) return r;
        r.c_.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            K m = zero_like(c_[i]);
            for (std::size_t k = 0; k < i; ++k) m = m + one_like(c_[i]);
            r.c_.push_back(c_[i] * m);
        }
        r.trim();
        return r;
    }

    // Horner evaluation, exact.
    K operator()(const K& a) const {
        if (c_.empty()) return zero_like(a);
        if (!same_field(c_.back(), a)) throw FieldMismatchError("eval: mixed coefficient fields");
        K acc = zero_like(a);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
        return acc;
    }

   private:
    static void check_fields(const Poly& a, const Poly& b) {
        if (!a.c_.empty() && !b.c_.empty() && !same_field(a.c_.back(), b.c_.back()))
            throw FieldMismatchError("polynomial operands over different coefficient fields");
    }

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

template <class K>
K eval(const Poly<K>& f, const K& a) {
    return f(a);
}

/* outer(inner), by Horner in the polynomial ring. Exact; with both factors
 * nonconstant the degree is deg(outer) * deg(inner). */
template <class K>
Poly<K> compose(const Poly<K>& outer, const Poly<K>& inner) {
    if (!outer.is_zero_poly() && !inner.is_zero_poly() &&
        !same_field(outer.leading(), inner.leading()))
        throw FieldMismatchError("compose: mixed coefficient fields");
    Poly<K> acc;
    for (std::size_t i = outer.coeffs().size(); i-- > 0;)
        acc = acc * inner + Poly<K>::constant(outer.coeffs()[i]);
    return acc;
}

template <class K>
Poly<K> poly_pow(const Poly<K>& base, unsigned e) {
    if (e == 0) {
        if (base.is_zero_poly()) throw PreconditionError("0^0 polynomial power");
        return Poly<K>::constant(one_like(base.leading()));
    }
    Poly<K> acc = base, b = base;
    --e;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

// prod (x - r) over the given roots.
template <class K>
Poly<K> product_of_linear(const std::vector<K>& roots) {
    if (roots.empty()) throw PreconditionError("product over empty root list");
    Poly<K> acc = Poly<K>::constant(one_like(roots.front()));
    for (const auto& r : roots) {
        Poly<K> lin(std::vector<K>{-r, one_like(r)});
        acc = acc * lin;
    }
    return acc;
}

// Quotient and remainder; the divisor's leading coefficient must be invertible.
template <class K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& num, const Poly<K>& den) {
    if (den.is_zero_poly()) throw SingularError("polynomial division by zero");
    if (num.is_zero_poly()) return {Poly<K>(), Poly<K>()};
    if (!same_field(num.leading(), den.leading()))
        throw FieldMismatchError("divrem: mixed coefficient fields");
    const K lc_inv = den.leading().inv();
    std::vector<K> rem = num.coeffs();
    const K z = zero_like(num.leading());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {Poly<K>(), num};
    std::vector<K> quot(static_cast<std::size_t>(dn - dd) + 1, z);
    for (int i = dn; i >= dd; --i) {
        K q = rem[static_cast<std::size_t>(i)] * lc_inv;
        if (is_zero(q)) continue;
        quot[static_cast<std::size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] =
                rem[static_cast<std::size_t>(i - dd + j)] - q * den.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> poly_mod(const Poly<K>& a, const Poly<K>& m) {
    return divrem(a, m).second;
}

// Exact division; throws if the remainder is nonzero.
template <class K>
Poly<K> exact_div(const Poly<K>& num, const Poly<K>& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero_poly()) throw PreconditionError("exact_div: division not exact");
    return q;
}

// Monic gcd by the Euclidean algorithm (any coefficient field). For
// rationals prefer the swell-controlled overload gcd() below.
template <class K>
Poly<K> gcd_monic(Poly<K> a, Poly<K> b) {
    while (!b.is_zero_poly()) {
        Poly<K> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero_poly()) return a;
    return a.monic();
}

// g = s*a + t*b with g monic (or zero when both inputs are zero).
template <class K>
struct ExtendedGcd {
    Poly<K> g, s, t;
};

template <class K>
ExtendedGcd<K> extended_gcd(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero_poly() && b.is_zero_poly()) return {Poly<K>(), Poly<K>(), Poly<K>()};
    const K one = one_like(a.is_zero_poly() ? b.leading() : a.leading());
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0 = Poly<K>::constant(one), s1;
    Poly<K> t0, t1 = Poly<K>::constant(one);
    while (!r1.is_zero_poly()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<K> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<K> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    K lc_inv = r0.leading().inv();
    return {r0.scaled(lc_inv), s0.scaled(lc_inv), t0.scaled(lc_inv)};
}

/* Square-root decomposition (the construction's workhorse): for monic M of
 * even degree 2d over a field in which 2 is invertible, the unique pair
 * (H, L) with H monic of degree d, deg L <= d-1 and M = H^2 - L. The H
 * coefficients are solved for top-down, one per compared coefficient. */
template <class K>
std::pair<Poly<K>, Poly<K>> sqrt_approx(const Poly<K>& m) {
    if (m.is_zero_poly() || m.degree() < 2 || m.degree() % 2 != 0)
        throw PreconditionError("sqrt_approx: need even degree >= 2");
    if (!m.is_monic()) throw PreconditionError("sqrt_approx: polynomial must be monic");
    const K one = one_like(m.leading());
    const K two = one + one;
    if (is_zero(two)) throw PreconditionError("sqrt_approx: characteristic 2 field");
    const K half = two.inv();
    const int d = m.degree() / 2;
    std::vector<K> h(static_cast<std::size_t>(d) + 1, zero_like(one));
    h[static_cast<std::size_t>(d)] = one;
    for (int j = 1; j <= d; ++j) {
        // known cross terms h_{d-k} h_{d-j+k}, 1 <= k <= j-1
        K cross = zero_like(one);
        for (int k = 1; k < j; ++k)
            cross = cross + h[static_cast<std::size_t>(d - k)] * h[static_cast<std::size_t>(d - j + k)];
        h[static_cast<std::size_t>(d - j)] =
            (m.coeff_or_zero(static_cast<std::size_t>(2 * d - j), one) - cross) * half;
    }
    Poly<K> H(std::move(h));
    Poly<K> L = H * H - m;
    if (!L.is_zero_poly() && L.degree() > d - 1)
        throw Error("sqrt_approx: internal degree bound violated");
    return {H, L};
}

// gcd(f, f') is constant <-> f squarefree. Generic route, exact.
template <class K>
bool is_squarefree_generic(const Poly<K>& f) {
    if (f.is_zero_poly() || f.degree() < 1)
        throw PreconditionError("is_squarefree: need degree >= 1");
    Poly<K> g = gcd_monic(f, f.derivative());
    return g.degree() == 0;
}

/* Resultant by the Euclidean remainder recursion over a field:
 * Res(A,B) = (-1)^{deg A deg B} lc(B)^{deg A - deg R} Res(B, R).
 * Fine for F_p; for rationals prefer resultant() below. */
template <class K>
K resultant_generic(Poly<K> a, Poly<K> b) {
    if (a.is_zero_poly() || b.is_zero_poly())
        throw PreconditionError("resultant of zero polynomial");
    K acc = one_like(a.leading());
    bool negate = false;
    for (;;) {
        if (a.degree() < b.degree()) {
            if ((a.degree() % 2 != 0) && (b.degree() % 2 != 0)) negate = !negate;
            std::swap(a, b);
        }
        if (b.degree() == 0) {
            K base = b.leading(), p = one_like(base);
            for (int i = 0; i < a.degree(); ++i) p = p * base;
            acc = acc * p;
            break;
        }
        Poly<K> r = poly_mod(a, b);
        if (r.is_zero_poly()) return zero_like(acc);  // positive-degree common factor
        K base = b.leading(), p = one_like(base);
        for (int i = 0; i < a.degree() - r.degree(); ++i) p = p * base;
        acc = acc * p;
        a = std::move(b);
        b = std::move(r);
    }
    return negate ? -acc : acc;
}

/* Rational-coefficient routes with swell control: gcd and resultant run on
 * primitive integer polynomials with fraction-free pseudo-remainders,
 * contents stripped at every step. */
Poly<Rational> gcd(const Poly<Rational>& f, const Poly<Rational>& g);  // monic
Rational resultant(const Poly<Rational>& f, const Poly<Rational>& g);
bool is_squarefree(const Poly<Rational>& f);

/* disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f), n = deg f >= 1. */
Rational discriminant(const Poly<Rational>& f);

template <class K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& p) {
    if (p.is_zero_poly()) return os << "0";
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        os << p.coeffs()[i];
        if (i > 0) os << "*x^" << i << " + ";
    }
    return os;
}

}  // namespace compcurve

#endif
