#include "compcurve/poly.hpp"

#include <cstdint>

namespace compcurve {

namespace {

/* Integer-polynomial layer for the rational-coefficient routes: dense
 * vector<mpz_class>, index = degree, trimmed. The PRS runs on primitive
 * parts with fraction-free pseudo-remainders, which keeps intermediate
 * coefficient sizes polynomial in the input height. */
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }  // -1 for zero

mpz_class zcontent(const ZPoly& a) {
    mpz_class g(0);
    for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

void zdiv_content(ZPoly& a, const mpz_class& g) {
    if (sgn(g) == 0) return;
    for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// f = scale * F with F primitive; scale carries denominators and content.
ZPoly to_primitive(const Poly<Rational>& f, Rational* scale = nullptr) {
    ZPoly F;
    if (f.is_zero_poly()) {
        if (scale) *scale = Rational(0);
        return F;
    }
    mpz_class l(1);
    for (const auto& c : f.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    F.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        F.push_back(c.num() * q);
    }
    mpz_class g = zcontent(F);
    zdiv_content(F, g);
    if (scale) *scale = Rational(g, l);
    return F;
}

Poly<Rational> from_int(const ZPoly& a) {
    std::vector<Rational> c;
    c.reserve(a.size());
    for (const auto& v : a) c.emplace_back(v);
    return Poly<Rational>(std::move(c));
}

// Fraction-free reduction: returns (R, e) with lc(B)^e * A = Q*B + R and
// deg R < deg B; e counts the scaling rounds actually applied.
std::pair<ZPoly, int> prem_tracked(ZPoly a, const ZPoly& b) {
    int e = 0;
    const int db = zdeg(b);
    const mpz_class& c = b.back();
    while (!a.empty() && zdeg(a) >= db) {
        const int da = zdeg(a);
        mpz_class lead = a.back();
        for (auto& v : a) v *= c;
        ++e;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(da - db + j)] -= lead * b[static_cast<std::size_t>(j)];
        ztrim(a);
    }
    return {std::move(a), e};
}

/* Res over Z by the PRS recursion with an exact rational multiplier:
 *   lc(B)^e A = QB + R  =>  Res(A,B) = (-1)^{mn} lc(B)^{m-en-r} Res(B,R),
 * and stripping the content k of R costs a factor k^{deg B}. */
Rational res_int(ZPoly a, ZPoly b) {
    Rational acc(1);
    if (zdeg(a) < zdeg(b)) {
        if ((zdeg(a) % 2 != 0) && (zdeg(b) % 2 != 0)) acc = -acc;
        std::swap(a, b);
    }
    for (;;) {
        const int m = zdeg(a), n = zdeg(b);
        if (n == 0) return acc * Rational(b[0]).pow(m);
        auto [r, e] = prem_tracked(a, b);
        if (r.empty()) return Rational(0);
        const int rd = zdeg(r);
        mpz_class k = zcontent(r);
        zdiv_content(r, k);
        if ((m % 2 != 0) && (n % 2 != 0)) acc = -acc;
        acc *= Rational(b.back()).pow(static_cast<long>(m) - static_cast<long>(e) * n - rd);
        acc *= Rational(k).pow(n);
        a = std::move(b);
        b = std::move(r);
    }
}

constexpr std::uint64_t kCertPrimes[] = {1000000007ULL, 1000000009ULL, 1000000021ULL,
                                         1000000033ULL, 1000000087ULL, 1000000093ULL,
                                         1000000097ULL, 1000000103ULL};

std::uint64_t mulmod_u(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod_u(r, a, p);
        a = mulmod_u(a, a, p);
        e >>= 1;
    }
    return r;
}

void utrim(std::vector<std::uint64_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Degree of gcd(a, b) over F_p (monic Euclid); -1 if both zero.
int gcd_degree_mod_p(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t inv = powmod_u(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            std::uint64_t q = mulmod_u(a.back(), inv, p);
            const std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t s = mulmod_u(q, b[j], p);
                a[off + j] = (a[off + j] + p - s) % p;
            }
            utrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

std::vector<std::uint64_t> reduce_zpoly(const ZPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> r;
    r.reserve(f.size());
    for (const auto& v : f) {
        std::uint64_t u = mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
        r.push_back(u);
    }
    utrim(r);
    return r;
}

ZPoly zderivative(const ZPoly& f) {
    ZPoly d;
    if (f.size() <= 1) return d;
    d.reserve(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
    return d;
}

}  // namespace

Poly<Rational> gcd(const Poly<Rational>& f, const Poly<Rational>& g) {
    ZPoly a = to_primitive(f), b = to_primitive(g);
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = prem_tracked(a, b).first;
        zdiv_content(r, zcontent(r));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return Poly<Rational>();
    return from_int(a).monic();
}

Rational resultant(const Poly<Rational>& f, const Poly<Rational>& g) {
    if (f.is_zero_poly() || g.is_zero_poly())
        throw PreconditionError("resultant of zero polynomial");
    Rational sf, sg;
    ZPoly a = to_primitive(f, &sf), b = to_primitive(g, &sg);
    return sf.pow(g.degree()) * sg.pow(f.degree()) * res_int(std::move(a), std::move(b));
}

bool is_squarefree(const Poly<Rational>& f) {
    if (f.is_zero_poly() || f.degree() < 1)
        throw PreconditionError("is_squarefree: need degree >= 1");
    const ZPoly F = to_primitive(f);
    const ZPoly Fd = zderivative(F);
    // One-sided modular certificate: if gcd(F, F') mod p is constant for a
    // prime p not dividing lc(F), the rational gcd is constant too.
    for (std::uint64_t p : kCertPrimes) {
        if (mpz_fdiv_ui(F.back().get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
        int d = gcd_degree_mod_p(reduce_zpoly(F, p), reduce_zpoly(Fd, p), p);
        if (d == 0) return true;
    }
    // Exact fallback (reached when f genuinely has a repeated factor, or
    // all certificate primes were unlucky).
    return gcd(f, f.derivative()).degree() == 0;
}

Rational discriminant(const Poly<Rational>& f) {
    if (f.is_zero_poly() || f.degree() < 1)
        throw PreconditionError("discriminant: need degree >= 1");
    const int n = f.degree();
    Rational res = resultant(f, f.derivative());
    Rational d = res / f.leading();
    return (((static_cast<long>(n) * (n - 1)) / 2) % 2 != 0) ? -d : d;
}

}  // namespace compcurve
