#include "compcurve/jacobian.hpp"

namespace compcurve {

JacobianCurve::JacobianCurve(std::shared_ptr<const FpField> field, Poly<FpElem> f)
    : field_(std::move(field)), f_(std::move(f)) {
    if (f_.is_zero_poly() || f_.degree() < 3 || f_.degree() % 2 == 0)
        throw PreconditionError("JacobianCurve: f must have odd degree >= 3");
    if (!is_squarefree_generic(f_))
        throw PreconditionError("JacobianCurve: f must be squarefree over F_p");
    genus_ = (f_.degree() - 1) / 2;
}

bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) {
    if (!a.curve || !b.curve) throw PreconditionError("comparing unattached divisors");
    if (!(*a.curve == *b.curve)) throw PreconditionError("comparing divisors on distinct curves");
    return a.u == b.u && a.v == b.v;
}

MumfordDivisor jac_identity(const JacobianCurve& c) {
    MumfordDivisor d;
    d.curve = &c;
    d.u = Poly<FpElem>::constant(FpElem(&c.field(), c.field().mont_one()));
    return d;
}

MumfordDivisor make_divisor(const JacobianCurve& c, Poly<FpElem> u, Poly<FpElem> v) {
    if (u.is_zero_poly() || !u.is_monic())
        throw PreconditionError("Mumford u must be monic and nonzero");
    if (u.degree() > c.genus()) throw PreconditionError("Mumford u exceeds the genus bound");
    if (!v.is_zero_poly() && v.degree() >= u.degree())
        throw PreconditionError("Mumford v must have degree < deg u");
    Poly<FpElem> rem = poly_mod(v * v - c.f(), u);
    if (!rem.is_zero_poly()) throw PreconditionError("Mumford invariant u | v^2 - f violated");
    MumfordDivisor d;
    d.curve = &c;
    d.u = std::move(u);
    d.v = std::move(v);
    return d;
}

namespace {
void require_same_curve(const MumfordDivisor& a, const MumfordDivisor& b) {
    if (!a.curve || !b.curve) throw PreconditionError("unattached divisor");
    if (!(*a.curve == *b.curve)) throw PreconditionError("divisors live on distinct curves");
}

// Reduction half of Cantor's algorithm; (u, v) may exceed the genus bound.
MumfordDivisor cantor_reduce(const JacobianCurve& c, Poly<FpElem> u, Poly<FpElem> v) {
    const int g = c.genus();
    while (u.degree() > g) {
        Poly<FpElem> unew = exact_div(c.f() - v * v, u);
        unew = unew.monic();
        v = poly_mod(-v, unew);
        u = std::move(unew);
    }
    u = u.monic();
    MumfordDivisor d;
    d.curve = &c;
    d.u = std::move(u);
    d.v = std::move(v);
    return d;
}
}  // namespace

MumfordDivisor jac_add(const MumfordDivisor& d1, const MumfordDivisor& d2) {
    require_same_curve(d1, d2);
    const JacobianCurve& c = *d1.curve;

    // Cantor composition: d = gcd(u1, u2, v1 + v2) = s1 u1 + s2 u2 + s3 (v1+v2).
    auto g1 = extended_gcd(d1.u, d2.u);
    Poly<FpElem> vsum = d1.v + d2.v;
    auto g2 = extended_gcd(g1.g, vsum);
    const Poly<FpElem>& d = g2.g;
    Poly<FpElem> s1 = g2.s * g1.s;
    Poly<FpElem> s2 = g2.s * g1.t;
    const Poly<FpElem>& s3 = g2.t;

    Poly<FpElem> u = exact_div(d1.u * d2.u, d * d);
    Poly<FpElem> num = s1 * d1.u * d2.v + s2 * d2.u * d1.v + s3 * (d1.v * d2.v + c.f());
    Poly<FpElem> v = poly_mod(exact_div(num, d), u);
    return cantor_reduce(c, std::move(u), std::move(v));
}

MumfordDivisor jac_neg(const MumfordDivisor& d) {
    if (!d.curve) throw PreconditionError("unattached divisor");
    MumfordDivisor r = d;
    r.v = -d.v;
    return r;
}

MumfordDivisor jac_scalar_mul(long n, const MumfordDivisor& d) {
    if (!d.curve) throw PreconditionError("unattached divisor");
    if (n < 0) return jac_scalar_mul(-n, jac_neg(d));
    MumfordDivisor acc = jac_identity(*d.curve);
    MumfordDivisor base = d;
    unsigned long k = static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) acc = jac_add(acc, base);
        k >>= 1;
        if (k) base = jac_add(base, base);
    }
    return acc;
}

JacobianCurve reduce_curve(const CurveSpec& c, std::uint64_t p) {
    if (c.f.is_zero_poly() || c.f.degree() % 2 == 0)
        throw PreconditionError("reduce_curve: only odd-degree models reduce to Cantor form");
    if (p < 3) throw BadReductionError("p must be an odd prime > 2");
    auto field = std::make_shared<const FpField>(p);

    for (const auto& coeff : c.f.coeffs())
        if (mpz_fdiv_ui(coeff.den().get_mpz_t(), static_cast<unsigned long>(p)) == 0)
            throw BadReductionError("p=" + std::to_string(p) + " divides a coefficient denominator");
    for (const auto& pt : c.points) {
        if (pt.kind != CurvePoint::Kind::Affine) continue;
        if (!pt.x.is_rational() || !pt.y.is_rational())
            throw BadReductionError("non-rational point coordinates cannot be reduced mod p");
        for (const Rational* r : {&pt.x.rational(), &pt.y.rational()})
            if (mpz_fdiv_ui(r->den().get_mpz_t(), static_cast<unsigned long>(p)) == 0)
                throw BadReductionError("p=" + std::to_string(p) + " divides a point denominator");
    }

    std::vector<FpElem> coeffs;
    coeffs.reserve(c.f.coeffs().size());
    for (const auto& coeff : c.f.coeffs()) coeffs.push_back(FpElem::from_rational(*field, coeff));
    Poly<FpElem> fbar{std::move(coeffs)};
    if (fbar.is_zero_poly() || fbar.degree() != c.f.degree())
        throw BadReductionError("leading coefficient vanishes mod p=" + std::to_string(p));
    if (!is_squarefree_generic(fbar))
        throw BadReductionError("disc(f) = 0 mod p=" + std::to_string(p));
    return JacobianCurve(field, std::move(fbar));
}

MumfordDivisor reduce_point_class(const CurvePoint& p, const JacobianCurve& c) {
    if (p.kind == CurvePoint::Kind::Infinity) return jac_identity(c);
    if (!p.x.is_rational() || !p.y.is_rational())
        throw BadReductionError("non-rational point coordinates cannot be reduced mod p");
    FpElem a = FpElem::from_rational(c.field(), p.x.rational());
    FpElem b = FpElem::from_rational(c.field(), p.y.rational());
    Poly<FpElem> u(std::vector<FpElem>{-a, one_like(a)});
    Poly<FpElem> v = Poly<FpElem>::constant(b);
    return make_divisor(c, std::move(u), std::move(v));
}

MumfordDivisor eps_class(const CurvePoint& p, const JacobianCurve& c) {
    return jac_scalar_mul(2, reduce_point_class(p, c));
}

MumfordDivisor r_class(const CurvePoint& p, const CurvePoint& d0, const JacobianCurve& c) {
    return jac_add(reduce_point_class(p, c), jac_neg(reduce_point_class(d0, c)));
}

bool is_good_prime(const CurveSpec& c, std::uint64_t p) {
    if (!is_prime_u64(p) || p < 3) return false;
    try {
        reduce_curve(c, p);
        return true;
    } catch (const BadReductionError&) {
        return false;
    }
}

std::vector<std::uint64_t> find_good_primes(const CurveSpec& c, int count, std::uint64_t minimum) {
    std::vector<std::uint64_t> primes;
    std::uint64_t candidate = minimum < 3 ? 3 : minimum | 1;
    std::uint64_t guard = 0;
    constexpr std::uint64_t kGuardLimit = 1'000'000;
    while (static_cast<int>(primes.size()) < count) {
        if (++guard > kGuardLimit) throw Error("could not find enough good primes");
        if (is_good_prime(c, candidate)) primes.push_back(candidate);
        candidate += 2;
    }
    return primes;
}

}  // namespace compcurve
