#include "compcurve/curve.hpp"

#include <sstream>

namespace compcurve {

std::string family_name(CurveFamily f) {
    switch (f) {
        case CurveFamily::Gamma1: return "gamma1";
        case CurveFamily::Gamma2: return "gamma2";
        case CurveFamily::GammaTilde: return "gamma-tilde";
        case CurveFamily::Theta1: return "theta1";
        case CurveFamily::Theta2: return "theta2";
        case CurveFamily::ThetaTilde: return "theta-tilde";
        case CurveFamily::Lambda1: return "lambda1";
        case CurveFamily::Lambda2: return "lambda2";
        case CurveFamily::LambdaTilde: return "lambda-tilde";
        case CurveFamily::Kummer: return "kummer";
        case CurveFamily::Baseline: return "baseline";
    }
    throw Error("unreachable curve family");
}

CurveFamily family_from_name(const std::string& name) {
    for (CurveFamily f :
         {CurveFamily::Gamma1, CurveFamily::Gamma2, CurveFamily::GammaTilde, CurveFamily::Theta1,
          CurveFamily::Theta2, CurveFamily::ThetaTilde, CurveFamily::Lambda1, CurveFamily::Lambda2,
          CurveFamily::LambdaTilde, CurveFamily::Kummer, CurveFamily::Baseline})
        if (family_name(f) == name) return f;
    throw ParseError("unknown curve family \"" + name + "\"");
}

WitnessFamily witness_family_for(CurveFamily f) {
    switch (f) {
        case CurveFamily::Gamma1:
        case CurveFamily::Gamma2:
        case CurveFamily::GammaTilde:
        case CurveFamily::Theta1:
        case CurveFamily::Theta2:
        case CurveFamily::ThetaTilde: return WitnessFamily::B;
        case CurveFamily::Lambda1:
        case CurveFamily::Lambda2:
        case CurveFamily::LambdaTilde: return WitnessFamily::Z;
        case CurveFamily::Kummer: return WitnessFamily::Kummer;
        case CurveFamily::Baseline: return WitnessFamily::Baseline;
    }
    throw Error("unreachable curve family");
}

int family_min_d(CurveFamily f) {
    switch (f) {
        case CurveFamily::Gamma1:
        case CurveFamily::Baseline: return 4;
        case CurveFamily::Gamma2:
        case CurveFamily::GammaTilde:
        case CurveFamily::Lambda1: return 3;
        case CurveFamily::Theta1:
        case CurveFamily::Theta2:
        case CurveFamily::ThetaTilde:
        case CurveFamily::Lambda2:
        case CurveFamily::LambdaTilde: return 2;
        case CurveFamily::Kummer: return 3;
    }
    throw Error("unreachable curve family");
}

CurvePoint CurvePoint::affine(Scalar px, Scalar py) {
    CurvePoint p;
    p.kind = Kind::Affine;
    p.x = std::move(px);
    p.y = std::move(py);
    return p;
}

CurvePoint CurvePoint::infinity(int sign) {
    CurvePoint p;
    p.kind = Kind::Infinity;
    p.inf_sign = sign;
    return p;
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == CurvePoint::Kind::Infinity) return a.inf_sign == b.inf_sign;
    return same_field(a.x, b.x) && same_field(a.y, b.y) && a.x == b.x && a.y == b.y;
}

namespace {

bool is_twist_family(CurveFamily f) {
    return f == CurveFamily::Gamma2 || f == CurveFamily::Theta2 || f == CurveFamily::Lambda2;
}

std::string key1(const char* base, int i) { return std::string(base) + "." + std::to_string(i); }
std::string key2(const char* base, int i, int j) {
    return std::string(base) + "." + std::to_string(i) + "." + std::to_string(j);
}

std::string lab1(const char* base, int i) {
    return std::string(base) + "[" + std::to_string(i) + "]";
}
std::string lab2(const char* base, int i, int j) {
    return std::string(base) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

int curve_d(const CompositeWitness& w) {
    switch (w.family) {
        case WitnessFamily::B:
        case WitnessFamily::Z:
            if (w.n % 2 != 0)
                throw PreconditionError("curve construction needs a witness with n = 2d blocks");
            return w.n / 2;
        case WitnessFamily::Kummer: return static_cast<int>(w.p);
        case WitnessFamily::Baseline: return w.n / 2;
    }
    throw Error("unreachable witness family");
}

std::vector<LabeledPoint> positive_points_impl(CurveFamily f, const CompositeWitness& w,
                                               const Poly<Rational>& h) {
    std::vector<LabeledPoint> out;
    const int n = w.n;
    auto hu = [&](int i) { return h(w.aux_value(key1("u", i))); };
    switch (f) {
        case CurveFamily::Gamma1:
        case CurveFamily::Baseline:
            for (int i = 1; i <= n; ++i)
                out.push_back({lab1("P", i),
                               CurvePoint::affine(Scalar(w.aux_value(key1("u", i))), Scalar(hu(i)))});
            break;
        case CurveFamily::Gamma2:
            for (int i = 1; i <= n; ++i)
                out.push_back({lab1("Q", i),
                               CurvePoint::affine(Scalar(w.aux_value(key1("u", i))),
                                                  Scalar(w.aux_value(key1("t", i)) * hu(i)))});
            break;
        case CurveFamily::GammaTilde:
            for (int i = 1; i <= n; ++i) {
                Rational y = hu(i);
                const Rational& ti = w.aux_value(key1("t", i));
                out.push_back({lab1("P~", i) + "+", CurvePoint::affine(Scalar(ti), Scalar(y))});
                out.push_back({lab1("P~", i) + "-", CurvePoint::affine(Scalar(-ti), Scalar(y))});
            }
            break;
        case CurveFamily::Theta1:
            for (int i = 1; i <= n; ++i) {
                Rational y = hu(i);
                for (int j = 1; j <= 3; ++j)
                    out.push_back({lab2("P", i, j),
                                   CurvePoint::affine(Scalar(w.aux_value(key2("U", i, j))), Scalar(y))});
            }
            break;
        case CurveFamily::Theta2:
            for (int i = 1; i <= n; ++i) {
                Rational y = hu(i);
                for (int j = 1; j <= 3; ++j)
                    out.push_back(
                        {lab2("Q", i, j),
                         CurvePoint::affine(Scalar(w.aux_value(key2("U", i, j))),
                                            Scalar(w.aux_value(key2("T", i, j)) * y))});
            }
            break;
        case CurveFamily::ThetaTilde:
            for (int i = 1; i <= n; ++i) {
                Rational y = hu(i);
                for (int j = 1; j <= 3; ++j) {
                    const Rational& Tij = w.aux_value(key2("T", i, j));
                    out.push_back({lab2("P~", i, j) + "+", CurvePoint::affine(Scalar(Tij), Scalar(y))});
                    out.push_back(
                        {lab2("P~", i, j) + "-", CurvePoint::affine(Scalar(-Tij), Scalar(y))});
                }
            }
            break;
        case CurveFamily::Lambda1:
            for (int i = 1; i <= n; ++i) {
                Rational y = hu(i);
                for (int j = 1; j <= 2; ++j)
                    out.push_back({lab2("P", i, j),
                                   CurvePoint::affine(Scalar(w.aux_value(key2("t", i, j))), Scalar(y))});
            }
            break;
        case CurveFamily::Lambda2:
            for (int i = 1; i <= n; ++i) {
                Rational y = hu(i);
                for (int j = 1; j <= 2; ++j)
                    out.push_back(
                        {lab2("Q", i, j),
                         CurvePoint::affine(Scalar(w.aux_value(key2("t", i, j))),
                                            Scalar(w.aux_value(key2("z", i, j)) * y))});
            }
            break;
        case CurveFamily::LambdaTilde:
            for (int i = 1; i <= n; ++i) {
                Rational y = hu(i);
                for (int j = 1; j <= 2; ++j) {
                    const Rational& zij = w.aux_value(key2("z", i, j));
                    out.push_back({lab2("P~", i, j) + "+", CurvePoint::affine(Scalar(zij), Scalar(y))});
                    out.push_back(
                        {lab2("P~", i, j) + "-", CurvePoint::affine(Scalar(-zij), Scalar(y))});
                }
            }
            break;
        case CurveFamily::Kummer: {
            const long p = w.p;
            const int e = w.block_size();
            if (e != static_cast<int>(p)) throw Error("kummer witness block size mismatch");
            for (int i = 1; i <= 6; ++i) {
                Rational y = hu(i);
                for (long j = 0; j < p; ++j) {
                    // roots are stored block-major: zeta^j t_i at offset (i-1)p + j
                    const Scalar& x = w.roots[static_cast<std::size_t>((i - 1) * p + j)];
                    out.push_back({lab2("P", i, static_cast<int>(j)), CurvePoint::affine(x, Scalar(y))});
                }
            }
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<LabeledPoint> canonical_positive_points(CurveFamily f, const CompositeWitness& w) {
    auto [h, l] = sqrt_approx(w.outer);
    (void)l;
    return positive_points_impl(f, w, h);
}

Poly<Rational> family_inner_poly(CurveFamily f, const CompositeWitness& w) {
    const Rational one(1), zero(0);
    switch (f) {
        case CurveFamily::Gamma1:
        case CurveFamily::Gamma2:
        case CurveFamily::Baseline: return Poly<Rational>::monomial(one, 1);
        case CurveFamily::GammaTilde: return Poly<Rational>::monomial(one, 2);
        case CurveFamily::Theta1:
        case CurveFamily::Theta2: {
            const Rational& b = w.aux_value("b");
            // ghat = x (x + b)^2 = x^3 + 2b x^2 + b^2 x
            return Poly<Rational>(std::vector<Rational>{zero, b * b, Rational(2) * b, one});
        }
        case CurveFamily::ThetaTilde:
        case CurveFamily::LambdaTilde:
        case CurveFamily::Kummer: return w.inner;
        case CurveFamily::Lambda1:
        case CurveFamily::Lambda2: {
            const Rational& b = w.aux_value("b");
            return Poly<Rational>(std::vector<Rational>{zero, -b, one});  // x^2 - bx
        }
    }
    throw Error("unreachable curve family");
}

Expected expected_counts(CurveFamily f, int d) {
    auto unsupported = [&]() -> UnsupportedError {
        return UnsupportedError("(" + family_name(f) + ", d=" + std::to_string(d) +
                                ") is outside the supported range (genus 0 or below table minimum)");
    };
    Expected e;
    switch (f) {
        case CurveFamily::Gamma1:
        case CurveFamily::Baseline:
            if (d < 4) throw unsupported();
            e.genus = (d - 2) / 2;
            e.points = 4L * d + (d % 2 == 0 ? 1 : 0);
            e.rank = 2L * d - 1;
            return e;
        case CurveFamily::Gamma2:
            if (d < 3) throw unsupported();
            e.genus = (d - 1) / 2;
            e.points = 4L * d + 1 + (d % 2 != 0 ? 1 : 0);
            e.rank = 2L * d;
            return e;
        case CurveFamily::GammaTilde:
            if (d < 3) throw unsupported();
            e.genus = d - 2;
            e.points = 8L * d;
            e.rank = d == 3 ? 6 : 4L * d - 1;
            return e;
        case CurveFamily::Theta1:
            if (d < 2) throw unsupported();
            e.genus = (3 * d - 4) / 2;
            e.points = 12L * d + (d % 2 == 0 ? 1 : 0);
            e.rank = d <= 3 ? 4L * d : 6L * d - 1;
            return e;
        case CurveFamily::Theta2:
            if (d < 2) throw unsupported();
            e.genus = (3 * d - 3) / 2;
            e.points = 12L * d + 1 + (d % 2 != 0 ? 1 : 0);
            e.rank = d == 2 ? 8 : 6L * d;
            return e;
        case CurveFamily::ThetaTilde:
            if (d < 2) throw unsupported();
            e.genus = 3 * d - 4;
            e.points = 24L * d;
            e.rank = d == 2 ? 16 : (d == 3 ? 30 : 12L * d - 1);
            return e;
        case CurveFamily::Lambda1:
            if (d < 3) throw unsupported();
            e.genus = d - 2;
            e.points = 8L * d;
            e.rank = d == 3 ? 6 : 4L * d - 1;
            return e;
        case CurveFamily::Lambda2:
            if (d < 2) throw unsupported();
            e.genus = d - 1;
            e.points = 8L * d + 2;
            e.rank = 4L * d;
            return e;
        case CurveFamily::LambdaTilde:
            if (d < 2) throw unsupported();
            e.genus = 2 * d - 3;
            e.points = 16L * d;
            e.rank = d == 2 ? 8 : (d == 3 ? 18 : 8L * d - 1);
            return e;
        case CurveFamily::Kummer:
            if (!is_odd_prime(d)) throw unsupported();
            e.genus = d - 1;
            e.points = 12L * d;
            e.rank = 6L * (d - 1);
            return e;
    }
    throw Error("unreachable curve family");
}

CurveSpec build_curve(CurveFamily f, const CompositeWitness& w) {
    if (w.family != witness_family_for(f))
        throw PreconditionError("witness family " + witness_family_name(w.family) +
                                " incompatible with curve family " + family_name(f));
    const int d = curve_d(w);
    const Expected expected = expected_counts(f, d);  // throws for genus-0 rows

    auto [h, l] = sqrt_approx(w.outer);
    const int dm = w.outer.degree() / 2;
    if (l.is_zero_poly() || l.degree() != dm - 1)
        throw DegeneracyError("square-root remainder degree dropped below d-1");

    const Poly<Rational> q = family_inner_poly(f, w);
    Poly<Rational> fx = compose(l, q);
    if (is_twist_family(f)) fx = fx * Poly<Rational>::monomial(Rational(1), 1);
    if (!is_squarefree(fx)) throw DegeneracyError("f not squarefree");

    CurveSpec c;
    c.family = f;
    c.d = d;
    c.f = std::move(fx);
    c.genus = (c.f.degree() - 1) / 2;
    c.witness = w;
    c.expected = expected;
    if (c.genus != expected.genus)
        throw Error("internal: genus from degree disagrees with table formula");

    std::vector<LabeledPoint> pos = positive_points_impl(f, w, h);
    c.points.reserve(2 * pos.size() + 2);
    for (const auto& lp : pos) c.points.push_back(lp.point);
    for (const auto& lp : pos)
        c.points.push_back(CurvePoint::affine(lp.point.x, -lp.point.y));
    if (is_twist_family(f))
        c.points.push_back(CurvePoint::affine(Scalar(Rational(0)), Scalar(Rational(0))));
    if (c.f.degree() % 2 != 0) c.points.push_back(CurvePoint::infinity());

    for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t j = i + 1; j < c.points.size(); ++j)
            if (c.points[i] == c.points[j]) throw DegeneracyError("coincident points");

    for (const auto& p : c.points) {
        if (p.kind != CurvePoint::Kind::Affine) continue;
        if (!(eval_scalar(c.f, p.x) == p.y * p.y))
            throw Error("internal: constructed point is off-curve");
    }
    if (static_cast<long>(c.points.size()) != expected.points)
        throw Error("internal: inventory size disagrees with table count");
    return c;
}

VerificationReport verify_points(const CurveSpec& c) {
    VerificationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back({name, pass, detail});
    };

    bool sf = false;
    std::string sf_detail;
    try {
        sf = is_squarefree(c.f);
        if (!sf) sf_detail = "f has a repeated factor";
    } catch (const Error& e) {
        sf_detail = e.what();
    }
    add("f_squarefree", sf, sf_detail);

    const bool genus_deg =
        !c.f.is_zero_poly() && c.f.degree() >= 3 && c.genus == (c.f.degree() - 1) / 2;
    add("genus_from_degree", genus_deg,
        genus_deg ? "" : "genus field does not match floor((deg f - 1)/2)");

    long expected_points = -1, expected_rank = -1;
    bool genus_table = false;
    try {
        Expected e = expected_counts(c.family, c.d);
        genus_table = (e.genus == c.genus);
        expected_points = e.points;
        expected_rank = e.rank;
    } catch (const UnsupportedError& e) {
        add("genus_matches_table", false, e.what());
    }
    if (expected_points >= 0)
        add("genus_matches_table", genus_table,
            genus_table ? "" : "genus disagrees with the family table");

    bool on_curve = true;
    std::string first_bad;
    long n_inf = 0;
    rep.point_on_curve.reserve(c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const auto& p = c.points[i];
        if (p.kind == CurvePoint::Kind::Infinity) {
            ++n_inf;
            rep.point_on_curve.push_back(true);
            continue;
        }
        bool ok = false;
        try {
            ok = (eval_scalar(c.f, p.x) == p.y * p.y);
        } catch (const Error&) {
            ok = false;
        }
        rep.point_on_curve.push_back(ok);
        if (!ok && on_curve) {
            on_curve = false;
            first_bad = "point index " + std::to_string(i) + " fails y^2 = f(x)";
        }
    }
    add("points_on_curve", on_curve, first_bad);
    const bool inf_ok = n_inf == (c.f.degree() % 2 != 0 ? 1 : 0);
    add("infinity_points", inf_ok,
        inf_ok ? "" : "wrong number of points at infinity for the model degree");

    bool distinct = true;
    for (std::size_t i = 0; i < c.points.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < c.points.size(); ++j)
            if (c.points[i] == c.points[j]) {
                distinct = false;
                break;
            }
    add("points_distinct", distinct, distinct ? "" : "duplicate points in the inventory");

    rep.point_count = static_cast<long>(c.points.size());
    rep.expected_points = expected_points;
    rep.expected_rank = expected_rank;
    if (expected_points >= 0) {
        add("point_count_at_least_table", rep.point_count >= expected_points,
            "have " + std::to_string(rep.point_count) + ", table " + std::to_string(expected_points));
        add("point_count_exact", rep.point_count == expected_points,
            "have " + std::to_string(rep.point_count) + ", table " + std::to_string(expected_points));
    }
    rep.rank_note = "rank R is a paper lower bound, not machine-certified";
    rep.all_pass = true;
    for (const auto& ck : rep.checks) rep.all_pass = rep.all_pass && ck.pass;
    return rep;
}

bool relation_witness_supported(CurveFamily f) {
    switch (f) {
        case CurveFamily::Gamma1:
        case CurveFamily::Theta1:
        case CurveFamily::ThetaTilde:
        case CurveFamily::Lambda1:
        case CurveFamily::LambdaTilde:
        case CurveFamily::Kummer:
        case CurveFamily::Baseline: return true;
        default: return false;
    }
}

WitnessReport relation_witness(const CurveSpec& c) {
    if (!relation_witness_supported(c.family))
        throw PreconditionError("relation_witness: family " + family_name(c.family) +
                                " has no y - h(q(x)) function witness");
    WitnessReport rep;
    auto [h, l] = sqrt_approx(c.witness.outer);
    const Poly<Rational> q = family_inner_poly(c.family, c.witness);
    const Poly<Rational> hq = compose(h, q);
    const Poly<Rational> lhs = hq * hq - compose(l, q);

    std::vector<LabeledPoint> pos = positive_points_impl(c.family, c.witness, h);
    bool cyclo = false;
    for (const auto& lp : pos)
        if (!lp.point.x.is_rational()) cyclo = true;

    rep.identity_pass = true;
    if (!cyclo) {
        std::vector<Rational> xs;
        xs.reserve(pos.size());
        for (const auto& lp : pos) xs.push_back(lp.point.x.rational());
        const Poly<Rational> rhs = product_of_linear(xs);
        const int top = std::max(lhs.degree(), rhs.degree());
        for (int i = 0; i <= top; ++i)
            if (!(lhs.coeff_or_zero(static_cast<std::size_t>(i), Rational(0)) ==
                  rhs.coeff_or_zero(static_cast<std::size_t>(i), Rational(0)))) {
                rep.identity_pass = false;
                rep.offending_coeff = i;
                break;
            }
    } else {
        const long p = c.witness.p;
        std::vector<CycloElem> xs;
        xs.reserve(pos.size());
        for (const auto& lp : pos) xs.push_back(lp.point.x.cyclo());
        const Poly<CycloElem> rhs = product_of_linear(xs);
        const CycloElem zero = CycloElem::zero(p);
        const int top = std::max(lhs.degree(), rhs.degree());
        for (int i = 0; i <= top; ++i) {
            CycloElem want = rhs.coeff_or_zero(static_cast<std::size_t>(i), zero);
            CycloElem have = CycloElem::from_rational(
                p, lhs.coeff_or_zero(static_cast<std::size_t>(i), Rational(0)));
            if (!(want == have)) {
                rep.identity_pass = false;
                rep.offending_coeff = i;
                break;
            }
        }
    }
    if (!rep.identity_pass)
        rep.detail = "h(q(x))^2 - l(q(x)) != prod (x - x_i) at coefficient " +
                     std::to_string(rep.offending_coeff);

    rep.points_pass = true;
    for (const auto& lp : pos) {
        Scalar qx = eval_scalar(q, lp.point.x);
        Scalar hy = eval_scalar(h, qx);
        bool listed = false;
        for (const auto& pt : c.points)
            if (pt == lp.point) {
                listed = true;
                break;
            }
        if (!(hy == lp.point.y) || !listed) {
            rep.points_pass = false;
            if (rep.detail.empty())
                rep.detail = "positive-branch point " + lp.label + " fails y = h(q(x))";
            break;
        }
    }
    rep.pass = rep.identity_pass && rep.points_pass;
    return rep;
}

bool two_torsion_supported(const CurveSpec& c) {
    return is_twist_family(c.family) && !c.f.is_zero_poly() && c.f.degree() % 2 != 0;
}

bool two_torsion_witness(const CurveSpec& c) {
    if (!is_twist_family(c.family))
        throw PreconditionError("two_torsion_witness: family " + family_name(c.family) +
                                " has no (0,0) Weierstrass point");
    if (c.f.is_zero_poly() || c.f.degree() % 2 == 0)
        throw PreconditionError("two_torsion_witness: needs an odd-degree model");
    const Rational c0 = c.f.coeff_or_zero(0, Rational(0));
    const Rational c1 = c.f.coeff_or_zero(1, Rational(0));
    return c0.is_zero() && !c1.is_zero();
}

CurveSpec forge_curve(CurveFamily f, int d_or_p, std::uint64_t seed, long height,
                      int max_retries) {
    expected_counts(f, d_or_p);  // reject unsupported (family, d) up front
    const WitnessFamily wf = witness_family_for(f);
    const int size = (wf == WitnessFamily::B || wf == WitnessFamily::Z) ? 2 * d_or_p : d_or_p;
    Rng rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        try {
            CompositeWitness w = sample_witness(wf, size, rng, height);
            w.seed = seed;
            return build_curve(f, w);
        } catch (const DegeneracyError&) {
        } catch (const SingularError&) {
        }
    }
    throw DegeneracyError("forging " + family_name(f) + " d=" + std::to_string(d_or_p) +
                          " exhausted " + std::to_string(max_retries) +
                          " attempts (seed=" + std::to_string(seed) + ")");
}

}  // namespace compcurve
